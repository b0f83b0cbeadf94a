#include "dilute/catalog.hpp"

#include <cmath>
#include <string>

#include "dilute/error.hpp"
#include "parallel.hpp"

namespace dilute {

namespace {

using K = GeneratorKind;
using F = RelationFamily;

AlgebraElement g(K kind, int site) { return AlgebraElement::gen(kind, site); }

std::string n(K kind, int site) { return std::string(kind_name(kind)) + std::to_string(site); }

struct Scalarset {
  Laurent sqrt_q;
  Laurent omega;
  Laurent omega_inv;
};

Scalarset scalars_for(Flavor flavor) {
  if (flavor == Flavor::dTL)
    return {Laurent::dtl_sqrt_q(), Laurent::dtl_omega(), Laurent::q_power(-3, -1)};
  return {Laurent::symbol(Symbol::SqrtQ), Laurent::symbol(Symbol::Omega),
          Laurent::symbol(Symbol::Omega, -1)};
}

class Builder {
 public:
  explicit Builder(RelationCatalog& cat) : cat_(cat) {}

  void add(F family, std::string name, AlgebraElement lhs, AlgebraElement rhs,
           bool orientation_sensitive = false) {
    cat_.relations.push_back(
        Relation{std::move(name), std::move(lhs), std::move(rhs), family, orientation_sensitive});
  }

 private:
  RelationCatalog& cat_;
};

// Eqs. 2-3: single-site projectors and the pair projectors built from them.
void projector_relations(Builder& b, int N) {
  const auto I = AlgebraElement::identity();
  const AlgebraElement zero;
  for (int j = 1; j <= N + 1; ++j) {
    const auto s = g(K::S, j), v = g(K::V, j);
    const auto sj = n(K::S, j), vj = n(K::V, j);
    b.add(F::ProjectorAlg, sj + "+" + vj + " = I", s + v, I);
    b.add(F::ProjectorAlg, sj + "." + sj + " = " + sj, s * s, s);
    b.add(F::ProjectorAlg, vj + "." + vj + " = " + vj, v * v, v);
    b.add(F::ProjectorAlg, sj + "." + vj + " = 0", s * v, zero);
    b.add(F::ProjectorAlg, vj + "." + sj + " = 0", v * s, zero);
  }
  for (int j = 1; j <= N + 1; ++j) {
    for (int k = j + 1; k <= N + 1; ++k) {
      b.add(F::ProjectorAlg, n(K::S, j) + "." + n(K::S, k) + " = " + n(K::S, k) + "." + n(K::S, j),
            g(K::S, j) * g(K::S, k), g(K::S, k) * g(K::S, j));
    }
  }
  for (int j = 1; j <= N; ++j) {
    const struct {
      K pair, left, right;
    } defs[] = {{K::Pss, K::S, K::S}, {K::Psv, K::S, K::V}, {K::Pvs, K::V, K::S}, {K::Pvv, K::V, K::V}};
    for (const auto& d : defs) {
      b.add(F::ProjectorAlg, n(d.pair, j) + " = " + n(d.left, j) + "." + n(d.right, j + 1),
            g(d.pair, j), g(d.left, j) * g(d.right, j + 1));
    }
  }
}

// generators on non-adjacent pairs commute.
void commutation_relations(Builder& b, int N) {
  std::vector<K> all;
  all.insert(all.end(), kProjectorKinds.begin(), kProjectorKinds.end());
  all.insert(all.end(), kBraidMonoidKinds.begin(), kBraidMonoidKinds.end());
  all.insert(all.end(), kDiluteKinds.begin(), kDiluteKinds.end());
  auto is_projector = [](K k) { return k == K::Pss || k == K::Psv || k == K::Pvs || k == K::Pvv; };
  for (int j = 1; j <= N; ++j) {
    for (int k = j + 2; k <= N; ++k) {
      for (K x : all) {
        for (K y : all) {
          if (is_projector(x) && is_projector(y)) continue;
          b.add(F::Commutation, n(x, j) + "." + n(y, k) + " = " + n(y, k) + "." + n(x, j),
                g(x, j) * g(y, k), g(y, k) * g(x, j));
        }
      }
    }
  }
}

// external legs of braid-monoid and dilute generators.
void external_leg_relations(Builder& b, int N) {
  for (int j = 1; j <= N; ++j) {
    for (K x : kBraidMonoidKinds) {
      b.add(F::ExternalLegs, n(K::Pss, j) + "." + n(x, j) + "." + n(K::Pss, j) + " = " + n(x, j),
            g(K::Pss, j) * g(x, j) * g(K::Pss, j), g(x, j));
    }
    const struct {
      K out, gen, in;
      bool orientation;
    } legs[] = {{K::Pvs, K::SlantF, K::Psv, true},
                {K::Psv, K::SlantB, K::Pvs, true},
                {K::Pvv, K::Cap, K::Pss, false},
                {K::Pss, K::Cup, K::Pvv, false}};
    for (const auto& l : legs) {
      b.add(F::ExternalLegs,
            n(l.out, j) + "." + n(l.gen, j) + "." + n(l.in, j) + " = " + n(l.gen, j),
            g(l.out, j) * g(l.gen, j) * g(l.in, j), g(l.gen, j), l.orientation);
    }
  }
}

// braid-monoid relations on the fully occupied sector.
void braid_monoid_relations(Builder& b, int N, const Scalarset& sc) {
  for (int j = 1; j <= N; ++j) {
    const auto B = g(K::Braid, j), Bi = g(K::BraidInv, j), E = g(K::E, j), P = g(K::Pss, j);
    const auto nb = n(K::Braid, j), nbi = n(K::BraidInv, j), ne = n(K::E, j), np = n(K::Pss, j);
    b.add(F::BraidMonoid, nb + "." + nbi + " = " + np, B * Bi, P);
    b.add(F::BraidMonoid, nbi + "." + nb + " = " + np, Bi * B, P);
    b.add(F::BraidMonoid, ne + "." + ne + " = sqrtQ." + ne, E * E, sc.sqrt_q * E);
    b.add(F::BraidMonoid, nb + "." + ne + " = omega." + ne, B * E, sc.omega * E);
    b.add(F::BraidMonoid, ne + "." + nb + " = omega." + ne, E * B, sc.omega * E);
    b.add(F::BraidMonoid, nbi + "." + ne + " = omega^-1." + ne, Bi * E, sc.omega_inv * E);
    b.add(F::BraidMonoid, ne + "." + nbi + " = omega^-1." + ne, E * Bi, sc.omega_inv * E);
  }
  for (int j = 1; j + 1 <= N; ++j) {
    const int k = j + 1;
    const auto Bj = g(K::Braid, j), Bk = g(K::Braid, k);
    const auto Bij = g(K::BraidInv, j), Bik = g(K::BraidInv, k);
    const auto Ej = g(K::E, j), Ek = g(K::E, k);
    const auto nbj = n(K::Braid, j), nbk = n(K::Braid, k);
    const auto nbij = n(K::BraidInv, j), nbik = n(K::BraidInv, k);
    const auto nej = n(K::E, j), nek = n(K::E, k);
    b.add(F::BraidMonoid, nbj + "." + nbk + "." + nbj + " = " + nbk + "." + nbj + "." + nbk,
          Bj * Bk * Bj, Bk * Bj * Bk);
    b.add(F::BraidMonoid, nej + "." + nek + "." + nej + " = " + nej + "." + n(K::Pss, k),
          Ej * Ek * Ej, Ej * g(K::Pss, k));
    b.add(F::BraidMonoid, nek + "." + nej + "." + nek + " = " + nek + "." + n(K::Pss, j),
          Ek * Ej * Ek, Ek * g(K::Pss, j));
    // Pulling a monoid generator through a pair of crossings, both orientations.
    b.add(F::BraidMonoid, nbj + "." + nbk + "." + nej + " = " + nek + "." + nej, Bj * Bk * Ej,
          Ek * Ej);
    b.add(F::BraidMonoid, nbk + "." + nbj + "." + nek + " = " + nej + "." + nek, Bk * Bj * Ek,
          Ej * Ek);
    b.add(F::BraidMonoid, nej + "." + nbk + "." + nbj + " = " + nej + "." + nek, Ej * Bk * Bj,
          Ej * Ek);
    b.add(F::BraidMonoid, nek + "." + nbj + "." + nbk + " = " + nek + "." + nej, Ek * Bj * Bk,
          Ek * Ej);
    b.add(F::BraidMonoid, nbij + "." + nbik + "." + nej + " = " + nek + "." + nej, Bij * Bik * Ej,
          Ek * Ej);
    b.add(F::BraidMonoid, nbik + "." + nbij + "." + nek + " = " + nej + "." + nek, Bik * Bij * Ek,
          Ej * Ek);
    b.add(F::BraidMonoid, nej + "." + nbik + "." + nbij + " = " + nej + "." + nek, Ej * Bik * Bij,
          Ej * Ek);
    b.add(F::BraidMonoid, nek + "." + nbij + "." + nbik + " = " + nek + "." + nej, Ek * Bij * Bik,
          Ek * Ej);
  }
}

// relations involving vacancies.
void dilute_relations(Builder& b, int N, const Scalarset& sc) {
  for (int j = 1; j <= N; ++j) {
    const auto SF = g(K::SlantF, j), SB = g(K::SlantB, j), Cap = g(K::Cap, j), Cup = g(K::Cup, j);
    const auto E = g(K::E, j);
    const auto nsf = n(K::SlantF, j), nsb = n(K::SlantB, j), ncap = n(K::Cap, j),
               ncup = n(K::Cup, j), ne = n(K::E, j);
    b.add(F::Dilute, nsf + "." + nsb + " = " + n(K::Pvs, j), SF * SB, g(K::Pvs, j), true);
    b.add(F::Dilute, nsb + "." + nsf + " = " + n(K::Psv, j), SB * SF, g(K::Psv, j), true);
    b.add(F::Dilute, ncap + "." + ne + " = sqrtQ." + ncap, Cap * E, sc.sqrt_q * Cap);
    b.add(F::Dilute, ne + "." + ncup + " = sqrtQ." + ncup, E * Cup, sc.sqrt_q * Cup);
    b.add(F::Dilute, ncap + "." + ncup + " = sqrtQ." + n(K::Pvv, j), Cap * Cup,
          sc.sqrt_q * g(K::Pvv, j));
    b.add(F::Dilute, ncup + "." + ncap + " = " + ne, Cup * Cap, E);
  }
  for (int j = 1; j + 1 <= N; ++j) {
    const int k = j + 1;
    const auto SFj = g(K::SlantF, j), SFk = g(K::SlantF, k);
    const auto SBj = g(K::SlantB, j), SBk = g(K::SlantB, k);
    const auto nsfj = n(K::SlantF, j), nsfk = n(K::SlantF, k);
    const auto nsbj = n(K::SlantB, j), nsbk = n(K::SlantB, k);
    // Slant transport of a cup / cap by one site.
    b.add(F::Dilute,
          nsfj + "." + nsfk + "." + n(K::Cup, j) + " = " + n(K::Pvs, j) + "." + n(K::Cup, k),
          SFj * SFk * g(K::Cup, j), g(K::Pvs, j) * g(K::Cup, k));
    b.add(F::Dilute,
          n(K::Cap, j) + "." + nsbk + "." + nsbj + " = " + n(K::Cap, k) + "." + n(K::Pvs, j),
          g(K::Cap, j) * SBk * SBj, g(K::Cap, k) * g(K::Pvs, j));
    // Straightening a zigzag: two slants equal a cap next to a cup.
    b.add(F::Dilute, nsfk + "." + nsfj + " = " + n(K::Cap, j) + "." + n(K::Cup, k), SFk * SFj,
          g(K::Cap, j) * g(K::Cup, k));
    b.add(F::Dilute, nsbj + "." + nsbk + " = " + n(K::Cap, k) + "." + n(K::Cup, j), SBj * SBk,
          g(K::Cap, k) * g(K::Cup, j));
    // Braid transport along a pair of slants.
    b.add(F::Dilute,
          nsfj + "." + nsfk + "." + n(K::Braid, j) + " = " + n(K::Braid, k) + "." + nsfj + "." + nsfk,
          SFj * SFk * g(K::Braid, j), g(K::Braid, k) * SFj * SFk);
    b.add(F::Dilute,
          n(K::Braid, j) + "." + nsbk + "." + nsbj + " = " + nsbk + "." + nsbj + "." + n(K::Braid, k),
          g(K::Braid, j) * SBk * SBj, SBk * SBj * g(K::Braid, k));
  }
}

// Eqs. 8-9: polynomial identities defining the quotient.
void quotient_relations(Builder& b, int N, Flavor flavor) {
  const AlgebraElement zero;
  for (int j = 1; j <= N; ++j) {
    const auto B = g(K::Braid, j), Bi = g(K::BraidInv, j), E = g(K::E, j), P = g(K::Pss, j);
    const auto nb = n(K::Braid, j), ne = n(K::E, j), np = n(K::Pss, j);
    const auto b_minus_qinv = B - Laurent::q_power(-1) * P;
    if (flavor == Flavor::dTL) {
      b.add(F::Quotient, "(" + nb + "-q^-1." + np + ").(" + nb + "+q^3." + np + ") = 0",
            b_minus_qinv * (B + Laurent::q_power(3) * P), zero);
      b.add(F::Quotient, ne + " = q^-1.(" + nb + "-q^-1." + np + ")", E,
            Laurent::q_power(-1) * b_minus_qinv);
    } else {
      const auto b_plus_q = B + Laurent::q_power(1) * P;
      const auto b_minus_omega = B - Laurent::symbol(Symbol::Omega) * P;
      b.add(F::Quotient,
            "(" + nb + "-q^-1." + np + ").(" + nb + "+q." + np + ").(" + nb + "-omega." + np + ") = 0",
            b_minus_qinv * b_plus_q * b_minus_omega, zero);
      b.add(F::Quotient,
            ne + " = omega^-1/(q-q^-1).(" + nb + "-q^-1." + np + ").(" + nb + "+q." + np + ")", E,
            (Laurent::symbol(Symbol::Omega, -1) * Laurent::symbol(Symbol::InvQDiff)) *
                (b_minus_qinv * b_plus_q));
      b.add(F::Quotient,
            ne + " = " + np + "+(" + nb + "-" + n(K::BraidInv, j) + ")/(q-q^-1)", E,
            P + Laurent::symbol(Symbol::InvQDiff) * (B - Bi));
    }
  }
}

}  // namespace

std::string_view to_string(RelationFamily f) {
  switch (f) {
    case F::ProjectorAlg: return "ProjectorAlg";
    case F::Commutation: return "Commutation";
    case F::ExternalLegs: return "ExternalLegs";
    case F::BraidMonoid: return "BraidMonoid";
    case F::Dilute: return "Dilute";
    case F::Quotient: return "Quotient";
  }
  return "?";
}

std::vector<const Relation*> RelationCatalog::family(RelationFamily f) const {
  std::vector<const Relation*> out;
  for (const auto& r : relations)
    if (r.family == f) out.push_back(&r);
  return out;
}

const Relation* RelationCatalog::find(std::string_view name) const {
  for (const auto& r : relations)
    if (r.name == name) return &r;
  return nullptr;
}

RelationCatalog build_catalog(Flavor flavor, int N) {
  if (N < 1) throw Error(ErrorKind::InvalidArgument, "catalog needs N >= 1");
  RelationCatalog cat;
  cat.flavor = flavor;
  cat.N = N;
  Builder b(cat);
  const Scalarset sc = scalars_for(flavor);
  projector_relations(b, N);
  commutation_relations(b, N);
  external_leg_relations(b, N);
  braid_monoid_relations(b, N, sc);
  dilute_relations(b, N, sc);
  quotient_relations(b, N, flavor);
  return cat;
}

std::vector<std::string> CheckReport::failures() const {
  std::vector<std::string> out;
  for (const auto& r : results)
    if (!r.passed) out.push_back(r.name);
  return out;
}

CheckReport check_relations(const Representation& rep, const RelationCatalog& catalog, double tol,
                            int jobs) {
  if (!(tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
  if (!catalog.relations.empty() && rep.sites() < catalog.N + 1)
    throw Error(ErrorKind::SymbolOutOfRange,
                "representation has " + std::to_string(rep.sites()) + " sites, catalog needs " +
                    std::to_string(catalog.N + 1));
  CheckReport report;
  report.tol = tol;
  report.results.resize(catalog.relations.size());
  detail::parallel_for(catalog.relations.size(), jobs, [&](std::size_t i) {
    const Relation& rel = catalog.relations[i];
    const Eigen::MatrixXcd lhs = eval_element(rep, rel.lhs);
    const Eigen::MatrixXcd rhs = eval_element(rep, rel.rhs);
    const double residual = (lhs - rhs).norm() / std::max(1.0, lhs.norm());
    report.results[i] = RelationResult{rel.name, rel.family, residual,
                                       std::isfinite(residual) && residual <= tol,
                                       rel.orientation_sensitive};
  });
  for (const auto& r : report.results) {
    double& fam = report.family_max[r.family];
    fam = std::max(fam, r.residual);
    if (!std::isfinite(r.residual)) report.max_residual = r.residual;
    else report.max_residual = std::max(report.max_residual, r.residual);
    report.passed = report.passed && r.passed;
  }
  return report;
}

}  // namespace dilute
