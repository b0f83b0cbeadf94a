#include <gtest/gtest.h>

#include <random>
#include <set>

#include "dilute/algebra.hpp"
#include "dilute/catalog.hpp"
#include "dilute/error.hpp"
#include "dilute/serialize.hpp"
#include "dilute/vertex_rep.hpp"
#include "oracles.hpp"

using namespace dilute;
using K = GeneratorKind;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::Io;
}

}  // namespace

TEST(Generator, RangeRules) {
  EXPECT_TRUE(in_range({K::S, 4}, 3));
  EXPECT_FALSE(in_range({K::S, 5}, 3));
  EXPECT_TRUE(in_range({K::Cap, 3}, 3));
  EXPECT_FALSE(in_range({K::Cap, 4}, 3));
  EXPECT_FALSE(in_range({K::E, 0}, 3));
  EXPECT_EQ(kind_of([] { require_in_range({K::Braid, 9}, 2); }), ErrorKind::SymbolOutOfRange);
}

TEST(Generator, NamesRoundTrip) {
  for (int k = 0; k <= static_cast<int>(K::Cup); ++k) {
    const auto kind = static_cast<K>(k);
    EXPECT_EQ(kind_from_name(kind_name(kind)), kind);
  }
  EXPECT_FALSE(kind_from_name("Twist").has_value());
}

TEST(AlgebraElement, CanonicalForm) {
  auto e = AlgebraElement::gen(K::E, 1);
  EXPECT_TRUE((e - e).is_zero());
  EXPECT_EQ(e + e, Laurent(2) * e);
  EXPECT_EQ(AlgebraElement::gen(K::Id) * e, e);
  EXPECT_EQ(e * AlgebraElement::identity(), e);
  EXPECT_EQ((e * AlgebraElement::gen(K::Cap, 2)).max_site(), 2);
}

TEST(AlgebraElement, ProductConcatenatesWords) {
  auto a = AlgebraElement::gen(K::Cap, 1), b = AlgebraElement::gen(K::Cup, 1);
  const auto ab = a * b;
  ASSERT_EQ(ab.terms().size(), 1u);
  const Word& w = ab.terms().begin()->first;
  ASSERT_EQ(w.size(), 2u);
  EXPECT_EQ(w[0].kind, K::Cap);
  EXPECT_EQ(w[1].kind, K::Cup);
}

TEST(Params, DtlValues) {
  const auto p = derive_params(Flavor::dTL, 0.6);
  const cplx q = std::exp(cplx{0, -0.6});
  EXPECT_NEAR(std::abs(p.q - q), 0, 1e-15);
  EXPECT_NEAR(std::abs(p.omega + q * q * q), 0, 1e-15);
  EXPECT_NEAR(std::abs(p.sqrt_q - oracle::dtl_sqrt_q(0.6)), 0, 1e-14);
  EXPECT_EQ(p.sigma, -1);
  EXPECT_EQ(p.eta, cplx(1.5));
}

TEST(Params, PiOverFive) {
  const auto p = derive_params(Flavor::dTL, M_PI / 5);
  EXPECT_NEAR(p.sqrt_q.real(), -0.618034, 1e-6);
}

TEST(Params, DbwmAtDtlPointGivesThreeHalves) {
  const cplx q = std::exp(cplx{0, -0.6});
  const auto p = derive_params(Flavor::dBWM, 0.6, -q * q * q, -1);
  EXPECT_NEAR(std::abs(p.eta - 1.5), 0, 1e-13);
  EXPECT_NEAR(std::abs(p.sqrt_q - oracle::dtl_sqrt_q(0.6)), 0, 1e-13);
  EXPECT_EQ(p.eta_branch, 0);
}

TEST(Params, DbwmLoopWeightFormula) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> lam(0.2, 1.3), ph(-3, 3);
  for (int k = 0; k < 20; ++k) {
    const double l = lam(rng);
    const cplx w = std::polar(1.0, ph(rng));
    for (int s : {-1, 1}) {
      AlgebraParams p;
      try {
        p = derive_params(Flavor::dBWM, l, w, s);
      } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DegenerateParams);
        continue;
      }
      const cplx q = std::exp(cplx{0, -l});
      EXPECT_NEAR(std::abs(p.sqrt_q - (1.0 + (w - 1.0 / w) / (q - 1.0 / q))), 0, 1e-12);
      EXPECT_NEAR(std::abs(std::pow(q, 2.0 * p.eta) - double(s) * w), 0, 1e-12);
    }
  }
}

TEST(ParamsProperty, DtlSatisfiesTheTwistConstraint) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> lam(0.05, 3.0);
  for (int k = 0; k < 20; ++k) {
    const double l = lam(rng);
    AlgebraParams p;
    try {
      p = derive_params(Flavor::dTL, l);
    } catch (const Error&) {
      continue;
    }
    EXPECT_NEAR(std::abs(std::pow(p.q, 2.0 * p.eta) - double(p.sigma) * p.omega), 0, 1e-12);
  }
}

TEST(Params, Errors) {
  EXPECT_EQ(kind_of([] { derive_params(Flavor::dTL, 0.0); }), ErrorKind::DegenerateParams);
  EXPECT_EQ(kind_of([] { derive_params(Flavor::dTL, M_PI); }), ErrorKind::DegenerateParams);
  // sin(3 lambda / 2) = 0
  EXPECT_EQ(kind_of([] { derive_params(Flavor::dTL, 2 * M_PI / 3); }), ErrorKind::DegenerateParams);
  EXPECT_EQ(kind_of([] { derive_params(Flavor::dTL, 0.6, cplx(1.0), -1); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { derive_params(Flavor::dBWM, 0.6); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { derive_params(Flavor::dBWM, 0.6, cplx(1.0), 2); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { derive_params(Flavor::dBWM, 0.6, cplx(0.0), 1); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { derive_params(Flavor::dBWM, M_PI / 2, cplx(2.0), 1); }), ErrorKind::DegenerateParams);
}

TEST(Catalog, ContainsNamedRelations) {
  const auto c = build_catalog(Flavor::dTL, 1);
  EXPECT_NE(c.find("Cap1.Cup1 = sqrtQ.Pvv1"), nullptr);
  const auto b = build_catalog(Flavor::dBWM, 2);
  const auto* cubic = b.find("(Braid1-q^-1.Pss1).(Braid1+q.Pss1).(Braid1-omega.Pss1) = 0");
  ASSERT_NE(cubic, nullptr);
  EXPECT_EQ(cubic->family, RelationFamily::Quotient);
}

TEST(Catalog, CommutationPairsOnlyFarApart) {
  const auto c = build_catalog(Flavor::dTL, 3);
  std::set<std::pair<int, int>> pairs;
  for (const Relation* r : c.family(RelationFamily::Commutation)) {
    std::set<int> sites;
    for (const auto& [w, coeff] : r->lhs.terms())
      for (const auto& g : w) sites.insert(g.site);
    ASSERT_EQ(sites.size(), 2u) << r->name;
    pairs.insert({*sites.begin(), *sites.rbegin()});
  }
  EXPECT_EQ(pairs, (std::set<std::pair<int, int>>{{1, 3}}));
}

TEST(Catalog, FamiliesNonEmpty) {
  for (auto f : {Flavor::dTL, Flavor::dBWM}) {
    const auto c2 = build_catalog(f, 2);
    for (auto fam : {RelationFamily::ProjectorAlg, RelationFamily::ExternalLegs, RelationFamily::BraidMonoid,
                     RelationFamily::Dilute, RelationFamily::Quotient})
      EXPECT_FALSE(c2.family(fam).empty());
    EXPECT_TRUE(c2.family(RelationFamily::Commutation).empty());
    EXPECT_FALSE(build_catalog(f, 3).family(RelationFamily::Commutation).empty());
    EXPECT_GE(build_catalog(f, 3).relations.size(), 60u);
  }
}

TEST(Catalog, SymbolsWithinBounds) {
  for (int N = 1; N <= 4; ++N)
    for (const auto& r : build_catalog(Flavor::dBWM, N).relations)
      for (const auto* side : {&r.lhs, &r.rhs})
        for (const auto& [w, c] : side->terms())
          for (const auto& g : w) EXPECT_TRUE(in_range(g, N)) << r.name;
}

TEST(Catalog, Deterministic) {
  const auto a = build_catalog(Flavor::dBWM, 3), b = build_catalog(Flavor::dBWM, 3);
  ASSERT_EQ(a.relations.size(), b.relations.size());
  for (std::size_t i = 0; i < a.relations.size(); ++i) {
    EXPECT_EQ(a.relations[i].name, b.relations[i].name);
    EXPECT_EQ(a.relations[i].lhs, b.relations[i].lhs);
    EXPECT_EQ(a.relations[i].rhs, b.relations[i].rhs);
  }
  EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
}

TEST(Catalog, InvalidN) { EXPECT_EQ(kind_of([] { build_catalog(Flavor::dTL, 0); }), ErrorKind::InvalidArgument); }

TEST(Catalog, JsonLayout) {
  const auto j = to_json(build_catalog(Flavor::dTL, 1));
  ASSERT_TRUE(j.is_array());
  const auto& first = j.front();
  EXPECT_TRUE(first.contains("name"));
  EXPECT_TRUE(first.contains("family"));
  EXPECT_TRUE(first["lhs"].is_array());
  const auto& term = first["lhs"].front();
  EXPECT_TRUE(term["word"].front().contains("kind"));
  EXPECT_TRUE(term["word"].front().contains("site"));
  EXPECT_TRUE(term["coeff"]["num"].is_array());
  for (const auto& r : build_catalog(Flavor::dBWM, 2).relations) {
    EXPECT_EQ(element_from_json(to_json(r.lhs)), r.lhs) << r.name;
    EXPECT_EQ(element_from_json(to_json(r.rhs)), r.rhs) << r.name;
  }
}

TEST(Eval, IdentityAndProjectors) {
  const auto rep = build_dtl_rep(0.6, 3);
  const auto I = oracle::eye(rep.dimension());
  EXPECT_EQ(eval_element(rep, AlgebraElement::identity()), I);
  EXPECT_NEAR((eval_element(rep, AlgebraElement::gen(K::S, 1) + AlgebraElement::gen(K::V, 1)) - I).norm(), 0, 0);
  const auto e = AlgebraElement::gen(K::E, 1);
  const auto sq = AlgebraElement::word({}, Laurent::dtl_sqrt_q());
  EXPECT_LE(eval_element(rep, e * e - sq * e).norm(), 1e-12);
}

TEST(Eval, SymbolOutOfRange) {
  const auto rep = build_dtl_rep(0.6, 3);
  EXPECT_EQ(kind_of([&] { eval_element(rep, AlgebraElement::gen(K::E, 3)); }), ErrorKind::SymbolOutOfRange);
  EXPECT_EQ(kind_of([&] { check_relations(rep, build_catalog(Flavor::dTL, 3), 1e-10); }),
            ErrorKind::SymbolOutOfRange);
}

TEST(EvalProperty, Linear) {
  const auto rep = build_dtl_rep(0.45, 3);
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> kind(1, static_cast<int>(K::Cup)), site(1, 2), c(-3, 3), len(0, 3);
  auto random_element = [&] {
    AlgebraElement a;
    for (int t = 0; t < 3; ++t) {
      Word w;
      for (int k = len(rng); k > 0; --k) {
        const auto g = static_cast<K>(kind(rng));
        w.push_back({g, site(rng)});
      }
      a += AlgebraElement::word(w, Laurent::q_power(c(rng), GaussInt{c(rng), c(rng)}));
    }
    return a;
  };
  for (int trial = 0; trial < 30; ++trial) {
    const auto A = random_element(), B = random_element();
    const Laurent al = Laurent::q_power(1, GaussInt{2, -1}), be = Laurent(GaussInt{0, 3});
    const Scalars s = rep.params().scalars();
    const auto lhs = eval_element(rep, al * A + be * B);
    const auto rhs = al.evaluate(s) * eval_element(rep, A) + be.evaluate(s) * eval_element(rep, B);
    EXPECT_LE((lhs - rhs).norm(), 1e-12 * std::max(1.0, lhs.norm()));
  }
}

TEST(CheckRelations, EmptyCatalogPasses) {
  const auto rep = build_dtl_rep(0.6, 2);
  const auto r = check_relations(rep, RelationCatalog{}, 1e-10);
  EXPECT_TRUE(r.passed);
  EXPECT_TRUE(r.results.empty());
}

TEST(CheckRelations, BraidReplacedByIdentityFails) {
  const auto rep = build_dtl_rep(0.6, 3);
  const auto broken = rep.with_local(K::Braid, oracle::eye(9));
  const auto r = check_relations(broken, build_catalog(Flavor::dTL, 2), 1e-10);
  EXPECT_FALSE(r.passed);
  const auto fails = r.failures();
  EXPECT_NE(std::find(fails.begin(), fails.end(), "Braid1.BraidInv1 = Pss1"), fails.end());
}

TEST(CheckRelations, RejectsBadTolerance) {
  const auto rep = build_dtl_rep(0.6, 2);
  EXPECT_EQ(kind_of([&] { check_relations(rep, build_catalog(Flavor::dTL, 1), 0.0); }), ErrorKind::InvalidArgument);
}

TEST(CheckRelations, ParallelMatchesSerial) {
  const auto rep = build_dtl_rep(0.3, 4);
  const auto cat = build_catalog(Flavor::dTL, 3);
  const auto a = check_relations(rep, cat, 1e-10, 1), b = check_relations(rep, cat, 1e-10, 3);
  ASSERT_EQ(a.results.size(), b.results.size());
  for (std::size_t i = 0; i < a.results.size(); ++i) {
    EXPECT_EQ(a.results[i].name, b.results[i].name);
    EXPECT_EQ(a.results[i].residual, b.results[i].residual);
  }
}

TEST(Errors, MessageCarriesKind) {
  Error e(ErrorKind::SizeTooLarge, "boom");
  EXPECT_EQ(e.kind(), ErrorKind::SizeTooLarge);
  EXPECT_NE(std::string(e.what()).find("SizeTooLarge"), std::string::npos);
}
