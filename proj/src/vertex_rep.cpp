#include "dilute/vertex_rep.hpp"

#include <cmath>
#include <string>

#include "dilute/error.hpp"

namespace dilute {

namespace {

Eigen::Index ipow(Eigen::Index base, int e) {
  Eigen::Index r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// I_left (x) M (x) I_right without forming the identities.
Eigen::MatrixXcd kron_identity(const Eigen::MatrixXcd& m, Eigen::Index left, Eigen::Index right) {
  const Eigen::Index k = m.rows();
  const Eigen::Index dim = left * k * right;
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index l = 0; l < left; ++l)
    for (Eigen::Index r = 0; r < k; ++r)
      for (Eigen::Index c = 0; c < k; ++c) {
        const cplx v = m(r, c);
        if (v == cplx{}) continue;
        for (Eigen::Index x = 0; x < right; ++x)
          out((l * k + r) * right + x, (l * k + c) * right + x) = v;
      }
  return out;
}

}  // namespace

Eigen::MatrixXcd embed(const Eigen::MatrixXcd& two_site, int j, int n, int local_dim) {
  if (j < 1 || j > n - 1)
    throw Error(ErrorKind::IndexOutOfRange,
                "pair index " + std::to_string(j) + " outside 1.." + std::to_string(n - 1));
  const Eigen::Index d = local_dim;
  if (two_site.rows() != d * d || two_site.cols() != d * d)
    throw Error(ErrorKind::SizeMismatch, "two-site matrix must be d^2 x d^2");
  return kron_identity(two_site, ipow(d, j - 1), ipow(d, n - j - 1));
}

Eigen::MatrixXcd embed_site(const Eigen::MatrixXcd& one_site, int j, int n, int local_dim) {
  if (j < 1 || j > n)
    throw Error(ErrorKind::IndexOutOfRange,
                "site index " + std::to_string(j) + " outside 1.." + std::to_string(n));
  const Eigen::Index d = local_dim;
  if (one_site.rows() != d || one_site.cols() != d)
    throw Error(ErrorKind::SizeMismatch, "one-site matrix must be d x d");
  return kron_identity(one_site, ipow(d, j - 1), ipow(d, n - j));
}

VertexRep::VertexRep(int local_dim, int sites, AlgebraParams params,
                     std::map<GeneratorKind, Eigen::MatrixXcd> local)
    : local_dim_(local_dim), sites_(sites), params_(params), local_(std::move(local)) {
  if (local_dim_ < 2) throw Error(ErrorKind::InvalidArgument, "local_dim must be >= 2");
  if (sites_ < 2) throw Error(ErrorKind::InvalidArgument, "a vertex representation needs n >= 2");
  const Eigen::Index d = local_dim_;
  for (const auto& [kind, m] : local_) {
    const Eigen::Index want = is_single_site(kind) ? d : d * d;
    if (m.rows() != want || m.cols() != want)
      throw Error(ErrorKind::SizeMismatch,
                  "generator " + std::string(kind_name(kind)) + " has wrong size");
  }
}

Eigen::Index VertexRep::dimension() const { return ipow(local_dim_, sites_); }

const Eigen::MatrixXcd& VertexRep::local(GeneratorKind kind) const {
  auto it = local_.find(kind);
  if (it == local_.end())
    throw Error(ErrorKind::InvalidArgument,
                "representation has no generator " + std::string(kind_name(kind)));
  return it->second;
}

Eigen::MatrixXcd VertexRep::generator(const GeneratorSymbol& g) const {
  if (g.kind == GeneratorKind::Id) return Eigen::MatrixXcd::Identity(dimension(), dimension());
  require_in_range(g, sites_ - 1);
  if (is_single_site(g.kind)) return embed_site(local(g.kind), g.site, sites_, local_dim_);
  return embed(local(g.kind), g.site, sites_, local_dim_);
}

VertexRep VertexRep::with_local(GeneratorKind kind, Eigen::MatrixXcd m) const {
  auto copy = local_;
  copy[kind] = std::move(m);
  return VertexRep(local_dim_, sites_, params_, std::move(copy));
}

VertexRep VertexRep::with_sites(int n) const { return VertexRep(local_dim_, n, params_, local_); }

std::map<GeneratorKind, Eigen::MatrixXcd> base_locals(int colours) {
  using K = GeneratorKind;
  const Eigen::Index d = colours + 1;
  Eigen::MatrixXcd S = Eigen::MatrixXcd::Identity(d, d);
  S(kVacancy, kVacancy) = 0.0;
  Eigen::MatrixXcd V = Eigen::MatrixXcd::Zero(d, d);
  V(kVacancy, kVacancy) = 1.0;
  auto kron = [](const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      for (Eigen::Index j = 0; j < a.cols(); ++j)
        out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
  };
  Eigen::MatrixXcd slant = Eigen::MatrixXcd::Zero(d * d, d * d);
  for (Eigen::Index s = 1; s < d; ++s) slant(kVacancy * d + s, s * d + kVacancy) = 1.0;
  return {
      {K::S, S},
      {K::V, V},
      {K::Pss, kron(S, S)},
      {K::Psv, kron(S, V)},
      {K::Pvs, kron(V, S)},
      {K::Pvv, kron(V, V)},
      {K::SlantF, slant},
      {K::SlantB, slant.transpose()},
  };
}

Eigen::MatrixXcd lift_string_block(const Eigen::MatrixXcd& ss, int colours) {
  const Eigen::Index m = colours, d = colours + 1;
  if (ss.rows() != m * m || ss.cols() != m * m)
    throw Error(ErrorKind::SizeMismatch, "string block must be m^2 x m^2");
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(d * d, d * d);
  for (Eigen::Index a = 0; a < m; ++a)
    for (Eigen::Index b = 0; b < m; ++b)
      for (Eigen::Index c = 0; c < m; ++c)
        for (Eigen::Index e = 0; e < m; ++e)
          out((a + 1) * d + (b + 1), (c + 1) * d + (e + 1)) = ss(a * m + b, c * m + e);
  return out;
}

Eigen::MatrixXcd string_block(const Eigen::MatrixXcd& two_site, int colours) {
  const Eigen::Index m = colours, d = colours + 1;
  Eigen::MatrixXcd out(m * m, m * m);
  for (Eigen::Index a = 0; a < m; ++a)
    for (Eigen::Index b = 0; b < m; ++b)
      for (Eigen::Index c = 0; c < m; ++c)
        for (Eigen::Index e = 0; e < m; ++e)
          out(a * m + b, c * m + e) = two_site((a + 1) * d + (b + 1), (c + 1) * d + (e + 1));
  return out;
}

namespace {

// Cap = |00><c~| and Cup = |c><00| on the two-site space.
std::pair<Eigen::MatrixXcd, Eigen::MatrixXcd> cap_cup(const Eigen::VectorXcd& cap_vec,
                                                      const Eigen::VectorXcd& cup_vec,
                                                      int colours) {
  const Eigen::Index m = colours, d = colours + 1;
  Eigen::MatrixXcd cap = Eigen::MatrixXcd::Zero(d * d, d * d);
  Eigen::MatrixXcd cup = Eigen::MatrixXcd::Zero(d * d, d * d);
  const Eigen::Index vv = kVacancy * d + kVacancy;
  for (Eigen::Index a = 0; a < m; ++a)
    for (Eigen::Index b = 0; b < m; ++b) {
      const Eigen::Index ab = (a + 1) * d + (b + 1);
      cap(vv, ab) = cap_vec(a * m + b);
      cup(ab, vv) = cup_vec(a * m + b);
    }
  return {cap, cup};
}

}  // namespace

Eigen::VectorXcd dtl_crossing_vector(cplx q, CrossingChoice choice) {
  const cplx i{0.0, 1.0};
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(4);
  c(0 * 2 + 1) = i * q;  // (+,-)
  c(1 * 2 + 0) = (choice == CrossingChoice::Symmetric ? -i : i) / q;  // (-,+)
  return c;
}

VertexRep build_dtl_rep(cplx lambda, int n, CrossingChoice choice) {
  using K = GeneratorKind;
  const AlgebraParams params = derive_params(Flavor::dTL, lambda);
  const cplx q = params.q;
  constexpr int m = 2;
  auto locals = base_locals(m);
  const Eigen::VectorXcd c = dtl_crossing_vector(q, choice);
  const Eigen::MatrixXcd E = lift_string_block(c * c.transpose(), m);
  const Eigen::MatrixXcd& Pss = locals.at(K::Pss);
  auto [cap, cup] = cap_cup(c, c, m);
  locals[K::E] = E;
  locals[K::Cap] = cap;
  locals[K::Cup] = cup;
  locals[K::Braid] = Pss / q + q * E;
  locals[K::BraidInv] = q * Pss + E / q;
  return VertexRep(m + 1, n, params, std::move(locals));
}

DilutionResult build_dbwm_rep_from_braid(cplx lambda, cplx omega, int sigma,
                                         const Eigen::MatrixXcd& braid_ss, int n,
                                         bool require_catalog, double tol) {
  using K = GeneratorKind;
  const Eigen::Index mm = braid_ss.rows();
  const int m = static_cast<int>(std::lround(std::sqrt(static_cast<double>(mm))));
  if (m < 1 || static_cast<Eigen::Index>(m) * m != mm || braid_ss.cols() != mm)
    throw Error(ErrorKind::SizeMismatch, "braid must be square of size m^2");
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "chain needs n >= 2");
  const AlgebraParams params = derive_params(Flavor::dBWM, lambda, omega, sigma);
  const cplx q = params.q;
  const Eigen::MatrixXcd one = Eigen::MatrixXcd::Identity(mm, mm);
  const Eigen::MatrixXcd& B = braid_ss;

  Eigen::FullPivLU<Eigen::MatrixXcd> lu(B);
  if (!lu.isInvertible()) throw Error(ErrorKind::InvalidArgument, "braid is singular");
  const Eigen::MatrixXcd B_inv = lu.inverse();

  const Eigen::MatrixXcd left = (B - one / q) * (B + q * one);
  const Eigen::MatrixXcd cubic = left * (B - params.omega * one);
  const double scale = std::max(1.0, B.norm());
  const double cubic_residual = cubic.norm() / (scale * scale * scale);
  if (!(cubic_residual <= kCubicTol))
    throw Error(ErrorKind::CubicViolation,
                "(b - q^-1)(b + q)(b - omega) has relative norm " + std::to_string(cubic_residual));

  const Eigen::MatrixXcd E = left / (params.omega * (q - 1.0 / q));
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(E);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) < 1e-12 || (sv.size() > 1 && sv(1) > kRankTol * sv(0)))
    throw Error(ErrorKind::RankError, "monoid generator is not rank 1");

  Eigen::Index pivot_col = 0;
  E.colwise().norm().maxCoeff(&pivot_col);
  const Eigen::VectorXcd raw = E.col(pivot_col);
  const double raw_max = raw.cwiseAbs().maxCoeff();
  Eigen::Index p = 0;
  while (std::abs(raw(p)) <= 1e-9 * raw_max) ++p;
  const cplx gauge = raw(p);
  const Eigen::VectorXcd cup_vec = raw / gauge;
  const Eigen::VectorXcd cap_vec = E.row(p).transpose();

  auto locals = base_locals(m);
  auto [cap, cup] = cap_cup(cap_vec, cup_vec, m);
  locals[K::Braid] = lift_string_block(B, m);
  locals[K::BraidInv] = lift_string_block(B_inv, m);
  locals[K::E] = lift_string_block(E, m);
  locals[K::Cap] = cap;
  locals[K::Cup] = cup;
  VertexRep rep(m + 1, n, params, std::move(locals));

  CheckReport report = check_relations(rep, build_catalog(Flavor::dBWM, n - 1), tol);
  if (require_catalog && !report.passed) {
    std::string names;
    for (const auto& f : report.failures()) names += (names.empty() ? "" : ", ") + f;
    throw Error(ErrorKind::CatalogViolation, "relations fail: " + names);
  }
  return DilutionResult{std::move(rep), cup_vec, cap_vec, gauge, cubic_residual, std::move(report)};
}

}  // namespace dilute
