#include "dilute/baxterization.hpp"

#include <algorithm>
#include <cmath>

#include "dilute/error.hpp"
#include "parallel.hpp"

namespace dilute {

namespace {

constexpr cplx kI{0.0, 1.0};

void require_nondegenerate(const AlgebraParams& p) {
  if (std::abs(std::sin(p.lambda)) < kDegenerateTol)
    throw Error(ErrorKind::DegenerateParams, "sin(lambda) vanishes");
  if (std::abs(std::sin(p.eta * p.lambda)) < kDegenerateTol)
    throw Error(ErrorKind::DegenerateParams, "sin(eta lambda) vanishes");
}

void require_finite(cplx u) {
  if (!std::isfinite(u.real()) || !std::isfinite(u.imag()))
    throw Error(ErrorKind::DegenerateParams, "spectral parameter is not finite");
}

double rel_norm(const Eigen::MatrixXcd& diff, const Eigen::MatrixXcd& ref) {
  const double scale = ref.norm();
  const double d = diff.norm();
  if (scale == 0.0) return d;
  return d / scale;
}

}  // namespace

FaceCoefficients face_coefficients(const AlgebraParams& p, Formula formula, cplx u) {
  require_nondegenerate(p);
  require_finite(u);
  const cplx lam = p.lambda;
  const cplx el = p.eta * lam;
  const cplx sl = std::sin(lam);
  const cplx sel = std::sin(el);
  const cplx den = sl * sel;
  const cplx su = std::sin(u);
  const cplx f = su * std::sin(el - u) / den;

  FaceCoefficients c;
  c.slant = f;
  c.mixed = std::sin(el - u) / sel;
  c.cap_cup = su / sel;
  c.pvv = 1.0 - static_cast<double>(p.sigma) * f;
  if (formula == Formula::MonoidForm) {
    c.pss = std::sin(lam - u) * std::sin(el - u) / den;
    c.e = -su * std::sin(el - lam - u) / den;
  } else {
    const cplx pref = -su / (2.0 * kI * den);
    c.pss = 1.0;
    c.braid = pref * std::exp(kI * (el - u));
    c.braid_inv = -pref * std::exp(kI * (u - el));
  }
  return c;
}

FaceOperatorFamily::FaceOperatorFamily(std::shared_ptr<const VertexRep> rep, AlgebraParams params,
                                       Formula formula)
    : rep_(std::move(rep)), params_(params), formula_(formula) {
  if (!rep_) throw Error(ErrorKind::InvalidArgument, "face operator family needs a representation");
  require_nondegenerate(params_);
  if (formula_ == Formula::MonoidForm && params_.flavor != Flavor::dTL)
    throw Error(ErrorKind::UnsupportedFlavor, "monoid form needs dTL parameters");
}

Eigen::MatrixXcd FaceOperatorFamily::local(cplx u) const {
  const FaceCoefficients c = face_coefficients(params_, formula_, u);
  const auto& L = *rep_;
  Eigen::MatrixXcd x = c.pss * L.local(GeneratorKind::Pss);
  x += c.mixed * (L.local(GeneratorKind::Psv) + L.local(GeneratorKind::Pvs));
  x += c.pvv * L.local(GeneratorKind::Pvv);
  x += c.slant * (L.local(GeneratorKind::SlantF) + L.local(GeneratorKind::SlantB));
  x += c.cap_cup * (L.local(GeneratorKind::Cap) + L.local(GeneratorKind::Cup));
  if (formula_ == Formula::MonoidForm) {
    x += c.e * L.local(GeneratorKind::E);
  } else {
    x += c.braid * L.local(GeneratorKind::Braid);
    x += c.braid_inv * L.local(GeneratorKind::BraidInv);
  }
  return x;
}

Eigen::MatrixXcd FaceOperatorFamily::operator()(int j, cplx u) const {
  return embed(local(u), j, rep_->sites(), rep_->local_dim());
}

FaceOperatorFamily FaceOperatorFamily::with_sigma(int sigma) const {
  AlgebraParams p = params_;
  p.sigma = sigma;
  return FaceOperatorFamily(rep_, p, formula_);
}

FaceOperatorFamily FaceOperatorFamily::with_rep(std::shared_ptr<const VertexRep> rep) const {
  return FaceOperatorFamily(std::move(rep), params_, formula_);
}

FaceOperatorFamily make_dtl_family(std::shared_ptr<const VertexRep> rep) {
  if (!rep) throw Error(ErrorKind::InvalidArgument, "null representation");
  AlgebraParams p = rep->params();
  if (p.flavor != Flavor::dTL) throw Error(ErrorKind::UnsupportedFlavor, "expected a dTL representation");
  return FaceOperatorFamily(rep, p, Formula::MonoidForm);
}

FaceOperatorFamily make_dbwm_family(std::shared_ptr<const VertexRep> rep) {
  if (!rep) throw Error(ErrorKind::InvalidArgument, "null representation");
  AlgebraParams p = rep->params();
  return FaceOperatorFamily(rep, p, Formula::BraidForm);
}

namespace {
// non-owning view for the free functions
std::shared_ptr<const VertexRep> borrow(const VertexRep& rep) {
  return std::shared_ptr<const VertexRep>(&rep, [](const VertexRep*) {});
}
}  // namespace

Eigen::MatrixXcd face_operator_dtl(const VertexRep& rep, int j, cplx u) {
  return make_dtl_family(borrow(rep))(j, u);
}

Eigen::MatrixXcd face_operator_dbwm(const VertexRep& rep, int j, cplx u) {
  return make_dbwm_family(borrow(rep))(j, u);
}

double check_ybe(const FaceOperatorFamily& family, int j, cplx u, cplx v) {
  require_finite(u);
  require_finite(v);
  if (j < 1 || j + 2 > family.sites())
    throw Error(ErrorKind::IndexOutOfRange, "YBE needs sites j, j+1, j+2 on the chain");
  const Eigen::MatrixXcd a = family(j + 1, u);
  const Eigen::MatrixXcd b = family(j, u + v);
  const Eigen::MatrixXcd c = family(j + 1, v);
  const Eigen::MatrixXcd lhs = a * b * c;
  const Eigen::MatrixXcd rhs = family(j, v) * family(j + 1, u + v) * family(j, u);
  return rel_norm(lhs - rhs, lhs);
}

double check_locality(const FaceOperatorFamily& family, int j, int k, cplx u, cplx v) {
  if (std::abs(j - k) <= 1)
    throw Error(ErrorKind::IndexOutOfRange, "locality needs |j - k| > 1");
  const Eigen::MatrixXcd a = family(j, u);
  const Eigen::MatrixXcd b = family(k, v);
  return (a * b - b * a).norm();
}

cplx rho(const AlgebraParams& p, cplx u) {
  require_nondegenerate(p);
  const cplx el = p.eta * p.lambda;
  return std::sin(p.lambda - u) * std::sin(el - u) / (std::sin(p.lambda) * std::sin(el));
}

double check_inversion(const FaceOperatorFamily& family, int j, cplx u) {
  require_finite(u);
  const Eigen::MatrixXcd prod = family(j, u) * family(j, -u);
  const cplx r = rho(family.params(), u) * rho(family.params(), -u);
  const auto dim = prod.rows();
  Eigen::MatrixXcd diff = prod;
  diff.diagonal().array() -= r;
  return diff.norm() / std::max(1.0, std::abs(r) * static_cast<double>(dim));
}

std::vector<std::pair<Eigen::Index, Eigen::Index>> nonzero_positions(const Eigen::MatrixXcd& m,
                                                                     double rel_tol) {
  std::vector<std::pair<Eigen::Index, Eigen::Index>> out;
  const double top = m.cwiseAbs().maxCoeff();
  if (top == 0.0) return out;
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      if (std::abs(m(r, c)) > rel_tol * top) out.emplace_back(r, c);
  return out;
}

CrossingReport crossing_probe(const FaceOperatorFamily& family, int /*j*/, cplx u) {
  require_finite(u);
  const int d = family.local_dim();
  const cplx crossed = family.params().eta * family.params().lambda - u;

  // conjugation from the cup column: c_{s t} != 0 pairs s with t
  std::vector<int> conj(d, -1);
  conj[kVacancy] = kVacancy;
  const Eigen::MatrixXcd& cup = family.rep().local(GeneratorKind::Cup);
  const double cup_top = cup.cwiseAbs().maxCoeff();
  for (int s = 1; s < d; ++s)
    for (int t = 1; t < d; ++t)
      if (cup_top > 0.0 && std::abs(cup(s * d + t, 0)) > 1e-12 * cup_top && conj[s] < 0) conj[s] = t;
  for (int s = 1; s < d; ++s)
    if (conj[s] < 0) conj[s] = s;

  const Eigen::MatrixXcd x = family.local(u);
  const Eigen::MatrixXcd y = family.local(crossed);
  const double tol = 1e-12 * std::max(x.cwiseAbs().maxCoeff(), y.cwiseAbs().maxCoeff());

  CrossingReport rep;
  rep.u = u;
  rep.crossed_u = crossed;
  rep.convention = "X(u)[(c,d),(a,b)] vs X(eta*lambda-u)[(d,conj b),(conj c,a)]";
  rep.conjugation = conj;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b)
      for (int c = 0; c < d; ++c)
        for (int dd = 0; dd < d; ++dd) {
          CrossingEntry e{a, b, c, dd, x(c * d + dd, a * d + b), y(dd * d + conj[b], conj[c] * d + a)};
          const bool nx = std::abs(e.x) > tol;
          const bool ny = std::abs(e.y) > tol;
          if (!nx && !ny) continue;
          e.matched = nx && ny;
          if (e.matched) {
            e.ratio = e.y / e.x;
            ++rep.matched;
          } else {
            ++rep.unmatched;
          }
          rep.entries.push_back(e);
        }
  rep.same_sparsity = rep.unmatched == 0;
  return rep;
}

ScanResult scan_ybe(const FaceOperatorFamily& family, int j, const std::vector<cplx>& us,
                    const std::vector<cplx>& vs, int jobs) {
  const std::size_t count = us.size() * vs.size();
  std::vector<double> res(count, 0.0);
  detail::parallel_for(count, jobs, [&](std::size_t i) {
    res[i] = check_ybe(family, j, us[i / vs.size()], vs[i % vs.size()]);
  });
  ScanResult out;
  out.points = count;
  for (std::size_t i = 0; i < count; ++i) {
    if (i == 0 || res[i] > out.max_residual) {
      out.max_residual = res[i];
      out.arg_u = us[i / vs.size()];
      out.arg_v = vs[i % vs.size()];
    }
  }
  return out;
}

ScanResult scan_inversion(const FaceOperatorFamily& family, int j, const std::vector<cplx>& us,
                          int jobs) {
  std::vector<double> res(us.size(), 0.0);
  detail::parallel_for(us.size(), jobs, [&](std::size_t i) { res[i] = check_inversion(family, j, us[i]); });
  ScanResult out;
  out.points = us.size();
  for (std::size_t i = 0; i < us.size(); ++i) {
    if (i == 0 || res[i] > out.max_residual) {
      out.max_residual = res[i];
      out.arg_u = us[i];
      out.arg_v = -us[i];
    }
  }
  return out;
}

}  // namespace dilute
