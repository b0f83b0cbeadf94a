#include "dilute/braid_limit.hpp"

#include <algorithm>
#include <cmath>

#include "dilute/error.hpp"

namespace dilute {

BraidLimit ik_braid_limit(const FaceOperatorFamily& family, double T) {
  if (!(T >= 0.0) || !std::isfinite(T)) throw Error(ErrorKind::InvalidArgument, "T must be a finite nonnegative number");
  const cplx i{0.0, 1.0};
  const Eigen::MatrixXcd x1 = family.local(-i * T);
  const Eigen::MatrixXcd x2 = family.local(-i * (T + 1.0));

  Eigen::Index r = 0, c = 0;
  x1.cwiseAbs().maxCoeff(&r, &c);
  if (std::abs(x1(r, c)) == 0.0 || std::abs(x2(r, c)) == 0.0)
    throw Error(ErrorKind::NotConverged, "face operator vanishes at the pivot");
  const Eigen::MatrixXcd n1 = x1 / x1(r, c);
  const Eigen::MatrixXcd n2 = x2 / x2(r, c);
  BraidLimit out{n1, (n1 - n2).norm() / n1.norm(), T, r, c};
  if (!(out.convergence <= kLimitTol))
    throw Error(ErrorKind::NotConverged, "braid limit not converged at T = " + std::to_string(T) +
                                             " (difference " + std::to_string(out.convergence) + ")");
  return out;
}

std::vector<BwmFit> fit_bwm_parameters(const Eigen::MatrixXcd& candidate, cplx q, int colours,
                                       double cluster_tol) {
  const Eigen::MatrixXcd block = string_block(candidate, colours);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(block, false);
  if (es.info() != Eigen::Success) return {};
  const Eigen::VectorXcd ev = es.eigenvalues();
  const double scale = std::max(1.0, ev.cwiseAbs().maxCoeff());

  // greedy clustering
  std::vector<std::vector<cplx>> clusters;
  for (Eigen::Index k = 0; k < ev.size(); ++k) {
    bool placed = false;
    for (auto& cl : clusters) {
      if (std::abs(cl.front() - ev(k)) <= cluster_tol * scale) {
        cl.push_back(ev(k));
        placed = true;
        break;
      }
    }
    if (!placed) clusters.push_back({ev(k)});
  }
  if (clusters.size() != 2) return {};
  std::sort(clusters.begin(), clusters.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
  if (clusters[0].size() == clusters[1].size()) return {};

  auto mean = [](const std::vector<cplx>& v) {
    cplx s{};
    for (cplx z : v) s += z;
    return s / static_cast<double>(v.size());
  };
  const cplx mu = mean(clusters[0]);
  const cplx nu = mean(clusters[1]);
  double spread = 0.0;
  for (const auto& cl : clusters)
    for (cplx z : cl) spread = std::max(spread, std::abs(z - cl.front()));
  if (std::abs(mu) == 0.0) return {};

  std::vector<BwmFit> fits;
  const cplx i{0.0, 1.0};
  for (cplx qq : {q, 1.0 / q}) {
    for (int a = 0; a < 2; ++a) {
      BwmFit f;
      f.anchor = a == 0 ? "q^-1" : "-q";
      f.q = qq;
      f.lambda = i * std::log(qq);
      f.scale = (a == 0 ? 1.0 / qq : -qq) / mu;
      f.omega = f.scale * nu;
      f.braid_ss = f.scale * block;
      f.cluster_spread = spread;
      fits.push_back(std::move(f));
    }
  }
  return fits;
}

DilutionAttempt attempt_dilution(const BwmFit& fit, int n, double tol) {
  DilutionAttempt out;
  out.fit = fit;
  try {
    DilutionResult res = build_dbwm_rep_from_braid(fit.lambda, fit.omega, -1, fit.braid_ss, n, false, tol);
    out.cubic_residual = res.cubic_residual;
    out.max_residual = res.report.max_residual;
    out.failing = res.report.failures();
    out.status = res.report.passed ? "passed" : std::string(to_string(ErrorKind::CatalogViolation));
  } catch (const Error& e) {
    out.status = std::string(to_string(e.kind()));
  }
  return out;
}

}  // namespace dilute
