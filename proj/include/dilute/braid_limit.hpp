#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dilute/baxterization.hpp"

namespace dilute {

struct BraidLimit {
  Eigen::MatrixXcd candidate;  // two-site, largest entry normalized to 1
  double convergence = 0.0;    // |N(T) - N(T+1)|_F / |N(T)|_F
  double T = 0.0;
  Eigen::Index pivot_row = 0, pivot_col = 0;
};

inline constexpr double kLimitTol = 1e-6;

/// Normalized face operator at u = -iT, compared with u = -i(T+1).
/// Throws NotConverged when the two disagree by more than kLimitTol.
BraidLimit ik_braid_limit(const FaceOperatorFamily& family, double T = 30.0);

/// BWM parameters read off the spectrum of a braid candidate. The string
/// block must have exactly two distinct eigenvalues; the degenerate one is
/// scaled onto the anchor root and the other becomes omega.
struct BwmFit {
  std::string anchor;  // "q^-1" or "-q"
  cplx q{};
  cplx lambda{};
  cplx omega{};
  cplx scale{};  // braid = scale * string block of the candidate
  Eigen::MatrixXcd braid_ss;
  double cluster_spread = 0.0;
};

/// Tries q and 1/q against both anchors. Empty when the spectrum does not
/// split into two clusters.
std::vector<BwmFit> fit_bwm_parameters(const Eigen::MatrixXcd& candidate, cplx q, int colours,
                                       double cluster_tol = 1e-6);

struct DilutionAttempt {
  BwmFit fit;
  std::string status;  // "passed", or the error kind that stopped it
  double cubic_residual = 0.0;
  double max_residual = 0.0;
  std::vector<std::string> failing;
};

/// Feeds a fitted braid into the dilution and records the outcome.
DilutionAttempt attempt_dilution(const BwmFit& fit, int n, double tol = 1e-10);

}  // namespace dilute
