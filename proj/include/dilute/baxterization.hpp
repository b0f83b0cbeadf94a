#pragma once

#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dilute/algebra.hpp"
#include "dilute/vertex_rep.hpp"

namespace dilute {

/// Which printed Baxterization is evaluated: the braid form (valid for any
/// dBWM representation) or the TL form with braids eliminated.
enum class Formula { BraidForm, MonoidForm };

/// Scalar weights of the local face operator in front of each generator.
struct FaceCoefficients {
  cplx pss{};        // MonoidForm only; BraidForm puts 1 here
  cplx braid{};      // BraidForm only
  cplx braid_inv{};  // BraidForm only
  cplx e{};          // MonoidForm only
  cplx slant{};
  cplx mixed{};      // Psv and Pvs
  cplx cap_cup{};
  cplx pvv{};
};

/// The vacancy weight is 1 - sigma sin(u) sin(eta lambda - u) / (sin lambda
/// sin eta lambda), with sigma from q^{2 eta} = sigma omega; this sign is what
/// makes X(u) X(-u) proportional to the identity.
FaceCoefficients face_coefficients(const AlgebraParams& params, Formula formula, cplx u);

/// X_j(u) for a fixed representation, parameters and formula.
class FaceOperatorFamily {
 public:
  FaceOperatorFamily(std::shared_ptr<const VertexRep> rep, AlgebraParams params, Formula formula);

  const VertexRep& rep() const { return *rep_; }
  std::shared_ptr<const VertexRep> rep_ptr() const { return rep_; }
  const AlgebraParams& params() const { return params_; }
  Formula formula() const { return formula_; }
  int sites() const { return rep_->sites(); }
  int local_dim() const { return rep_->local_dim(); }

  /// Two-site face operator.
  Eigen::MatrixXcd local(cplx u) const;
  /// Face operator on pair (j, j+1) of the chain.
  Eigen::MatrixXcd operator()(int j, cplx u) const;

  FaceOperatorFamily with_sigma(int sigma) const;
  FaceOperatorFamily with_rep(std::shared_ptr<const VertexRep> rep) const;

 private:
  std::shared_ptr<const VertexRep> rep_;
  AlgebraParams params_;
  Formula formula_;
};

/// Monoid-form family of a dTL representation (eta = 3/2, sigma = -1).
FaceOperatorFamily make_dtl_family(std::shared_ptr<const VertexRep> rep);
/// Braid-form family using the representation's own parameters.
FaceOperatorFamily make_dbwm_family(std::shared_ptr<const VertexRep> rep);

Eigen::MatrixXcd face_operator_dtl(const VertexRep& rep, int j, cplx u);
Eigen::MatrixXcd face_operator_dbwm(const VertexRep& rep, int j, cplx u);

/// |X_{j+1}(u) X_j(u+v) X_{j+1}(v) - X_j(v) X_{j+1}(u+v) X_j(u)|_F / |lhs|_F
double check_ybe(const FaceOperatorFamily& family, int j, cplx u, cplx v);
/// |[X_j(u), X_k(v)]|_F; requires |j - k| > 1.
double check_locality(const FaceOperatorFamily& family, int j, int k, cplx u, cplx v);

/// sin(lambda - u) sin(eta lambda - u) / (sin lambda sin eta lambda)
cplx rho(const AlgebraParams& params, cplx u);
/// |X_j(u) X_j(-u) - rho(u) rho(-u) I|_F / max(1, |rho(u) rho(-u)| dim)
double check_inversion(const FaceOperatorFamily& family, int j, cplx u);

struct CrossingEntry {
  int a = 0, b = 0, c = 0, d = 0;  // X(u) entry (a,b) -> (c,d)
  cplx x{};                        // X(u) at that entry
  cplx y{};                        // X(eta lambda - u) at the rotated, conjugated entry
  bool matched = false;            // both nonzero
  cplx ratio{};                    // y / x when matched
};

/// Diagnostic comparison of X(u) with X(eta lambda - u) under a quarter turn
/// of the vertex, (a,b)->(c,d) becomes (conj c, a)->(d, conj b), where conj
/// pairs the string states linked by the crossing vector.
struct CrossingReport {
  cplx u{};
  cplx crossed_u{};
  std::string convention;
  std::vector<int> conjugation;
  std::vector<CrossingEntry> entries;  // every entry nonzero on either side
  std::size_t matched = 0;
  std::size_t unmatched = 0;
  bool same_sparsity = false;
};

CrossingReport crossing_probe(const FaceOperatorFamily& family, int j, cplx u);

struct ScanResult {
  double max_residual = 0.0;
  cplx arg_u{};
  cplx arg_v{};
  std::size_t points = 0;
};

ScanResult scan_ybe(const FaceOperatorFamily& family, int j, const std::vector<cplx>& us,
                    const std::vector<cplx>& vs, int jobs = 1);
ScanResult scan_inversion(const FaceOperatorFamily& family, int j, const std::vector<cplx>& us,
                          int jobs = 1);

/// Positions (row, col) of entries with |x| > rel_tol * max|x|.
std::vector<std::pair<Eigen::Index, Eigen::Index>> nonzero_positions(const Eigen::MatrixXcd& m,
                                                                     double rel_tol = 1e-14);

}  // namespace dilute
