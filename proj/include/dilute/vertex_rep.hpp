#pragma once

#include <map>

#include <Eigen/Dense>

#include "dilute/algebra.hpp"
#include "dilute/catalog.hpp"

namespace dilute {

/// Local state 0 is the vacancy, states 1..m are string colours.
inline constexpr int kVacancy = 0;

/// Identity of size d^n with `two_site` acting on sites j, j+1 (1-based).
Eigen::MatrixXcd embed(const Eigen::MatrixXcd& two_site, int j, int n, int local_dim);
/// Identity of size d^n with `one_site` acting on site j.
Eigen::MatrixXcd embed_site(const Eigen::MatrixXcd& one_site, int j, int n, int local_dim);

/// Vertex-type representation on an n-fold tensor product of (m+1)-state
/// local spaces. Holds two-site generator matrices (one-site for S and V).
class VertexRep final : public Representation {
 public:
  VertexRep(int local_dim, int sites, AlgebraParams params,
            std::map<GeneratorKind, Eigen::MatrixXcd> local);

  int local_dim() const { return local_dim_; }
  int string_colours() const { return local_dim_ - 1; }
  int sites() const override { return sites_; }
  Eigen::Index dimension() const override;
  const AlgebraParams& params() const override { return params_; }
  Eigen::MatrixXcd generator(const GeneratorSymbol& g) const override;

  const Eigen::MatrixXcd& local(GeneratorKind kind) const;
  const std::map<GeneratorKind, Eigen::MatrixXcd>& locals() const { return local_; }

  VertexRep with_local(GeneratorKind kind, Eigen::MatrixXcd m) const;
  VertexRep with_sites(int n) const;

 private:
  int local_dim_;
  int sites_;
  AlgebraParams params_;
  std::map<GeneratorKind, Eigen::MatrixXcd> local_;
};

/// Crossing vector of the 3-state dTL representation.
///  - Symmetric:   c_{+-} = i q, c_{-+} = -i q^-1  (reshaped C satisfies C^2 = 1)
///  - OppositeSign: c_{+-} = i q, c_{-+} = i q^-1  (C^2 = -1; same c.c, but the
///    zigzag relations of the slant generators fail)
enum class CrossingChoice { Symmetric, OppositeSign };

/// Length-m^2 vector over string (x) string in lexicographic order (+, -).
Eigen::VectorXcd dtl_crossing_vector(cplx q, CrossingChoice choice = CrossingChoice::Symmetric);

/// Projectors and slants shared by every vertex representation with
/// `colours` string states; Braid, BraidInv, E, Cap, Cup are left out.
std::map<GeneratorKind, Eigen::MatrixXcd> base_locals(int colours);

/// Lifts a matrix on string (x) string (size m^2) to the two-site space.
Eigen::MatrixXcd lift_string_block(const Eigen::MatrixXcd& ss, int colours);
/// Restriction of a two-site matrix to its string (x) string block.
Eigen::MatrixXcd string_block(const Eigen::MatrixXcd& two_site, int colours);

/// 3-state dilute TL representation: E = c c^T on the string block, Cap and
/// Cup the two halves of E, unit slants, b = q^-1 Pss + q E.
VertexRep build_dtl_rep(cplx lambda, int n, CrossingChoice choice = CrossingChoice::Symmetric);

struct DilutionResult {
  VertexRep rep;
  Eigen::VectorXcd cup_vector;  // c: E_ss = c c~^T, first nonzero component 1
  Eigen::VectorXcd cap_vector;  // c~
  cplx gauge{1.0, 0.0};         // raw pivot that was divided out of c
  double cubic_residual = 0.0;
  CheckReport report;
};

inline constexpr double kCubicTol = 1e-10;
inline constexpr double kRankTol = 1e-9;

/// Dilutes a BWM braid given on string (x) string into a dBWM representation.
/// The monoid generator comes from the cubic-quotient formula and is split
/// into cap and cup halves. With `require_catalog` a failing catalog check
/// throws CatalogViolation; otherwise the report is returned as is.
DilutionResult build_dbwm_rep_from_braid(cplx lambda, cplx omega, int sigma,
                                         const Eigen::MatrixXcd& braid_ss, int n,
                                         bool require_catalog = true, double tol = 1e-10);

}  // namespace dilute
