#pragma once

#include <vector>

#include <Eigen/Dense>

#include "dilute/baxterization.hpp"

namespace dilute {

inline constexpr int kMaxTransferLength = 8;
inline constexpr long long kMaxTransferDim = 10000;

/// Periodic row of L quantum sites.
class TransferSpec {
 public:
  TransferSpec(FaceOperatorFamily family, int L);

  const FaceOperatorFamily& family() const { return family_; }
  int length() const { return L_; }
  int local_dim() const { return family_.local_dim(); }
  Eigen::Index dimension() const { return dim_; }

 private:
  FaceOperatorFamily family_;
  int L_;
  Eigen::Index dim_;
};

/// Swap of the two tensor factors of a d x d two-site space.
Eigen::MatrixXcd permutation_matrix(int d);
/// R(u) = Perm X(u); the first factor is the auxiliary space in the row.
Eigen::MatrixXcd r_matrix(const FaceOperatorFamily& family, cplx u);

/// Two-site matrix acting on sites (i, j) of an n-site chain, first factor on i.
Eigen::MatrixXcd embed_pair(const Eigen::MatrixXcd& two_site, int i, int j, int n, int d);
/// |R12(u) R13(u+v) R23(v) - R23(v) R13(u+v) R12(u)|_F / |lhs|_F on three sites.
double check_r_ybe(const FaceOperatorFamily& family, cplx u, cplx v);

/// T(u) = Tr_aux R_{aux,L}(u) ... R_{aux,1}(u).
Eigen::MatrixXcd transfer_matrix(const TransferSpec& spec, cplx u);
/// Cyclic shift |s_1 ... s_L> -> |s_L s_1 ... s_{L-1}>; equals T(0).
Eigen::MatrixXcd translation_operator(int d, int L);

/// |[T(u), T(v)]|_F / (|T(u)|_F |T(v)|_F)
double commutator_norm(const TransferSpec& spec, cplx u, cplx v);
double commutator_norm(const Eigen::MatrixXcd& tu, const Eigen::MatrixXcd& tv);

/// Eigenvalues of a square matrix, by descending modulus, ties by phase.
std::vector<cplx> sorted_eigenvalues(const Eigen::MatrixXcd& m);
/// First k eigenvalues of T(u); k <= 0 returns all.
std::vector<cplx> spectrum(const TransferSpec& spec, cplx u, int k = 0);

/// Diagonal operator counting vacancies on the row.
Eigen::MatrixXcd vacancy_number(int d, int L);
/// |[T(u), vacancy_number]|_F / |T(u)|_F
double vacancy_number_commutator(const TransferSpec& spec, cplx u);

}  // namespace dilute
