#include "dilute/transfer.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dilute/error.hpp"

namespace dilute {

namespace {

long long ipow(long long b, int e) {
  long long r = 1;
  for (int k = 0; k < e; ++k) r *= b;
  return r;
}

}  // namespace

TransferSpec::TransferSpec(FaceOperatorFamily family, int L) : family_(std::move(family)), L_(L) {
  if (L < 2) throw Error(ErrorKind::InvalidArgument, "transfer length must be at least 2");
  const long long dim = ipow(family_.local_dim(), std::min(L, 64));
  if (L > kMaxTransferLength || dim > kMaxTransferDim)
    throw Error(ErrorKind::SizeTooLarge, "transfer matrix for L = " + std::to_string(L) + " exceeds the size guard");
  dim_ = static_cast<Eigen::Index>(dim);
}

Eigen::MatrixXcd permutation_matrix(int d) {
  Eigen::MatrixXcd p = Eigen::MatrixXcd::Zero(d * d, d * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) p(b * d + a, a * d + b) = 1.0;
  return p;
}

Eigen::MatrixXcd r_matrix(const FaceOperatorFamily& family, cplx u) {
  return permutation_matrix(family.local_dim()) * family.local(u);
}

Eigen::MatrixXcd embed_pair(const Eigen::MatrixXcd& two_site, int i, int j, int n, int d) {
  if (i < 1 || j < 1 || i > n || j > n || i == j)
    throw Error(ErrorKind::IndexOutOfRange, "embed_pair needs two distinct sites in 1..n");
  if (two_site.rows() != d * d || two_site.cols() != d * d)
    throw Error(ErrorKind::SizeMismatch, "two-site matrix has the wrong size");
  const Eigen::Index dim = static_cast<Eigen::Index>(ipow(d, n));
  const long long wi = ipow(d, n - i), wj = ipow(d, n - j);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    const int si = static_cast<int>((col / wi) % d);
    const int sj = static_cast<int>((col / wj) % d);
    const Eigen::Index rest = col - si * wi - sj * wj;
    for (int ti = 0; ti < d; ++ti)
      for (int tj = 0; tj < d; ++tj) {
        const cplx v = two_site(ti * d + tj, si * d + sj);
        if (v != cplx{}) out(rest + ti * wi + tj * wj, col) += v;
      }
  }
  return out;
}

double check_r_ybe(const FaceOperatorFamily& family, cplx u, cplx v) {
  const int d = family.local_dim();
  const Eigen::MatrixXcd ru = r_matrix(family, u);
  const Eigen::MatrixXcd ruv = r_matrix(family, u + v);
  const Eigen::MatrixXcd rv = r_matrix(family, v);
  const Eigen::MatrixXcd lhs = embed_pair(ru, 1, 2, 3, d) * embed_pair(ruv, 1, 3, 3, d) * embed_pair(rv, 2, 3, 3, d);
  const Eigen::MatrixXcd rhs = embed_pair(rv, 2, 3, 3, d) * embed_pair(ruv, 1, 3, 3, d) * embed_pair(ru, 1, 2, 3, d);
  const double n = lhs.norm();
  return n == 0.0 ? (lhs - rhs).norm() : (lhs - rhs).norm() / n;
}

Eigen::MatrixXcd transfer_matrix(const TransferSpec& spec, cplx u) {
  const int d = spec.local_dim();
  const int L = spec.length();
  const Eigen::MatrixXcd r = r_matrix(spec.family(), u);

  // sparse action of R on (aux, site)
  struct Hop {
    int aux, site;
    cplx w;
  };
  std::vector<std::vector<Hop>> hops(d * d);
  for (int a = 0; a < d; ++a)
    for (int s = 0; s < d; ++s)
      for (int b = 0; b < d; ++b)
        for (int t = 0; t < d; ++t) {
          const cplx w = r(b * d + t, a * d + s);
          if (w != cplx{}) hops[a * d + s].push_back({b, t, w});
        }

  const Eigen::Index dim = spec.dimension();
  std::vector<long long> weight(L);
  for (int k = 0; k < L; ++k) weight[k] = ipow(d, L - 1 - k);
  Eigen::MatrixXcd T = Eigen::MatrixXcd::Zero(dim, dim);

  // frontier: (aux, partial output index) -> amplitude
  struct Node {
    int aux;
    Eigen::Index row;
    cplx amp;
  };
  std::vector<Node> cur, next;
  for (Eigen::Index col = 0; col < dim; ++col) {
    for (int start = 0; start < d; ++start) {
      cur.assign(1, Node{start, 0, 1.0});
      for (int k = 0; k < L && !cur.empty(); ++k) {
        const int s = static_cast<int>((col / weight[k]) % d);
        next.clear();
        for (const Node& nd : cur)
          for (const Hop& h : hops[nd.aux * d + s]) next.push_back({h.aux, nd.row + h.site * weight[k], nd.amp * h.w});
        std::swap(cur, next);
      }
      for (const Node& nd : cur)
        if (nd.aux == start) T(nd.row, col) += nd.amp;
    }
  }
  return T;
}

Eigen::MatrixXcd translation_operator(int d, int L) {
  if (d < 1 || L < 1) throw Error(ErrorKind::InvalidArgument, "translation needs d, L >= 1");
  const Eigen::Index dim = static_cast<Eigen::Index>(ipow(d, L));
  const long long top = ipow(d, L - 1);
  Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    const long long last = col % d;
    t(static_cast<Eigen::Index>(last * top + col / d), col) = 1.0;
  }
  return t;
}

double commutator_norm(const Eigen::MatrixXcd& tu, const Eigen::MatrixXcd& tv) {
  const double denom = tu.norm() * tv.norm();
  const double c = (tu * tv - tv * tu).norm();
  return denom == 0.0 ? c : c / denom;
}

double commutator_norm(const TransferSpec& spec, cplx u, cplx v) {
  return commutator_norm(transfer_matrix(spec, u), transfer_matrix(spec, v));
}

std::vector<cplx> sorted_eigenvalues(const Eigen::MatrixXcd& m) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, false);
  if (es.info() != Eigen::Success) throw Error(ErrorKind::NotConverged, "eigenvalue solver did not converge");
  std::vector<cplx> ev(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  std::sort(ev.begin(), ev.end(), [scale](cplx a, cplx b) {
    const double ma = std::abs(a), mb = std::abs(b);
    if (std::abs(ma - mb) > 1e-9 * scale) return ma > mb;
    return std::arg(a) < std::arg(b);
  });
  return ev;
}

std::vector<cplx> spectrum(const TransferSpec& spec, cplx u, int k) {
  std::vector<cplx> ev = sorted_eigenvalues(transfer_matrix(spec, u));
  if (k > 0 && static_cast<std::size_t>(k) < ev.size()) ev.resize(k);
  return ev;
}

Eigen::MatrixXcd vacancy_number(int d, int L) {
  const Eigen::Index dim = static_cast<Eigen::Index>(ipow(d, L));
  Eigen::MatrixXcd n = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index s = 0; s < dim; ++s) {
    Eigen::Index x = s;
    int count = 0;
    for (int k = 0; k < L; ++k, x /= d)
      if (x % d == kVacancy) ++count;
    n(s, s) = static_cast<double>(count);
  }
  return n;
}

double vacancy_number_commutator(const TransferSpec& spec, cplx u) {
  const Eigen::MatrixXcd t = transfer_matrix(spec, u);
  const Eigen::MatrixXcd n = vacancy_number(spec.local_dim(), spec.length());
  const double tn = t.norm();
  const double c = (t * n - n * t).norm();
  return tn == 0.0 ? c : c / tn;
}

}  // namespace dilute
