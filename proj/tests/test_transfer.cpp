#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "dilute/error.hpp"
#include "dilute/transfer.hpp"
#include "oracles.hpp"

using namespace dilute;
using K = GeneratorKind;

namespace {

FaceOperatorFamily dtl_family(double lam) {
  return make_dtl_family(std::make_shared<const VertexRep>(build_dtl_rep(lam, 2)));
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::Io;
}

// permutation of chain configurations: reverse colours + <-> -
Eigen::MatrixXcd colour_swap(int d, int L) {
  const auto dim = static_cast<Eigen::Index>(std::pow(d, L));
  Eigen::MatrixXcd P = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index s = 0; s < dim; ++s) {
    Eigen::Index x = s, t = 0, w = 1;
    for (int k = 0; k < L; ++k, x /= d, w *= d) {
      int digit = static_cast<int>(x % d);
      if (digit) digit = 3 - digit;
      t += digit * w;
    }
    P(t, s) = 1.0;
  }
  return P;
}

}  // namespace

TEST(RMatrix, PermutationAtZero) {
  const auto fam = dtl_family(0.6);
  EXPECT_EQ(r_matrix(fam, 0.0), permutation_matrix(3));
  const Eigen::MatrixXcd P = permutation_matrix(3);
  EXPECT_EQ(P * P, oracle::eye(9));
}

TEST(RMatrix, NineteenNonzeros) {
  const auto fam = dtl_family(0.6);
  EXPECT_EQ(nonzero_positions(r_matrix(fam, 0.2)).size(), 19u);
}

TEST(RMatrix, YbeAgreesWithFaceForm) {
  std::mt19937_64 rng(5);
  const auto fam3 = make_dtl_family(std::make_shared<const VertexRep>(build_dtl_rep(0.6, 3)));
  for (cplx u : oracle::random_points(rng, 3, 0.5, 0.2)) {
    const cplx v = u * cplx(0.7, -0.3) + 0.1;
    EXPECT_LE(check_r_ybe(fam3, u, v), 1e-9);
    EXPECT_LE(check_ybe(fam3, 1, u, v), 1e-9);
  }
  const auto bad = fam3.with_sigma(1);
  EXPECT_GT(check_r_ybe(bad, 0.12, 0.21), 1e-3);
  EXPECT_GT(check_ybe(bad, 1, 0.12, 0.21), 1e-3);
}

TEST(EmbedPair, MatchesAdjacentEmbed) {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Random(9, 9);
  EXPECT_LE((embed_pair(m, 2, 3, 4, 3) - embed(m, 2, 4, 3)).norm(), 1e-15);
  const Eigen::MatrixXcd P = permutation_matrix(3);
  EXPECT_LE((embed_pair(m, 2, 1, 3, 3) - embed(P * m * P, 1, 3, 3)).norm(), 1e-14);
}

TEST(Transfer, Dimensions) {
  const TransferSpec spec(dtl_family(0.6), 2);
  EXPECT_EQ(transfer_matrix(spec, 0.3).rows(), 9);
}

TEST(Transfer, Guards) {
  EXPECT_EQ(kind_of([] { TransferSpec(dtl_family(0.6), 1); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { TransferSpec(dtl_family(0.6), 9); }), ErrorKind::SizeTooLarge);
  EXPECT_EQ(kind_of([] { TransferSpec(dtl_family(0.6), 12); }), ErrorKind::SizeTooLarge);
  EXPECT_NO_THROW(TransferSpec(dtl_family(0.6), 8));
}

TEST(Transfer, ZeroIsTranslation) {
  for (int L : {2, 3, 4, 5}) {
    const TransferSpec spec(dtl_family(0.6), L);
    EXPECT_EQ(transfer_matrix(spec, 0.0), translation_operator(3, L)) << L;
  }
}

TEST(Transfer, TranslationShiftsRight) {
  // |0 + -> -> |- 0 +>
  const auto T = translation_operator(3, 3);
  EXPECT_EQ(T(2 * 9 + 0 * 3 + 1, 0 * 9 + 1 * 3 + 2), cplx(1.0));
  EXPECT_EQ(T.cwiseAbs().sum(), 27.0);
}

TEST(Transfer, MatchesBruteForce) {
  for (int L : {2, 3}) {
    const auto fam = dtl_family(0.6);
    const TransferSpec spec(fam, L);
    for (cplx u : {cplx(0.17), cplx(0.3, 0.2)}) {
      const auto want = oracle::transfer_bruteforce(r_matrix(fam, u), 3, L);
      EXPECT_LE((transfer_matrix(spec, u) - want).norm(), 1e-12 * want.norm());
    }
  }
}

TEST(Transfer, CommutingGrid) {
  for (double lam : {0.3, 0.6}) {
    for (int L : {3, 4}) {
      const TransferSpec spec(dtl_family(lam), L);
      const std::vector<cplx> g{0.1, 0.2, 0.3, 0.4};
      std::vector<Eigen::MatrixXcd> ts;
      for (cplx u : g) ts.push_back(transfer_matrix(spec, u));
      for (std::size_t a = 0; a < g.size(); ++a)
        for (std::size_t b = 0; b < g.size(); ++b) EXPECT_LE(commutator_norm(ts[a], ts[b]), 1e-9);
    }
  }
}

TEST(Transfer, CommutatorSamePointIsZero) {
  const TransferSpec spec(dtl_family(0.6), 3);
  EXPECT_EQ(commutator_norm(spec, 0.27, 0.27), 0.0);
  EXPECT_LE(commutator_norm(spec, 0.15, 0.4), 1e-9);
}

TEST(Transfer, CorruptedCapControl) {
  auto rep = build_dtl_rep(0.6, 2);
  const Eigen::MatrixXcd cap = rep.local(K::Cap);
  auto bad = std::make_shared<const VertexRep>(rep.with_local(K::Cap, 1.7 * cap));
  const TransferSpec spec(make_dtl_family(bad), 4);
  EXPECT_GT(commutator_norm(spec, 0.15, 0.4), 1e-3);
}

TEST(Transfer, VacancyNumber) {
  const TransferSpec spec(dtl_family(0.6), 3);
  const auto N = vacancy_number(3, 3);
  EXPECT_EQ(N(0, 0), cplx(3.0));
  EXPECT_EQ(N(26, 26), cplx(0.0));
  // cap and cup change the vacancy count by two, so T does not conserve it
  EXPECT_GT(vacancy_number_commutator(spec, 0.3), 1e-3);
  EXPECT_EQ(vacancy_number_commutator(spec, 0.0), 0.0);
}

TEST(Spectrum, TranslationRootsOfUnity) {
  for (int L : {3, 4}) {
    const TransferSpec spec(dtl_family(0.6), L);
    const auto ev = spectrum(spec, 0.0);
    ASSERT_EQ(ev.size(), static_cast<std::size_t>(std::pow(3, L)));
    for (cplx z : ev) {
      EXPECT_NEAR(std::abs(z), 1.0, 1e-10);
      EXPECT_NEAR(std::abs(std::pow(z, L) - 1.0), 0.0, 1e-9);
    }
  }
}

TEST(Spectrum, OrderingAndTruncation) {
  const TransferSpec spec(dtl_family(0.6), 3);
  const auto all = spectrum(spec, 0.25);
  for (std::size_t k = 1; k < all.size(); ++k) EXPECT_GE(std::abs(all[k - 1]) + 1e-9, std::abs(all[k]));
  const auto top = spectrum(spec, 0.25, 5);
  ASSERT_EQ(top.size(), 5u);
  for (int k = 0; k < 5; ++k) EXPECT_EQ(top[k], all[k]);
}

TEST(Spectrum, InvariantUnderBasisPermutation) {
  const TransferSpec spec(dtl_family(0.6), 3);
  const auto T = transfer_matrix(spec, 0.33);
  const auto P = colour_swap(3, 3);
  const auto a = sorted_eigenvalues(T);
  const auto b = sorted_eigenvalues(P * T * P.transpose());
  ASSERT_EQ(a.size(), b.size());
  // multiset comparison by greedy matching
  std::vector<bool> used(b.size(), false);
  for (cplx z : a) {
    double best = 1e300;
    std::size_t at = 0;
    for (std::size_t k = 0; k < b.size(); ++k)
      if (!used[k] && std::abs(b[k] - z) < best) {
        best = std::abs(b[k] - z);
        at = k;
      }
    used[at] = true;
    EXPECT_LE(best, 1e-8);
  }
}

TEST(Spectrum, CommonTopEigenvector) {
  const TransferSpec spec(dtl_family(0.6), 3);
  auto top_vector = [&](cplx u) {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(transfer_matrix(spec, u));
    Eigen::Index k = 0;
    es.eigenvalues().cwiseAbs().maxCoeff(&k);
    // degeneracy guard
    int close = 0;
    for (Eigen::Index m = 0; m < es.eigenvalues().size(); ++m)
      if (std::abs(std::abs(es.eigenvalues()(m)) - std::abs(es.eigenvalues()(k))) < 1e-6) ++close;
    EXPECT_EQ(close, 1);
    return Eigen::VectorXcd(es.eigenvectors().col(k).normalized());
  };
  const auto a = top_vector(0.2), b = top_vector(0.35);
  const double overlap = std::abs(a.dot(b));
  EXPECT_LE(std::acos(std::min(1.0, overlap)), 1e-4);
}

TEST(TransferProperty, TraceHolomorphic) {
  const TransferSpec spec(dtl_family(0.6), 3);
  const cplx u0{0.21, 0.07}, i{0, 1};
  auto tr = [&](cplx u) { return transfer_matrix(spec, u).trace(); };
  const double h = 1e-3, hc = 1e-4;
  const cplx dr = (tr(u0 + hc) - tr(u0 - hc)) / (2 * hc);
  const cplx di = (tr(u0 + i * hc) - tr(u0 - i * hc)) / (2.0 * i * hc);
  EXPECT_LE(std::abs(dr - di), 1e-6 * std::max(1.0, std::abs(dr)));
  auto d = [&](double s) { return (tr(u0 + s) - tr(u0 - s)) / (2 * s); };
  const cplx ref = (4.0 * d(h / 4) - d(h / 2)) / 3.0;
  EXPECT_NEAR(std::abs(d(h) - ref) / std::abs(d(h / 2) - ref), 4.0, 0.05);
}
