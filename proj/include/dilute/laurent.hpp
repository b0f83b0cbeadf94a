#pragma once

#include <array>
#include <complex>
#include <compare>
#include <map>
#include <string>

namespace dilute {

/// Complex number with integer parts. Every coefficient that appears in the
/// relation catalog and in the diagram calculus is of this form, which keeps
/// equality tests exact.
struct GaussInt {
  long long re = 0;
  long long im = 0;

  constexpr GaussInt() = default;
  constexpr GaussInt(long long r, long long i = 0) : re(r), im(i) {}

  constexpr bool is_zero() const { return re == 0 && im == 0; }
  std::complex<double> value() const {
    return {static_cast<double>(re), static_cast<double>(im)};
  }

  friend constexpr bool operator==(const GaussInt&, const GaussInt&) = default;
  friend constexpr GaussInt operator+(GaussInt a, GaussInt b) { return {a.re + b.re, a.im + b.im}; }
  friend constexpr GaussInt operator-(GaussInt a, GaussInt b) { return {a.re - b.re, a.im - b.im}; }
  friend constexpr GaussInt operator-(GaussInt a) { return {-a.re, -a.im}; }
  friend constexpr GaussInt operator*(GaussInt a, GaussInt b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
};

/// Formal variables a coefficient may depend on. For the dTL flavor only Q is
/// ever used (omega and sqrt(Q) are expanded in q); the dBWM flavor keeps the
/// others symbolic because omega is an independent parameter there.
enum class Symbol : int { Q = 0, Omega = 1, InvQDiff = 2, SqrtQ = 3 };
inline constexpr int kSymbolCount = 4;

struct Monomial {
  std::array<int, kSymbolCount> exp{};

  int operator[](Symbol s) const { return exp[static_cast<int>(s)]; }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Numeric values substituted for the symbols at evaluation time.
struct Scalars {
  std::complex<double> q{1.0, 0.0};
  std::complex<double> omega{1.0, 0.0};
  std::complex<double> inv_qdiff{0.0, 0.0};  // 1 / (q - 1/q)
  std::complex<double> sqrt_q{0.0, 0.0};
};

/// Multivariate Laurent polynomial over the Gaussian integers in the symbols
/// q, omega, (q - q^{-1})^{-1}, sqrt(Q). Zero terms are never stored.
class Laurent {
 public:
  using Terms = std::map<Monomial, GaussInt>;

  Laurent() = default;
  Laurent(long long c);  // NOLINT: integers promote to constants
  Laurent(GaussInt c);   // NOLINT

  static Laurent monomial(GaussInt c, Monomial m);
  static Laurent q_power(int k, GaussInt c = 1);
  static Laurent symbol(Symbol s, int power = 1);
  static Laurent imag_unit() { return Laurent(GaussInt{0, 1}); }

  /// -(q^2 + q^{-2}), the loop weight of the dTL quotient.
  static Laurent dtl_sqrt_q();
  /// -q^3, the dTL twist.
  static Laurent dtl_omega();

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True when only powers of q occur.
  bool q_only() const;
  int min_q_power() const;
  int max_q_power() const;

  std::complex<double> evaluate(const Scalars& s) const;
  std::string to_string() const;

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  Laurent& operator*=(const Laurent& o);

  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(Laurent a, const Laurent& b) { return a *= b; }
  friend Laurent operator-(const Laurent& a);
  friend bool operator==(const Laurent&, const Laurent&) = default;

 private:
  void add_term(const Monomial& m, GaussInt c);

  Terms terms_;
};

}  // namespace dilute
