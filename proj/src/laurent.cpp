#include "dilute/laurent.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace dilute {

namespace {

std::complex<double> ipow(std::complex<double> x, int k) {
  if (k == 0) return {1.0, 0.0};
  std::complex<double> base = k > 0 ? x : 1.0 / x;
  unsigned n = static_cast<unsigned>(k > 0 ? k : -k);
  std::complex<double> result{1.0, 0.0};
  while (n) {
    if (n & 1u) result *= base;
    base *= base;
    n >>= 1u;
  }
  return result;
}

constexpr const char* kSymbolNames[kSymbolCount] = {"q", "w", "z", "r"};

}  // namespace

Laurent::Laurent(long long c) : Laurent(GaussInt{c, 0}) {}

Laurent::Laurent(GaussInt c) { add_term(Monomial{}, c); }

Laurent Laurent::monomial(GaussInt c, Monomial m) {
  Laurent p;
  p.add_term(m, c);
  return p;
}

Laurent Laurent::q_power(int k, GaussInt c) {
  Monomial m;
  m.exp[static_cast<int>(Symbol::Q)] = k;
  return monomial(c, m);
}

Laurent Laurent::symbol(Symbol s, int power) {
  Monomial m;
  m.exp[static_cast<int>(s)] = power;
  return monomial(1, m);
}

Laurent Laurent::dtl_sqrt_q() { return q_power(2, -1) + q_power(-2, -1); }

Laurent Laurent::dtl_omega() { return q_power(3, -1); }

void Laurent::add_term(const Monomial& m, GaussInt c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool Laurent::q_only() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) {
    for (int s = 1; s < kSymbolCount; ++s)
      if (t.first.exp[s] != 0) return false;
    return true;
  });
}

int Laurent::min_q_power() const {
  int lo = std::numeric_limits<int>::max();
  for (const auto& [m, c] : terms_) lo = std::min(lo, m[Symbol::Q]);
  return terms_.empty() ? 0 : lo;
}

int Laurent::max_q_power() const {
  int hi = std::numeric_limits<int>::min();
  for (const auto& [m, c] : terms_) hi = std::max(hi, m[Symbol::Q]);
  return terms_.empty() ? 0 : hi;
}

std::complex<double> Laurent::evaluate(const Scalars& s) const {
  const std::complex<double> values[kSymbolCount] = {s.q, s.omega, s.inv_qdiff, s.sqrt_q};
  std::complex<double> sum{0.0, 0.0};
  for (const auto& [m, c] : terms_) {
    std::complex<double> t = c.value();
    for (int k = 0; k < kSymbolCount; ++k) t *= ipow(values[k], m.exp[k]);
    sum += t;
  }
  return sum;
}

std::string Laurent::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (c.im == 0) {
      os << c.re;
    } else {
      os << "(" << c.re << (c.im < 0 ? "-" : "+") << (c.im < 0 ? -c.im : c.im) << "i)";
    }
    for (int k = 0; k < kSymbolCount; ++k) {
      if (m.exp[k] == 0) continue;
      os << "*" << kSymbolNames[k];
      if (m.exp[k] != 1) os << "^" << m.exp[k];
    }
  }
  return os.str();
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Laurent& Laurent::operator*=(const Laurent& o) {
  Laurent result;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      Monomial m;
      for (int k = 0; k < kSymbolCount; ++k) m.exp[k] = ma.exp[k] + mb.exp[k];
      result.add_term(m, ca * cb);
    }
  }
  terms_ = std::move(result.terms_);
  return *this;
}

Laurent operator-(const Laurent& a) {
  Laurent r;
  for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
  return r;
}

}  // namespace dilute
