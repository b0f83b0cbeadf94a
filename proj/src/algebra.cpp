#include "dilute/algebra.hpp"

#include <algorithm>
#include <cmath>

#include "dilute/error.hpp"

namespace dilute {

AlgebraElement AlgebraElement::identity() { return word({}); }

AlgebraElement AlgebraElement::gen(GeneratorKind kind, int site) {
  if (kind == GeneratorKind::Id) return identity();
  return word({GeneratorSymbol{kind, site}});
}

AlgebraElement AlgebraElement::word(const Word& w, const Laurent& coeff) {
  AlgebraElement e;
  e.add_term(w, coeff);
  return e;
}

void AlgebraElement::add_term(Word w, const Laurent& c) {
  if (c.is_zero()) return;
  std::erase_if(w, [](const GeneratorSymbol& g) { return g.kind == GeneratorKind::Id; });
  auto [it, inserted] = terms_.try_emplace(std::move(w), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int AlgebraElement::max_site() const {
  int m = 0;
  for (const auto& [w, c] : terms_)
    for (const auto& g : w) m = std::max(m, g.site);
  return m;
}

std::string AlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "[" + c.to_string() + "]";
    if (w.empty()) {
      out += "*I";
      continue;
    }
    for (const auto& g : w) out += "*" + dilute::to_string(g);
  }
  return out;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

AlgebraElement operator-(const AlgebraElement& a) {
  AlgebraElement r;
  for (const auto& [w, c] : a.terms_) r.terms_.emplace(w, -c);
  return r;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
  AlgebraElement r;
  for (const auto& [wa, ca] : a.terms_) {
    for (const auto& [wb, cb] : b.terms_) {
      Word w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      r.add_term(std::move(w), ca * cb);
    }
  }
  return r;
}

AlgebraElement operator*(const Laurent& c, const AlgebraElement& a) {
  AlgebraElement r;
  for (const auto& [w, ca] : a.terms_) r.add_term(w, c * ca);
  return r;
}

std::string_view to_string(Flavor f) { return f == Flavor::dTL ? "dtl" : "dbwm"; }

std::optional<Flavor> flavor_from_name(std::string_view name) {
  if (name == "dtl" || name == "dTL") return Flavor::dTL;
  if (name == "dbwm" || name == "dBWM") return Flavor::dBWM;
  return std::nullopt;
}

Scalars AlgebraParams::scalars() const {
  Scalars s;
  s.q = q;
  s.omega = omega;
  const cplx diff = q - 1.0 / q;
  s.inv_qdiff = std::abs(diff) > 0.0 ? 1.0 / diff : cplx{0.0, 0.0};
  s.sqrt_q = sqrt_q;
  return s;
}

AlgebraParams derive_params(Flavor flavor, cplx lambda, std::optional<cplx> omega,
                            std::optional<int> sigma) {
  const cplx i{0.0, 1.0};
  if (!std::isfinite(lambda.real()) || !std::isfinite(lambda.imag()))
    throw Error(ErrorKind::InvalidArgument, "lambda must be finite");
  AlgebraParams p;
  p.flavor = flavor;
  p.lambda = lambda;
  p.q = std::exp(-i * lambda);
  if (std::abs(std::sin(lambda)) < kDegenerateTol)
    throw Error(ErrorKind::DegenerateParams, "sin(lambda) = 0");

  if (flavor == Flavor::dTL) {
    if (omega || sigma)
      throw Error(ErrorKind::InvalidArgument, "dTL fixes omega and sigma; do not supply them");
    p.omega = -p.q * p.q * p.q;
    p.sqrt_q = -(p.q * p.q + 1.0 / (p.q * p.q));
    p.eta = 1.5;
    p.sigma = -1;
  } else {
    if (!omega || !sigma)
      throw Error(ErrorKind::InvalidArgument, "dBWM requires omega and sigma");
    if (*sigma != 1 && *sigma != -1)
      throw Error(ErrorKind::InvalidArgument, "sigma must be +1 or -1");
    if (std::abs(*omega) == 0.0) throw Error(ErrorKind::InvalidArgument, "omega must be nonzero");
    // q^4 = 1 makes the divisor q - 1/q vanish (sin 2 lambda = 0).
    if (std::abs(std::sin(2.0 * lambda)) < kDegenerateTol)
      throw Error(ErrorKind::DegenerateParams, "q^4 = 1");
    p.omega = *omega;
    p.sigma = *sigma;
    p.sqrt_q = 1.0 + (p.omega - 1.0 / p.omega) / (p.q - 1.0 / p.q);
    p.eta = i * std::log(static_cast<double>(p.sigma) * p.omega) / (2.0 * lambda);
    p.eta_branch = 0;
  }
  if (std::abs(std::sin(p.eta * lambda)) < kDegenerateTol)
    throw Error(ErrorKind::DegenerateParams, "sin(eta lambda) = 0");
  return p;
}

Eigen::MatrixXcd eval_element(const Representation& rep, const AlgebraElement& element) {
  const Eigen::Index dim = rep.dimension();
  const int N = rep.sites() - 1;
  const Scalars scalars = rep.params().scalars();
  Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [w, c] : element.terms()) {
    for (const auto& g : w) require_in_range(g, N);
    Eigen::MatrixXcd prod = Eigen::MatrixXcd::Identity(dim, dim);
    if constexpr (kWordOrder == WordOrder::RightmostFirst) {
      for (const auto& g : w) prod = prod * rep.generator(g);
    } else {
      for (auto it = w.rbegin(); it != w.rend(); ++it) prod = prod * rep.generator(*it);
    }
    sum += c.evaluate(scalars) * prod;
  }
  return sum;
}

}  // namespace dilute
