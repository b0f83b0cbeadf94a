#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dilute/generator.hpp"
#include "dilute/laurent.hpp"

namespace dilute {

using cplx = std::complex<double>;
using Word = std::vector<GeneratorSymbol>;

/// How a word is turned into a product of operators. With RightmostFirst the
/// word A.B means "apply B first" (operator convention); diagram stacking and
/// matrix evaluation both read this switch.
enum class WordOrder { RightmostFirst, LeftmostFirst };
inline constexpr WordOrder kWordOrder = WordOrder::RightmostFirst;

/// Formal linear combination of generator words with Laurent coefficients.
/// Id symbols are dropped from words, so the empty word is the identity.
class AlgebraElement {
 public:
  using Terms = std::map<Word, Laurent>;

  AlgebraElement() = default;  // the zero element

  static AlgebraElement identity();
  static AlgebraElement gen(GeneratorKind kind, int site = 0);
  static AlgebraElement word(const Word& w, const Laurent& coeff = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Largest site index used by any symbol (0 for scalars).
  int max_site() const;

  std::string to_string() const;

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator-(const AlgebraElement& a);
  /// Product: concatenation of words, multiplication of coefficients.
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const Laurent& c, const AlgebraElement& a);
  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  void add_term(Word w, const Laurent& c);

  Terms terms_;
};

enum class Flavor { dTL, dBWM };

std::string_view to_string(Flavor f);
std::optional<Flavor> flavor_from_name(std::string_view name);

struct AlgebraParams {
  Flavor flavor = Flavor::dTL;
  cplx lambda{};
  cplx q{1.0, 0.0};  // exp(-i lambda)
  cplx omega{};
  int sigma = -1;
  cplx eta{1.5, 0.0};
  cplx sqrt_q{};
  /// Branch of the logarithm used for eta (always 0: principal value).
  int eta_branch = 0;

  Scalars scalars() const;
};

/// Below this magnitude a sine denominator is treated as vanishing.
inline constexpr double kDegenerateTol = 1e-12;

/// Populates AlgebraParams for either quotient. dTL rejects omega and sigma;
/// dBWM requires both and solves exp(-2 i eta lambda) = sigma omega on the
/// principal branch.
AlgebraParams derive_params(Flavor flavor, cplx lambda, std::optional<cplx> omega = std::nullopt,
                            std::optional<int> sigma = std::nullopt);

/// A concrete matrix representation of the algebra on a chain of `sites()`
/// sites. Generator matrices are full chain operators.
class Representation {
 public:
  virtual ~Representation() = default;

  virtual int sites() const = 0;
  virtual Eigen::Index dimension() const = 0;
  virtual const AlgebraParams& params() const = 0;
  virtual Eigen::MatrixXcd generator(const GeneratorSymbol& g) const = 0;
};

/// Matrix of an algebra element: words multiplied out, coefficients evaluated
/// at the representation's parameters.
Eigen::MatrixXcd eval_element(const Representation& rep, const AlgebraElement& element);

}  // namespace dilute
