#pragma once

#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dilute/algebra.hpp"
#include "dilute/catalog.hpp"

namespace dilute {

enum class Edge { Top, Bottom };

struct Endpoint {
  Edge edge = Edge::Top;
  int position = 1;  // 1..n

  friend auto operator<=>(const Endpoint&, const Endpoint&) = default;
};

using Arc = std::pair<Endpoint, Endpoint>;

/// Planar partial matching of n top and n bottom points. Unmatched points are
/// vacancies. Top is the output side: in a product A.B the top of B is glued
/// to the bottom of A.
class DiluteDiagram {
 public:
  /// Throws InvalidArgument for overlapping or crossing arcs.
  DiluteDiagram(int n, const std::vector<Arc>& arcs);

  /// partner[i] for i in [0, 2n): tops are 0..n-1, bottoms n..2n-1; -1 marks
  /// a vacancy.
  static DiluteDiagram from_partners(int n, std::vector<int> partner);

  int n() const { return n_; }
  const std::vector<int>& partners() const { return partner_; }
  bool occupied(Edge e, int position) const;
  std::vector<Arc> arcs() const;
  std::string to_string() const;

  friend auto operator<=>(const DiluteDiagram&, const DiluteDiagram&) = default;

 private:
  DiluteDiagram() = default;
  void validate() const;

  int n_ = 0;
  std::vector<int> partner_;
};

/// Circular-order planarity test on a partner array.
bool is_planar(int n, const std::vector<int>& partner);

/// Linear combination of diagrams with exact coefficients in q.
class DiagramElement {
 public:
  using Terms = std::map<DiluteDiagram, Laurent>;

  explicit DiagramElement(int n) : n_(n) {}
  DiagramElement(const DiluteDiagram& d, const Laurent& c = 1);

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::optional<Laurent> coefficient(const DiluteDiagram& d) const;
  std::string to_string() const;

  DiagramElement& add(const DiluteDiagram& d, const Laurent& c);
  DiagramElement& operator+=(const DiagramElement& o);
  DiagramElement& operator-=(const DiagramElement& o);
  friend DiagramElement operator+(DiagramElement a, const DiagramElement& b) { return a += b; }
  friend DiagramElement operator-(DiagramElement a, const DiagramElement& b) { return a -= b; }
  friend DiagramElement operator*(const Laurent& c, const DiagramElement& a);
  friend bool operator==(const DiagramElement&, const DiagramElement&) = default;

 private:
  int n_;
  Terms terms_;
};

/// Stacks two diagrams: the top of `lower` is glued to the bottom of
/// `upper`. Returns nothing on a string/vacancy mismatch, otherwise the
/// resulting diagram and the number of closed loops.
std::optional<std::pair<DiluteDiagram, int>> stack(const DiluteDiagram& upper,
                                                   const DiluteDiagram& lower);

/// Bilinear product d1.d2 in the algebra's word order; each closed loop
/// contributes -(q^2 + q^-2). Throws SizeMismatch for different n.
DiagramElement compose(const DiagramElement& d1, const DiagramElement& d2);

/// Sum over all 2^n string/vacancy patterns of through-lines: the unit.
DiagramElement identity_element(int n);

/// Diagram (or braid combination) of a generator on n sites.
DiagramElement generator_diagram(const GeneratorSymbol& symbol, int n, Flavor flavor = Flavor::dTL);

/// Evaluates an algebra element in the diagram algebra on n sites.
DiagramElement to_diagrams(const AlgebraElement& element, int n);

inline constexpr int kMaxBasisSites = 6;

/// Planar partial matchings generated by a stack walk around the boundary
/// (arcs are opened and closed in nesting order). Sorted.
std::vector<DiluteDiagram> enumerate_basis(int n);
/// Same set obtained by filtering every partial matching for planarity.
std::vector<DiluteDiagram> enumerate_basis_by_filter(int n);

struct ExactFailure {
  std::string name;
  DiagramElement difference;  // lhs - rhs
};

struct ExactCheckReport {
  std::size_t checked = 0;
  std::vector<ExactFailure> failures;
  bool passed() const { return failures.empty(); }
};

/// Checks every relation as an identity of diagram elements with exact
/// coefficients. dTL catalogs with N + 1 <= 6 only.
ExactCheckReport check_catalog_exact(const RelationCatalog& catalog, int jobs = 1);

inline constexpr int kMaxRegularSites = 5;

/// Left-multiplication action of the diagram algebra on its own basis, with
/// coefficients evaluated at a numeric q.
class RegularRepresentation final : public Representation {
 public:
  RegularRepresentation(int n, cplx q);

  int sites() const override { return n_; }
  Eigen::Index dimension() const override { return static_cast<Eigen::Index>(basis_.size()); }
  const AlgebraParams& params() const override { return params_; }
  Eigen::MatrixXcd generator(const GeneratorSymbol& g) const override;

  const std::vector<DiluteDiagram>& basis() const { return basis_; }

 private:
  int n_;
  AlgebraParams params_;
  std::vector<DiluteDiagram> basis_;
  std::map<DiluteDiagram, Eigen::Index> index_;
  mutable std::mutex cache_mutex_;
  mutable std::map<GeneratorSymbol, Eigen::MatrixXcd> cache_;
};

std::unique_ptr<RegularRepresentation> regular_representation(int n, cplx q);

}  // namespace dilute
