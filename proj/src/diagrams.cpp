#include "dilute/diagrams.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "dilute/error.hpp"
#include "parallel.hpp"

namespace dilute {

namespace {

int point_index(int n, const Endpoint& e) {
  return e.edge == Edge::Top ? e.position - 1 : n + e.position - 1;
}

Endpoint endpoint_of(int n, int index) {
  return index < n ? Endpoint{Edge::Top, index + 1} : Endpoint{Edge::Bottom, index - n + 1};
}

// Boundary order: tops left to right, then bottoms right to left.
int circular(int n, int index) { return index < n ? index : 3 * n - 1 - index; }

int from_circular(int n, int c) { return c < n ? c : 3 * n - 1 - c; }

Laurent loop_weight(int loops) {
  Laurent w = 1;
  for (int i = 0; i < loops; ++i) w *= Laurent::dtl_sqrt_q();
  return w;
}

}  // namespace

bool is_planar(int n, const std::vector<int>& partner) {
  std::vector<std::pair<int, int>> chords;
  for (int i = 0; i < 2 * n; ++i) {
    if (partner[i] > i) {
      int a = circular(n, i), b = circular(n, partner[i]);
      if (a > b) std::swap(a, b);
      chords.emplace_back(a, b);
    }
  }
  for (std::size_t x = 0; x < chords.size(); ++x) {
    for (std::size_t y = x + 1; y < chords.size(); ++y) {
      const auto [a, b] = chords[x];
      const auto [c, d] = chords[y];
      if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) return false;
    }
  }
  return true;
}

DiluteDiagram::DiluteDiagram(int n, const std::vector<Arc>& arcs) : n_(n), partner_(2 * n, -1) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "diagram needs n >= 1");
  for (const auto& [a, b] : arcs) {
    if (a.position < 1 || a.position > n || b.position < 1 || b.position > n || a == b)
      throw Error(ErrorKind::InvalidArgument, "arc endpoint out of range");
    const int ia = point_index(n, a), ib = point_index(n, b);
    if (partner_[ia] != -1 || partner_[ib] != -1)
      throw Error(ErrorKind::InvalidArgument, "arcs share an endpoint");
    partner_[ia] = ib;
    partner_[ib] = ia;
  }
  validate();
}

DiluteDiagram DiluteDiagram::from_partners(int n, std::vector<int> partner) {
  DiluteDiagram d;
  d.n_ = n;
  d.partner_ = std::move(partner);
  if (static_cast<int>(d.partner_.size()) != 2 * n)
    throw Error(ErrorKind::InvalidArgument, "partner array has wrong length");
  for (int i = 0; i < 2 * n; ++i) {
    const int p = d.partner_[i];
    if (p == -1) continue;
    if (p < 0 || p >= 2 * n || p == i || d.partner_[p] != i)
      throw Error(ErrorKind::InvalidArgument, "partner array is not an involution");
  }
  d.validate();
  return d;
}

void DiluteDiagram::validate() const {
  if (!is_planar(n_, partner_)) throw Error(ErrorKind::InvalidArgument, "arcs cross");
}

bool DiluteDiagram::occupied(Edge e, int position) const {
  return partner_[point_index(n_, Endpoint{e, position})] != -1;
}

std::vector<Arc> DiluteDiagram::arcs() const {
  std::vector<Arc> out;
  for (int i = 0; i < 2 * n_; ++i)
    if (partner_[i] > i) out.emplace_back(endpoint_of(n_, i), endpoint_of(n_, partner_[i]));
  return out;
}

std::string DiluteDiagram::to_string() const {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [a, b] : arcs()) {
    if (!first) os << ",";
    first = false;
    os << (a.edge == Edge::Top ? "t" : "b") << a.position << "-"
       << (b.edge == Edge::Top ? "t" : "b") << b.position;
  }
  os << "}";
  return os.str();
}

DiagramElement::DiagramElement(const DiluteDiagram& d, const Laurent& c) : n_(d.n()) { add(d, c); }

std::optional<Laurent> DiagramElement::coefficient(const DiluteDiagram& d) const {
  auto it = terms_.find(d);
  if (it == terms_.end()) return std::nullopt;
  return it->second;
}

DiagramElement& DiagramElement::add(const DiluteDiagram& d, const Laurent& c) {
  if (d.n() != n_) throw Error(ErrorKind::SizeMismatch, "diagram sizes differ");
  if (c.is_zero()) return *this;
  auto [it, inserted] = terms_.try_emplace(d, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

DiagramElement& DiagramElement::operator+=(const DiagramElement& o) {
  if (o.n_ != n_) throw Error(ErrorKind::SizeMismatch, "diagram sizes differ");
  for (const auto& [d, c] : o.terms_) add(d, c);
  return *this;
}

DiagramElement& DiagramElement::operator-=(const DiagramElement& o) {
  if (o.n_ != n_) throw Error(ErrorKind::SizeMismatch, "diagram sizes differ");
  for (const auto& [d, c] : o.terms_) add(d, -c);
  return *this;
}

DiagramElement operator*(const Laurent& c, const DiagramElement& a) {
  DiagramElement r(a.n_);
  for (const auto& [d, ca] : a.terms_) r.add(d, c * ca);
  return r;
}

std::string DiagramElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [d, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "[" + c.to_string() + "]" + d.to_string();
  }
  return out;
}

std::optional<std::pair<DiluteDiagram, int>> stack(const DiluteDiagram& upper,
                                                   const DiluteDiagram& lower) {
  const int n = upper.n();
  if (lower.n() != n) throw Error(ErrorKind::SizeMismatch, "diagram sizes differ");
  const auto& up = upper.partners();
  const auto& lo = lower.partners();
  for (int k = 0; k < n; ++k)
    if ((up[n + k] != -1) != (lo[k] != -1)) return std::nullopt;

  std::vector<bool> middle_seen(n, false);
  // Follows a strand from a point of `upper` (in_upper) or `lower` until it
  // leaves through the outer boundary; returns the result index.
  auto follow = [&](bool in_upper, int idx) {
    while (true) {
      if (in_upper) {
        const int p = up[idx];
        if (p < n) return p;
        middle_seen[p - n] = true;
        in_upper = false;
        idx = p - n;
      } else {
        const int p = lo[idx];
        if (p >= n) return p;
        middle_seen[p] = true;
        in_upper = true;
        idx = n + p;
      }
    }
  };

  std::vector<int> result(2 * n, -1);
  for (int i = 0; i < 2 * n; ++i) {
    if (result[i] != -1) continue;
    const bool top = i < n;
    if ((top ? up[i] : lo[i]) == -1) continue;
    const int end = follow(top, i);
    result[i] = end;
    result[end] = i;
  }

  int loops = 0;
  for (int k = 0; k < n; ++k) {
    if (middle_seen[k] || lo[k] == -1) continue;
    ++loops;
    // Walk the closed loop through the middle row.
    int cur = k;
    do {
      middle_seen[cur] = true;
      const int a = lo[cur];        // partner inside lower: another top point of lower
      middle_seen[a] = true;
      cur = up[n + a] - n;          // partner inside upper: another bottom point of upper
    } while (cur != k);
  }
  return std::make_pair(DiluteDiagram::from_partners(n, std::move(result)), loops);
}

DiagramElement compose(const DiagramElement& d1, const DiagramElement& d2) {
  if (d1.n() != d2.n()) throw Error(ErrorKind::SizeMismatch, "diagram sizes differ");
  const bool d2_first = kWordOrder == WordOrder::RightmostFirst;
  DiagramElement out(d1.n());
  for (const auto& [a, ca] : d1.terms()) {
    for (const auto& [b, cb] : d2.terms()) {
      auto stacked = d2_first ? stack(a, b) : stack(b, a);
      if (!stacked) continue;
      out.add(stacked->first, ca * cb * loop_weight(stacked->second));
    }
  }
  return out;
}

namespace {

// Sum over every string/vacancy pattern on the positions not in `fixed`
// of `local` arcs plus through-lines on the occupied free positions.
DiagramElement with_free_positions(int n, const std::vector<int>& fixed, const std::vector<Arc>& local) {
  std::vector<int> free;
  for (int p = 1; p <= n; ++p)
    if (std::find(fixed.begin(), fixed.end(), p) == fixed.end()) free.push_back(p);
  DiagramElement out(n);
  const unsigned patterns = 1u << free.size();
  for (unsigned mask = 0; mask < patterns; ++mask) {
    std::vector<Arc> arcs = local;
    for (std::size_t b = 0; b < free.size(); ++b)
      if (mask & (1u << b))
        arcs.emplace_back(Endpoint{Edge::Top, free[b]}, Endpoint{Edge::Bottom, free[b]});
    out.add(DiluteDiagram(n, arcs), 1);
  }
  return out;
}

Arc through(int p) { return {Endpoint{Edge::Top, p}, Endpoint{Edge::Bottom, p}}; }

}  // namespace

DiagramElement identity_element(int n) { return with_free_positions(n, {}, {}); }

DiagramElement generator_diagram(const GeneratorSymbol& symbol, int n, Flavor flavor) {
  if (flavor != Flavor::dTL)
    throw Error(ErrorKind::UnsupportedFlavor, "planar diagrams represent the dTL quotient only");
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "diagram needs n >= 1");
  require_in_range(symbol, n - 1);
  using K = GeneratorKind;
  const int a = symbol.site, b = symbol.site + 1;
  const Endpoint ta{Edge::Top, a}, tb{Edge::Top, b}, ba{Edge::Bottom, a}, bb{Edge::Bottom, b};
  switch (symbol.kind) {
    case K::Id: return identity_element(n);
    case K::S: return with_free_positions(n, {a}, {through(a)});
    case K::V: return with_free_positions(n, {a}, {});
    case K::Pss: return with_free_positions(n, {a, b}, {through(a), through(b)});
    case K::Psv: return with_free_positions(n, {a, b}, {through(a)});
    case K::Pvs: return with_free_positions(n, {a, b}, {through(b)});
    case K::Pvv: return with_free_positions(n, {a, b}, {});
    case K::E: return with_free_positions(n, {a, b}, {{ta, tb}, {ba, bb}});
    case K::Cap: return with_free_positions(n, {a, b}, {{ba, bb}});
    case K::Cup: return with_free_positions(n, {a, b}, {{ta, tb}});
    case K::SlantF: return with_free_positions(n, {a, b}, {{ba, tb}});
    case K::SlantB: return with_free_positions(n, {a, b}, {{bb, ta}});
    case K::Braid:
    case K::BraidInv: {
      // dTL quotient: b = q^-1 Pss + q E, b^-1 = q Pss + q^-1 E.
      const int s = symbol.kind == K::Braid ? 1 : -1;
      return Laurent::q_power(-s) * generator_diagram({K::Pss, a}, n) +
             Laurent::q_power(s) * generator_diagram({K::E, a}, n);
    }
  }
  throw Error(ErrorKind::InvalidArgument, "unknown generator");
}

DiagramElement to_diagrams(const AlgebraElement& element, int n) {
  DiagramElement out(n);
  std::map<GeneratorSymbol, DiagramElement> cache;
  auto gen = [&](const GeneratorSymbol& s) -> const DiagramElement& {
    auto it = cache.find(s);
    if (it == cache.end()) it = cache.emplace(s, generator_diagram(s, n)).first;
    return it->second;
  };
  for (const auto& [w, c] : element.terms()) {
    if (!c.q_only())
      throw Error(ErrorKind::UnsupportedFlavor, "coefficient " + c.to_string() + " is not a Laurent polynomial in q");
    if (w.empty()) {
      out += c * identity_element(n);
      continue;
    }
    DiagramElement prod = gen(w.front());
    for (std::size_t i = 1; i < w.size(); ++i) prod = compose(prod, gen(w[i]));
    out += c * prod;
  }
  return out;
}

std::vector<DiluteDiagram> enumerate_basis(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "enumerate_basis needs n >= 1");
  if (n > kMaxBasisSites) throw Error(ErrorKind::SizeTooLarge, "enumerate_basis supports n <= 6");
  std::vector<DiluteDiagram> out;
  std::vector<int> partner(2 * n, -1);
  std::vector<int> open;  // circular positions of unmatched opened points
  std::function<void(int)> walk = [&](int c) {
    if (c == 2 * n) {
      if (open.empty()) out.push_back(DiluteDiagram::from_partners(n, partner));
      return;
    }
    if (static_cast<int>(open.size()) > 2 * n - c) return;  // cannot close them all
    walk(c + 1);  // vacancy
    open.push_back(c);
    walk(c + 1);  // opens an arc
    open.pop_back();
    if (!open.empty()) {  // closes the innermost open arc
      const int o = open.back();
      open.pop_back();
      const int i = from_circular(n, o), j = from_circular(n, c);
      partner[i] = j;
      partner[j] = i;
      walk(c + 1);
      partner[i] = partner[j] = -1;
      open.push_back(o);
    }
  };
  walk(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DiluteDiagram> enumerate_basis_by_filter(int n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "enumerate_basis needs n >= 1");
  if (n > kMaxBasisSites) throw Error(ErrorKind::SizeTooLarge, "enumerate_basis supports n <= 6");
  std::vector<DiluteDiagram> out;
  std::vector<int> partner(2 * n, -2);  // -2 = undecided
  std::function<void()> rec = [&] {
    const auto it = std::find(partner.begin(), partner.end(), -2);
    if (it == partner.end()) {
      if (is_planar(n, partner)) out.push_back(DiluteDiagram::from_partners(n, partner));
      return;
    }
    const int i = static_cast<int>(it - partner.begin());
    partner[i] = -1;
    rec();
    for (int j = i + 1; j < 2 * n; ++j) {
      if (partner[j] != -2) continue;
      partner[i] = j;
      partner[j] = i;
      rec();
      partner[j] = -2;
    }
    partner[i] = -2;
  };
  rec();
  std::sort(out.begin(), out.end());
  return out;
}

ExactCheckReport check_catalog_exact(const RelationCatalog& catalog, int jobs) {
  if (catalog.flavor != Flavor::dTL)
    throw Error(ErrorKind::UnsupportedFlavor, "exact diagram check covers the dTL quotient only");
  ExactCheckReport report;
  if (catalog.relations.empty()) return report;
  const int n = catalog.N + 1;
  if (n > kMaxBasisSites) throw Error(ErrorKind::SizeTooLarge, "exact check supports N + 1 <= 6");
  std::vector<std::optional<DiagramElement>> diffs(catalog.relations.size());
  detail::parallel_for(catalog.relations.size(), jobs, [&](std::size_t i) {
    const Relation& rel = catalog.relations[i];
    DiagramElement d = to_diagrams(rel.lhs, n) - to_diagrams(rel.rhs, n);
    if (!d.is_zero()) diffs[i] = std::move(d);
  });
  report.checked = catalog.relations.size();
  for (std::size_t i = 0; i < diffs.size(); ++i)
    if (diffs[i]) report.failures.push_back({catalog.relations[i].name, std::move(*diffs[i])});
  return report;
}

RegularRepresentation::RegularRepresentation(int n, cplx q) : n_(n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "regular representation needs n >= 1");
  if (n > kMaxRegularSites)
    throw Error(ErrorKind::SizeTooLarge, "regular representation supports n <= 5");
  params_ = derive_params(Flavor::dTL, cplx{0.0, 1.0} * std::log(q));
  basis_ = enumerate_basis(n);
  for (std::size_t i = 0; i < basis_.size(); ++i)
    index_.emplace(basis_[i], static_cast<Eigen::Index>(i));
}

Eigen::MatrixXcd RegularRepresentation::generator(const GeneratorSymbol& g) const {
  {
    std::lock_guard lock(cache_mutex_);
    auto it = cache_.find(g);
    if (it != cache_.end()) return it->second;
  }
  const DiagramElement elem = generator_diagram(g, n_);
  const Scalars scalars = params_.scalars();
  const Eigen::Index dim = dimension();
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    const DiagramElement image = compose(elem, DiagramElement(basis_[col]));
    for (const auto& [d, c] : image.terms()) m(index_.at(d), col) += c.evaluate(scalars);
  }
  std::lock_guard lock(cache_mutex_);
  return cache_.emplace(g, std::move(m)).first->second;
}

std::unique_ptr<RegularRepresentation> regular_representation(int n, cplx q) {
  return std::make_unique<RegularRepresentation>(n, q);
}

}  // namespace dilute
