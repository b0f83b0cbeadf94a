#include "dilute/serialize.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "dilute/error.hpp"

namespace dilute {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidArgument, what); }

std::string_view edge_name(Edge e) { return e == Edge::Top ? "top" : "bottom"; }

Edge edge_from(const json& j) {
  const auto s = j.get<std::string>();
  if (s == "top") return Edge::Top;
  if (s == "bottom") return Edge::Bottom;
  bad("unknown diagram edge '" + s + "'");
}

}  // namespace

json complex_json(cplx z) { return json::array({z.real(), z.imag()}); }

json to_json(const Laurent& p) {
  json num = json::array();
  for (const auto& [m, c] : p.terms()) {
    const bool q_only = m.exp[1] == 0 && m.exp[2] == 0 && m.exp[3] == 0;
    if (q_only)
      num.push_back({c.re, c.im, m.exp[0]});
    else
      num.push_back({c.re, c.im, m.exp[0], m.exp[1], m.exp[2], m.exp[3]});
  }
  return json{{"num", num}};
}

Laurent laurent_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j["num"].is_array()) bad("Laurent data needs a 'num' array");
  Laurent out;
  for (const auto& t : j["num"]) {
    if (!t.is_array() || (t.size() != 3 && t.size() != 6)) bad("Laurent term must have 3 or 6 entries");
    Monomial m;
    for (std::size_t k = 2; k < t.size(); ++k) m.exp[k - 2] = t[k].get<int>();
    out += Laurent::monomial(GaussInt{t[0].get<long long>(), t[1].get<long long>()}, m);
  }
  return out;
}

json to_json(const Word& w) {
  json arr = json::array();
  for (const auto& g : w) arr.push_back({{"kind", kind_name(g.kind)}, {"site", g.site}});
  return arr;
}

json to_json(const AlgebraElement& e) {
  json arr = json::array();
  for (const auto& [w, c] : e.terms()) arr.push_back({{"word", to_json(w)}, {"coeff", to_json(c)}});
  return arr;
}

AlgebraElement element_from_json(const json& j) {
  if (!j.is_array()) bad("algebra element must be an array of terms");
  AlgebraElement out;
  for (const auto& t : j) {
    Word w;
    for (const auto& g : t.at("word")) {
      auto k = kind_from_name(g.at("kind").get<std::string>());
      if (!k) bad("unknown generator kind");
      w.push_back(GeneratorSymbol{*k, g.at("site").get<int>()});
    }
    out += AlgebraElement::word(w, laurent_from_json(t.at("coeff")));
  }
  return out;
}

json to_json(const RelationCatalog& c) {
  json arr = json::array();
  for (const auto& r : c.relations)
    arr.push_back({{"name", r.name}, {"family", to_string(r.family)}, {"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}});
  return arr;
}

json to_json(const DiluteDiagram& d) {
  json arcs = json::array();
  for (const auto& [a, b] : d.arcs())
    arcs.push_back(json::array({json::array({edge_name(a.edge), a.position}), json::array({edge_name(b.edge), b.position})}));
  return json{{"n", d.n()}, {"arcs", arcs}};
}

DiluteDiagram diagram_from_json(const json& j) {
  std::vector<Arc> arcs;
  for (const auto& a : j.at("arcs")) {
    if (!a.is_array() || a.size() != 2) bad("arc must have two endpoints");
    arcs.emplace_back(Endpoint{edge_from(a[0][0]), a[0][1].get<int>()}, Endpoint{edge_from(a[1][0]), a[1][1].get<int>()});
  }
  return DiluteDiagram(j.at("n").get<int>(), arcs);
}

json to_json(const DiagramElement& e) {
  json terms = json::array();
  for (const auto& [d, c] : e.terms()) terms.push_back({{"diagram", to_json(d)}, {"coeff", to_json(c)}});
  return json{{"n", e.n()}, {"terms", terms}};
}

json to_json(const CheckReport& r) {
  json fam = json::object();
  for (const auto& [f, v] : r.family_max) fam[std::string(to_string(f))] = v;
  json results = json::array();
  for (const auto& x : r.results)
    results.push_back({{"name", x.name},
                       {"family", to_string(x.family)},
                       {"residual", x.residual},
                       {"passed", x.passed},
                       {"orientation_sensitive", x.orientation_sensitive}});
  return json{{"tol", r.tol},
              {"passed", r.passed},
              {"relations", r.results.size()},
              {"max_residual", r.max_residual},
              {"family_max", fam},
              {"failures", r.failures()},
              {"results", results}};
}

json to_json(const ExactCheckReport& r) {
  json fails = json::array();
  for (const auto& f : r.failures) fails.push_back({{"name", f.name}, {"difference", to_json(f.difference)}});
  return json{{"checked", r.checked}, {"passed", r.passed()}, {"failures", fails}};
}

json sparse_entries(const Eigen::MatrixXcd& m, double rel_cut) {
  const double top = m.size() ? m.cwiseAbs().maxCoeff() : 0.0;
  json arr = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      const cplx v = m(r, c);
      if (std::abs(v) == 0.0 || std::abs(v) <= rel_cut * top) continue;
      arr.push_back({r, c, v.real(), v.imag()});
    }
  return arr;
}

Eigen::MatrixXcd dense_from_entries(const json& entries, Eigen::Index rows, Eigen::Index cols) {
  if (!entries.is_array()) bad("'entries' must be an array");
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(rows, cols);
  for (const auto& e : entries) {
    if (!e.is_array() || e.size() != 4) bad("matrix entry must be [row, col, re, im]");
    const auto r = e[0].get<long long>(), c = e[1].get<long long>();
    if (r < 0 || c < 0 || r >= rows || c >= cols)
      throw Error(ErrorKind::IndexOutOfRange, "matrix entry (" + std::to_string(r) + ", " + std::to_string(c) + ") out of range");
    m(r, c) += cplx{e[2].get<double>(), e[3].get<double>()};
  }
  return m;
}

cplx BraidFile::lambda() const { return cplx{0.0, 1.0} * std::log(q); }

BraidFile braid_file_from_json(const json& j) {
  try {
    BraidFile b;
    b.m = j.at("m").get<int>();
    if (b.m < 1) bad("braid file: m must be positive");
    b.q = {j.at("q_re").get<double>(), j.value("q_im", 0.0)};
    b.omega = {j.at("omega_re").get<double>(), j.value("omega_im", 0.0)};
    b.sigma = j.at("sigma").get<int>();
    const Eigen::Index dim = static_cast<Eigen::Index>(b.m) * b.m;
    b.braid_ss = dense_from_entries(j.at("entries"), dim, dim);
    return b;
  } catch (const json::exception& e) {
    bad(std::string("braid file: ") + e.what());
  }
}

json to_json(const BraidFile& b) {
  return json{{"m", b.m},
              {"q_re", b.q.real()},
              {"q_im", b.q.imag()},
              {"omega_re", b.omega.real()},
              {"omega_im", b.omega.imag()},
              {"sigma", b.sigma},
              {"entries", sparse_entries(b.braid_ss)}};
}

BraidFile read_braid_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot open braid file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    bad("braid file '" + path + "' is not valid JSON: " + e.what());
  }
  return braid_file_from_json(j);
}

json to_json(const VertexRep& rep) {
  const auto& p = rep.params();
  json gens = json::object();
  for (const auto& [k, m] : rep.locals())
    gens[std::string(kind_name(k))] = json{{"rows", m.rows()}, {"entries", sparse_entries(m)}};
  return json{{"m", rep.string_colours()},
              {"local_dim", rep.local_dim()},
              {"flavor", to_string(p.flavor)},
              {"q_re", p.q.real()},
              {"q_im", p.q.imag()},
              {"omega_re", p.omega.real()},
              {"omega_im", p.omega.imag()},
              {"sigma", p.sigma},
              {"generators", gens}};
}

json weights_to_json(const Eigen::MatrixXcd& x, int d, cplx u, cplx lambda, const std::string& form,
                     double rel_cut) {
  if (x.rows() != d * d || x.cols() != d * d) throw Error(ErrorKind::SizeMismatch, "weights need a two-site matrix");
  const double top = x.cwiseAbs().maxCoeff();
  json entries = json::array();
  for (int c = 0; c < d; ++c)
    for (int dd = 0; dd < d; ++dd)
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
          const cplx v = x(c * d + dd, a * d + b);
          if (std::abs(v) == 0.0 || std::abs(v) <= rel_cut * top) continue;
          entries.push_back({a, b, c, dd, v.real(), v.imag()});
        }
  json out{{"local_dim", d}, {"u_re", u.real()}, {"u_im", u.imag()}, {"lambda", lambda.real()}};
  if (lambda.imag() != 0.0) out["lambda_im"] = lambda.imag();
  out["form"] = form;
  out["entries"] = entries;
  return out;
}

void write_spectrum_csv(std::ostream& os, const std::vector<SpectrumRow>& rows) {
  os << "u_re,u_im,idx,eig_re,eig_im\n";
  std::ostringstream line;
  line << std::setprecision(17);
  for (const auto& r : rows) {
    line.str("");
    line << r.u.real() << ',' << r.u.imag() << ',' << r.idx << ',' << r.eig.real() << ',' << r.eig.imag() << '\n';
    os << line.str();
  }
}

}  // namespace dilute
