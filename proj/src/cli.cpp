#include "dilute/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <random>
#include <sstream>

#include "dilute/baxterization.hpp"
#include "dilute/catalog.hpp"
#include "dilute/diagrams.hpp"
#include "dilute/error.hpp"
#include "dilute/serialize.hpp"
#include "dilute/transfer.hpp"
#include "dilute/vertex_rep.hpp"
#include "parallel.hpp"

namespace dilute {

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitConfig = 2;

struct RunConfig {
  std::string command;
  std::string flavor = "dtl";
  std::string lambda = "0.6";
  bool lambda_given = false;
  int n = 0;  // 0: command default
  int L = 3;
  std::optional<double> tol;
  std::uint64_t seed = 42;
  int jobs = 1;
  std::string out;
  std::optional<std::string> omega;
  std::optional<int> sigma;
  std::string braid_file;
  std::string u = "0.2";
  std::string form = "face";
  std::string grid;
  bool grid_given = false;
  bool inversion = false;
  int k = 0;
  int samples = 5;
};

cplx parse_complex(const std::string& s, const std::string& what) {
  std::vector<double> parts;
  std::stringstream ss(s);
  std::string tok;
  char sep = s.find(':') != std::string::npos ? ':' : ',';
  while (std::getline(ss, tok, sep)) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidArgument, "cannot parse " + what + " '" + s + "'");
    }
  }
  if (parts.empty() || parts.size() > 2) throw Error(ErrorKind::InvalidArgument, "cannot parse " + what + " '" + s + "'");
  return {parts[0], parts.size() == 2 ? parts[1] : 0.0};
}

// comma separated; a complex point is written re:im
std::vector<cplx> parse_grid(const std::string& s) {
  std::vector<cplx> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(parse_complex(tok, "grid point"));
  }
  return out;
}

Flavor parse_flavor(const RunConfig& c) {
  auto f = flavor_from_name(c.flavor);
  if (!f) throw Error(ErrorKind::InvalidArgument, "unknown flavor '" + c.flavor + "'");
  return *f;
}

json config_json(const RunConfig& c) {
  json j{{"command", c.command}, {"flavor", c.flavor}, {"lambda", c.lambda}};
  if (c.command != "spectrum") j["n"] = c.n;
  if (c.command == "spectrum") j["L"] = c.L;
  if (c.tol) j["tol"] = *c.tol;
  j["seed"] = c.seed;
  j["jobs"] = c.jobs;
  if (!c.braid_file.empty()) j["braid_file"] = c.braid_file;
  if (c.omega) j["omega"] = *c.omega;
  if (c.sigma) j["sigma"] = *c.sigma;
  if (c.command == "export") {
    j["u"] = c.u;
    j["form"] = c.form;
  }
  if (c.command == "ybe" || c.command == "spectrum") j["grid"] = c.grid;
  if (c.command == "ybe") j["inversion"] = c.inversion;
  if (c.command == "spectrum") j["k"] = c.k;
  return j;
}

json envelope(const RunConfig& c) { return json{{"version", kVersion}, {"config", config_json(c)}}; }

void emit_json(const json& j, const RunConfig& c, std::ostream& out) {
  const std::string text = j.dump(2) + "\n";
  if (c.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(c.out, std::ios::binary);
  if (!f) throw Error(ErrorKind::Io, "cannot write '" + c.out + "'");
  f << text;
  if (!f) throw Error(ErrorKind::Io, "write to '" + c.out + "' failed");
}

struct BuiltRep {
  std::shared_ptr<const VertexRep> rep;
  std::optional<DilutionResult> dilution;
};

BuiltRep build_rep(const RunConfig& c, int n) {
  const Flavor flavor = parse_flavor(c);
  if (flavor == Flavor::dTL) {
    if (c.omega || c.sigma || !c.braid_file.empty())
      throw Error(ErrorKind::InvalidArgument, "--omega, --sigma and --braid-file apply to dbwm only");
    const cplx lambda = parse_complex(c.lambda, "lambda");
    return {std::make_shared<const VertexRep>(build_dtl_rep(lambda, n)), std::nullopt};
  }
  if (c.braid_file.empty()) throw Error(ErrorKind::InvalidArgument, "dbwm needs --braid-file");
  BraidFile bf = read_braid_file(c.braid_file);
  cplx lambda = bf.lambda();
  if (c.lambda_given) lambda = parse_complex(c.lambda, "lambda");
  const cplx omega = c.omega ? parse_complex(*c.omega, "omega") : bf.omega;
  const int sigma = c.sigma ? *c.sigma : bf.sigma;
  DilutionResult res = build_dbwm_rep_from_braid(lambda, omega, sigma, bf.braid_ss, n, false,
                                                 c.tol.value_or(1e-10));
  auto rep = std::make_shared<const VertexRep>(res.rep);
  return {rep, std::move(res)};
}

FaceOperatorFamily family_for(const RunConfig& c, const BuiltRep& b) {
  return parse_flavor(c) == Flavor::dTL ? make_dtl_family(b.rep) : make_dbwm_family(b.rep);
}

json params_json(const AlgebraParams& p) {
  return json{{"flavor", to_string(p.flavor)},
              {"lambda", complex_json(p.lambda)},
              {"q", complex_json(p.q)},
              {"omega", complex_json(p.omega)},
              {"sigma", p.sigma},
              {"eta", complex_json(p.eta)},
              {"sqrtQ", complex_json(p.sqrt_q)}};
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  const int n = c.n ? c.n : 4;
  const double tol = c.tol.value_or(1e-10);
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "--n must be at least 2");
  json rep_j = envelope(c);
  BuiltRep b = build_rep(c, n);
  const CheckReport report = check_relations(*b.rep, build_catalog(b.rep->params().flavor, n - 1), tol, c.jobs);
  rep_j["params"] = params_json(b.rep->params());
  if (b.dilution) {
    rep_j["dilution"] = {{"cubic_residual", b.dilution->cubic_residual},
                         {"gauge", complex_json(b.dilution->gauge)}};
  }
  rep_j["report"] = to_json(report);
  rep_j["status"] = report.passed ? "pass" : "fail";
  emit_json(rep_j, c, out);
  return report.passed ? kExitPass : kExitFail;
}

int cmd_diagrams(const RunConfig& c, std::ostream& out) {
  const int n = c.n ? c.n : 3;
  const double tol = c.tol.value_or(1e-12);
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "--n must be at least 1");
  if (n > kMaxBasisSites) throw Error(ErrorKind::SizeTooLarge, "diagram bases stop at n = 6");
  if (parse_flavor(c) != Flavor::dTL) throw Error(ErrorKind::UnsupportedFlavor, "diagram calculus is dTL only");
  json j = envelope(c);
  bool ok = true;

  json counts = json::array();
  for (int k = 1; k <= n; ++k) {
    const auto a = enumerate_basis(k);
    const auto f = enumerate_basis_by_filter(k);
    const bool agree = a == f;
    ok = ok && agree;
    counts.push_back({{"n", k}, {"count", a.size()}, {"filter_count", f.size()}, {"agree", agree}});
  }
  j["basis"] = counts;

  if (n >= 2) {
    const ExactCheckReport exact = check_catalog_exact(build_catalog(Flavor::dTL, n - 1), c.jobs);
    ok = ok && exact.passed();
    j["exact"] = to_json(exact);
  }

  if (n >= 2 && n <= kMaxRegularSites) {
    std::mt19937_64 rng(c.seed);
    std::uniform_real_distribution<double> angle(0.15, 1.4);
    std::uniform_real_distribution<double> radius(0.85, 1.15);
    std::vector<cplx> qs{std::exp(cplx{0.0, -1.0} * parse_complex(c.lambda, "lambda"))};
    for (int s = 0; s < c.samples; ++s) qs.push_back(std::polar(radius(rng), -angle(rng)));
    json runs = json::array();
    for (cplx q : qs) {
      auto reg = regular_representation(n, q);
      const CheckReport r = check_relations(*reg, build_catalog(Flavor::dTL, n - 1), tol, c.jobs);
      ok = ok && r.passed;
      runs.push_back({{"q", complex_json(q)},
                      {"dimension", reg->dimension()},
                      {"max_residual", r.max_residual},
                      {"passed", r.passed},
                      {"failures", r.failures()}});
    }
    j["regular_representation"] = runs;
  }
  j["status"] = ok ? "pass" : "fail";
  emit_json(j, c, out);
  return ok ? kExitPass : kExitFail;
}

int cmd_ybe(const RunConfig& c, std::ostream& out) {
  const int n = c.n ? c.n : 4;
  const double tol = c.tol.value_or(1e-9);
  if (n < 3) throw Error(ErrorKind::InvalidArgument, "YBE needs --n >= 3");
  BuiltRep b = build_rep(c, n);
  const FaceOperatorFamily fam = family_for(c, b);
  const AlgebraParams& p = fam.params();
  std::vector<cplx> grid;
  if (c.grid_given) {
    grid = parse_grid(c.grid);
  } else {
    const cplx step = p.eta * p.lambda - p.lambda;
    for (int k = 1; k <= 5; ++k) grid.push_back(0.1 * k * step);
  }
  if (grid.empty()) throw Error(ErrorKind::InvalidArgument, "empty grid");

  json j = envelope(c);
  j["params"] = params_json(p);
  j["grid"] = json::array();
  for (cplx u : grid) j["grid"].push_back(complex_json(u));
  bool ok = true;
  json ybe = json::array();
  double worst = 0.0;
  for (int site = 1; site + 2 <= n; ++site) {
    const ScanResult s = scan_ybe(fam, site, grid, grid, c.jobs);
    worst = std::max(worst, s.max_residual);
    ybe.push_back({{"j", site},
                   {"points", s.points},
                   {"max_residual", s.max_residual},
                   {"argmax_u", complex_json(s.arg_u)},
                   {"argmax_v", complex_json(s.arg_v)}});
  }
  ok = worst <= tol;
  j["ybe"] = {{"max_residual", worst}, {"per_site", ybe}};
  if (c.inversion) {
    const ScanResult s = scan_inversion(fam, 1, grid, c.jobs);
    ok = ok && s.max_residual <= tol;
    j["inversion"] = {{"points", s.points}, {"max_residual", s.max_residual}, {"argmax_u", complex_json(s.arg_u)}};
  }
  j["tol"] = tol;
  j["status"] = ok ? "pass" : "fail";
  emit_json(j, c, out);
  return ok ? kExitPass : kExitFail;
}

int cmd_export(const RunConfig& c, std::ostream& out) {
  if (c.form != "face" && c.form != "r") throw Error(ErrorKind::InvalidArgument, "--form must be face or r");
  const int n = c.n ? c.n : 2;
  BuiltRep b = build_rep(c, std::max(n, 2));
  const FaceOperatorFamily fam = family_for(c, b);
  const cplx u = parse_complex(c.u, "u");
  const Eigen::MatrixXcd m = c.form == "face" ? fam.local(u) : r_matrix(fam, u);
  json j = weights_to_json(m, fam.local_dim(), u, fam.params().lambda, c.form);
  emit_json(j, c, out);
  return kExitPass;
}

int cmd_spectrum(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const double tol = c.tol.value_or(1e-9);
  BuiltRep b = build_rep(c, 2);
  const TransferSpec spec(family_for(c, b), c.L);
  std::vector<cplx> grid = c.grid_given ? parse_grid(c.grid) : std::vector<cplx>{0.0, 0.1, 0.2, 0.3, 0.4};
  if (grid.empty()) throw Error(ErrorKind::InvalidArgument, "empty u-grid");

  std::vector<Eigen::MatrixXcd> ts(grid.size());
  std::vector<std::vector<cplx>> evs(grid.size());
  detail::parallel_for(grid.size(), c.jobs, [&](std::size_t i) {
    ts[i] = transfer_matrix(spec, grid[i]);
    evs[i] = sorted_eigenvalues(ts[i]);
    if (c.k > 0 && static_cast<std::size_t>(c.k) < evs[i].size()) evs[i].resize(c.k);
  });
  std::vector<SpectrumRow> rows;
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (std::size_t e = 0; e < evs[i].size(); ++e) rows.push_back({grid[i], static_cast<int>(e), evs[i][e]});

  json comm = json::array();
  double worst = 0.0;
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const double v = commutator_norm(ts[i], ts[i + 1]);
    worst = std::max(worst, v);
    comm.push_back({{"u", complex_json(grid[i])}, {"v", complex_json(grid[i + 1])}, {"norm", v}});
  }
  json j = envelope(c);
  j["dimension"] = spec.dimension();
  j["rows"] = rows.size();
  j["commutators"] = comm;
  j["max_commutator"] = worst;
  double vac = 0.0;
  for (cplx u : grid) vac = std::max(vac, vacancy_number_commutator(spec, u));
  j["vacancy_number_commutator"] = vac;
  const bool ok = worst <= tol;
  j["tol"] = tol;
  j["status"] = ok ? "pass" : "fail";

  if (c.out.empty()) {
    write_spectrum_csv(out, rows);
    err << j.dump(2) << "\n";
  } else {
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw Error(ErrorKind::Io, "cannot write '" + c.out + "'");
    write_spectrum_csv(f, rows);
    if (!f) throw Error(ErrorKind::Io, "write to '" + c.out + "' failed");
    out << j.dump(2) << "\n";
  }
  return ok ? kExitPass : kExitFail;
}

int exit_code_for(ErrorKind k) {
  switch (k) {
    case ErrorKind::CubicViolation:
    case ErrorKind::RankError:
    case ErrorKind::CatalogViolation:
    case ErrorKind::NotConverged:
      return kExitFail;
    default:
      return kExitConfig;
  }
}

void add_shared(CLI::App* sub, RunConfig& c) {
  sub->add_option("--flavor", c.flavor, "dtl or dbwm")->check(CLI::IsMember({"dtl", "dbwm"}));
  sub->add_option_function<std::string>(
      "--lambda",
      [&c](const std::string& s) {
        c.lambda = s;
        c.lambda_given = true;
      },
      "crossing angle, re or re,im (default 0.6)");
  sub->add_option("--n", c.n, "chain length");
  sub->add_option("--tol", c.tol, "tolerance");
  sub->add_option("--seed", c.seed, "seed for randomized checks");
  sub->add_option("--jobs", c.jobs, "worker threads")->check(CLI::PositiveNumber);
  sub->add_option("--out", c.out, "output path");
  sub->add_option("--omega", c.omega, "dbwm twist, re or re,im");
  sub->add_option("--sigma", c.sigma, "dbwm sign")->check(CLI::IsMember({-1, 1}));
  sub->add_option("--braid-file", c.braid_file, "BWM braid matrix (JSON)");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"dilute braid-monoid algebras: relation checks, Baxterization, transfer matrices"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "check the defining relations in a vertex representation");
  auto* diagrams = app.add_subcommand("diagrams", "diagram basis, exact relation check and regular representation");
  auto* ybe = app.add_subcommand("ybe", "Yang-Baxter and inversion scans of the face operator");
  auto* exp = app.add_subcommand("export", "dump face operator or R-matrix weights");
  auto* spec = app.add_subcommand("spectrum", "transfer-matrix spectra over a u-grid");
  for (auto* s : {verify, diagrams, ybe, exp, spec}) add_shared(s, c);

  diagrams->add_option("--samples", c.samples, "random q values for the regular representation");
  ybe->add_option_function<std::string>("--grid", [&c](const std::string& s) { c.grid = s; c.grid_given = true; },
                                        "comma separated u values (re or re:im)");
  ybe->add_flag("--inversion", c.inversion, "also scan the inversion relation");
  exp->add_option("--u", c.u, "spectral parameter, re or re,im");
  exp->add_option("--form", c.form, "face or r")->check(CLI::IsMember({"face", "r"}));
  spec->add_option("--L", c.L, "row length");
  spec->add_option_function<std::string>("--u-grid", [&c](const std::string& s) { c.grid = s; c.grid_given = true; },
                                         "comma separated u values (re or re:im)");
  spec->add_option("--k", c.k, "eigenvalues per point (0: all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForVersion& e) {
    out << kVersion << "\n";
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }

  for (auto* s : app.get_subcommands()) c.command = s->get_name();
  if (c.n == 0) c.n = c.command == "diagrams" ? 3 : c.command == "export" ? 2 : 4;

  try {
    if (c.command == "verify") return cmd_verify(c, out);
    if (c.command == "diagrams") return cmd_diagrams(c, out);
    if (c.command == "ybe") return cmd_ybe(c, out);
    if (c.command == "export") return cmd_export(c, out);
    if (c.command == "spectrum") return cmd_spectrum(c, out, err);
  } catch (const Error& e) {
    json j = envelope(c);
    j["status"] = "error";
    j["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}};
    out << j.dump(2) << "\n";
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}

}  // namespace dilute
