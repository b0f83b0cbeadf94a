#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dilute/cli.hpp"
#include "dilute/serialize.hpp"
#include "dilute/vertex_rep.hpp"

using namespace dilute;
using K = GeneratorKind;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "dilute");
  std::vector<const char*> argv;
  for (auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path tmp(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("dilute_cli_test_" + name);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path write_braid(const std::string& name, const Eigen::MatrixXcd& B, cplx q, cplx w) {
  BraidFile b{2, q, w, -1, B};
  const auto p = tmp(name);
  std::ofstream(p) << to_json(b).dump();
  return p;
}

}  // namespace

TEST(Cli, VerifyDtl) {
  const auto r = run({"verify", "--flavor", "dtl", "--lambda", "0.6", "--n", "4", "--tol", "1e-10"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["version"], kVersion);
  EXPECT_EQ(j["config"]["n"], 4);
  EXPECT_EQ(j["status"], "pass");
  EXPECT_TRUE(j["report"]["family_max"].contains("Dilute"));
  EXPECT_LE(j["report"]["max_residual"].get<double>(), 1e-10);
}

TEST(Cli, VerifyDegenerate) {
  const auto r = run({"verify", "--flavor", "dtl", "--lambda", "0"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(json::parse(r.out)["error"]["kind"], "DegenerateParams");
}

TEST(Cli, VerifyComplexLambda) {
  EXPECT_EQ(run({"verify", "--lambda", "0.5,0.1", "--n", "3"}).code, 0);
}

TEST(Cli, VerifyBadBraidFile) {
  const cplx q = std::exp(cplx{0, -0.6});
  const auto p = write_braid("bad.json", Eigen::MatrixXcd::Identity(4, 4), q, -q * q * q);
  const auto r = run({"verify", "--flavor", "dbwm", "--braid-file", p.string()});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(json::parse(r.out)["error"]["kind"], "CubicViolation");
}

TEST(Cli, VerifyGoodBraidFile) {
  const auto rep = build_dtl_rep(0.6, 2);
  const auto p = write_braid("good.json", string_block(rep.local(K::Braid), 2), rep.params().q, rep.params().omega);
  const auto r = run({"verify", "--flavor", "dbwm", "--braid-file", p.string(), "--n", "4"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_LE(json::parse(r.out)["dilution"]["cubic_residual"].get<double>(), 1e-12);
}

TEST(Cli, ConfigErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"verify", "--flavor", "xyz"}).code, 2);
  EXPECT_EQ(run({"verify", "--flavor", "dbwm"}).code, 2);
  EXPECT_EQ(run({"verify", "--lambda", "abc"}).code, 2);
  EXPECT_EQ(run({"verify", "--omega", "1"}).code, 2);
  EXPECT_EQ(run({"verify", "--flavor", "dbwm", "--braid-file", "/nonexistent.json"}).code, 2);
}

TEST(Cli, Help) { EXPECT_EQ(run({"--help"}).code, 0); }

TEST(Cli, Diagrams) {
  const auto r = run({"diagrams", "--n", "3"});
  EXPECT_EQ(r.code, 0) << r.out;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["basis"][2]["count"], 51);
  EXPECT_TRUE(j["exact"]["passed"].get<bool>());
  EXPECT_EQ(j["regular_representation"].size(), 6u);
  EXPECT_EQ(run({"diagrams", "--n", "7"}).code, 2);
}

TEST(Cli, YbeDefaultGrid) {
  const auto r = run({"ybe", "--flavor", "dtl", "--lambda", "0.6"});
  EXPECT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_LE(j["ybe"]["max_residual"].get<double>(), 1e-9);
  EXPECT_EQ(j["grid"].size(), 5u);
  EXPECT_TRUE(j["ybe"]["per_site"][0].contains("argmax_u"));
}

TEST(Cli, YbeInversionAtAnnihilationPoint) {
  const auto r = run({"ybe", "--lambda", "0.6", "--grid", "0.1,0.6,0.2:0.1", "--inversion"});
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_LE(json::parse(r.out)["inversion"]["max_residual"].get<double>(), 1e-10);
}

TEST(Cli, YbeEmptyGrid) { EXPECT_EQ(run({"ybe", "--grid", ""}).code, 2); }

TEST(Cli, YbeJobsDeterministic) {
  const auto a = run({"ybe", "--jobs", "1"}), b = run({"ybe", "--jobs", "3"});
  auto ja = json::parse(a.out), jb = json::parse(b.out);
  EXPECT_EQ(ja["ybe"], jb["ybe"]);
}

TEST(Cli, ExportNineteen) {
  const auto p = tmp("weights.json");
  const auto r = run({"export", "--lambda", "0.6", "--u", "0.2", "--out", p.string()});
  EXPECT_EQ(r.code, 0);
  const auto first = slurp(p);
  const auto j = json::parse(first);
  EXPECT_EQ(j["entries"].size(), 19u);
  EXPECT_EQ(j["local_dim"], 3);
  EXPECT_EQ(run({"export", "--lambda", "0.6", "--u", "0.2", "--out", p.string()}).code, 0);
  EXPECT_EQ(slurp(p), first);
}

TEST(Cli, ExportAtZero) {
  const auto face = json::parse(run({"export", "--u", "0"}).out);
  ASSERT_EQ(face["entries"].size(), 9u);
  for (const auto& e : face["entries"]) {
    EXPECT_EQ(e[0], e[2]);
    EXPECT_EQ(e[1], e[3]);
    EXPECT_EQ(e[4].get<double>(), 1.0);
  }
  const auto r = json::parse(run({"export", "--u", "0", "--form", "r"}).out);
  ASSERT_EQ(r["entries"].size(), 9u);
  for (const auto& e : r["entries"]) {
    EXPECT_EQ(e[0], e[3]);
    EXPECT_EQ(e[1], e[2]);
  }
}

TEST(Cli, ExportUnwritable) {
  EXPECT_EQ(run({"export", "--out", "/nonexistent/dir/w.json"}).code, 2);
}

TEST(Cli, SpectrumRows) {
  const auto p = tmp("spec.csv");
  const auto r = run({"spectrum", "--L", "4", "--u-grid", "0.1,0.2,0.3,0.4,0.5", "--out", p.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_LE(j["max_commutator"].get<double>(), 1e-9);
  std::istringstream csv(slurp(p));
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "u_re,u_im,idx,eig_re,eig_im");
  int rows = 0;
  while (std::getline(csv, line)) ++rows;
  EXPECT_EQ(rows, 5 * 81);
}

TEST(Cli, SpectrumGuard) { EXPECT_EQ(run({"spectrum", "--L", "12"}).code, 2); }

TEST(Cli, SpectrumAtZeroIsRootsOfUnity) {
  const auto r = run({"spectrum", "--L", "3", "--u-grid", "0"});
  EXPECT_EQ(r.code, 0);
  std::istringstream csv(r.out);
  std::string line;
  std::getline(csv, line);
  int rows = 0;
  while (std::getline(csv, line)) {
    double ure, uim, re, im;
    int idx;
    char c;
    std::istringstream ls(line);
    ls >> ure >> c >> uim >> c >> idx >> c >> re >> c >> im;
    const std::complex<double> z(re, im);
    EXPECT_NEAR(std::abs(z * z * z - 1.0), 0, 1e-9);
    ++rows;
  }
  EXPECT_EQ(rows, 27);
}
