#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "nassoc/io.hpp"

namespace fs = std::filesystem;
using nassoc::Json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch() {
  static fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("nassoc_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

Run run(const std::string& args) {
  auto out = scratch() / "stdout", err = scratch() / "stderr";
  std::string cmd = std::string(NASSOC_CLI) + " " + args + " >" + out.string() + " 2>" + err.string();
  int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
}

fs::path write(const std::string& name, const std::string& text) {
  auto p = scratch() / name;
  std::ofstream(p, std::ios::binary) << text;
  return p;
}

fs::path emitted() {
  static fs::path dir = [] {
    auto d = scratch() / "fixtures";
    EXPECT_EQ(run("fixtures --emit " + d.string()).code, 0);
    return d;
  }();
  return dir;
}

}  // namespace

TEST(Cli, VerifyAexAllJson) {
  auto r = run("verify " + (emitted() / "A_ex_F2.json").string() + " --all --output json");
  EXPECT_EQ(r.code, 0) << r.err;
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["summary"]["failed"], 0);
  for (const auto& rep : j["reports"])
    if (rep["applicable"]) EXPECT_TRUE(rep["holds"].get<bool>()) << rep["check"];
}

TEST(Cli, FrattiniT3) {
  auto r = run("frattini " + (emitted() / "T3.json").string());
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("F: span{t2, t3}"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("phi: span{t2, t3}"), std::string::npos) << r.out;
}

TEST(Cli, MinimalIdealsOverQ) {
  auto f = write("rational.json", R"({"field":"Q","dim":2,"products":[{"i":0,"j":0,"terms":[{"k":1,"c":"1/2"}]}]})");
  auto r = run("minimal-ideals " + f.string());
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("requires a finite field"), std::string::npos) << r.err;
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(run("info /nonexistent.json").code, 2);
  EXPECT_EQ(run("info " + write("bad.json", "{\"field\":\"Q\"").string()).code, 2);
  EXPECT_EQ(run("check fixture:T3 --identity sideways").code, 2);
  EXPECT_EQ(run("verify fixture:T3").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("radical fixture:T3 --which nothing").code, 2);
  auto dup = write("dup.json", R"({"field":"Q","dim":1,"products":[{"i":0,"j":0,"terms":[]},{"i":0,"j":0,"terms":[]}]})");
  auto r = run("info " + dup.string());
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("(0, 0)"), std::string::npos) << r.err;
}

TEST(Cli, RefusalsExitThree) {
  EXPECT_EQ(run("split fixture:T3").code, 3);
  EXPECT_EQ(run("radical fixture:A_ex_Q --which solvable").code, 3);
  EXPECT_EQ(run("frattini fixture:Z4 --budget-subspaces 3").code, 3);
}

TEST(Cli, Commands) {
  EXPECT_EQ(run("info fixture:A_ex_F2").code, 0);
  EXPECT_EQ(run("check fixture:A_nov --identity novikovLeft --output json").code, 0);
  EXPECT_EQ(run("series fixture:T3 --kind rightPower").code, 0);
  EXPECT_EQ(run("radical fixture:A_nov --which right-nil").code, 0);
  EXPECT_EQ(run("chief-series fixture:T3").code, 0);
  EXPECT_EQ(run("decompose fixture:A_ex_F2").code, 0);
  EXPECT_EQ(run("split fixture:A_nov").code, 0);
  EXPECT_EQ(run("verify fixture:T3 --check phi_eq_Asq_nilpotent").code, 0);
  auto s = run("search --field 2 --dim 1 --identity any --exhaustive --output json");
  EXPECT_EQ(s.code, 0) << s.err;
  EXPECT_EQ(Json::parse(s.out)["count"], 2);
  auto r = run("radical fixture:A_nov --which solvable --output json");
  EXPECT_EQ(Json::parse(r.out)["radical"], Json::parse(R"([["1","0"]])"));
}

TEST(Cli, RandomSearchReproducible) {
  auto a = run("search --field F_3 --dim 2 --identity novikovLeft --samples 1000 --seed 42 --output json");
  auto b = run("search --field F_3 --dim 2 --identity novikovLeft --samples 1000 --seed 42 --output json");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, JsonOutputIsByteIdenticalAcrossRuns) {
  auto a = run("verify fixture:A_ex+T2 --all --output json");
  auto b = run("verify fixture:A_ex+T2 --all --output json");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, ShippedFixturesNeverExitOne) {
  std::size_t n = 0;
  for (const auto& e : fs::directory_iterator(emitted())) {
    auto r = run("verify " + e.path().string() + " --all --output json");
    EXPECT_EQ(r.code, 0) << e.path() << "\n" << r.err;
    ++n;
  }
  EXPECT_EQ(n, 30u);
}

TEST(Cli, MutationCorpusExitsOne) {
  auto corpus = Json::parse(slurp(NASSOC_MUTATIONS));
  for (const auto& m : corpus) {
    auto alg = write("mutant.json", m["algebra"].dump());
    auto hyp = write("assume.json", m["assume"].dump());
    auto r = run("verify " + alg.string() + " --check " + m["check"].get<std::string>() + " --assume " +
                 hyp.string() + " --output json");
    EXPECT_EQ(r.code, 1) << m["check"] << "\n" << r.err;
  }
}
