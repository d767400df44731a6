#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "udm/report.hpp"
#include "udm/serialize.hpp"

using namespace udm;

namespace {

struct CliResult {
  int code;
  std::string out;
};

CliResult run(const std::string& args) {
  const std::string cmd = std::string(UDM_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* f = popen(cmd.c_str(), "r");
  if (!f) return {-1, ""};
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) out.append(buf.data(), n);
  const int status = pclose(f);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("udm_test_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST(Serialize, RoundTripIsByteStable) {
  for (int p : {3, 5})
    for (int deg : {2, 4}) {
      auto R = GaloisRing::make(Field::make(p, deg), 2);
      for (const auto& id : canonical_module_ids()) {
        const std::string text = dump_module(id, canonical_lattice(id, R));
        const LoadedModule m = load_module(text);
        EXPECT_EQ(m.id, id);
        EXPECT_TRUE(m.lattice.check_axioms().ok());
        EXPECT_EQ(m.lattice.F_matrix(), canonical_lattice(id, R).F_matrix());
        EXPECT_EQ(dump_module(m.id, m.lattice), text);
      }
    }
}

TEST(Serialize, RejectsMalformedInput) {
  auto R = GaloisRing::make(Field::make(3, 2), 2);
  auto j = module_to_json("ssp", canonical_lattice("ssp", R));
  auto bad = j;
  bad["schema"] = 99;
  EXPECT_THROW(module_from_json(bad), std::invalid_argument);
  bad = j;
  bad["modulus"] = std::vector<int>{1, 1, 1};
  EXPECT_THROW(module_from_json(bad), std::invalid_argument);
  bad = j;
  bad["grading"][0] = "Tau";
  EXPECT_THROW(module_from_json(bad), std::invalid_argument);
  EXPECT_THROW(canonical_lattice("nope", R), std::invalid_argument);
}

TEST(Report, RenderersAgree) {
  ReportDocument r = make_report(3, 1, 5);
  r.add({"a", "first", "1", "1", true});
  r.add({"b", "with, comma", "x\"y", "z", false});
  EXPECT_FALSE(r.pass());
  const auto j = nlohmann::json::parse(to_json(r));
  EXPECT_EQ(j["sections"].size(), 2u);
  EXPECT_EQ(j["pass"], false);
  EXPECT_EQ(j["meta"]["seed"], 5);
  EXPECT_EQ(to_csv(r), "name,anchor,expected,actual,pass\na,first,1,1,true\nb,\"with, comma\",\"x\"\"y\",z,false\n");
  const std::string t = to_text(r);
  EXPECT_NE(t.find("PASS a"), std::string::npos);
  EXPECT_NE(t.find("FAIL b"), std::string::npos);
  EXPECT_NE(t.find("overall: FAIL"), std::string::npos);
}

TEST(Cli, CensusJson) {
  for (const std::string point : {"mu", "gss", "ssp"}) {
    const CliResult r = run("census --p 3 --deg 1 --point " + point + " --format json");
    ASSERT_EQ(r.code, 0) << point;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_TRUE(j["pass"].get<bool>());
    for (const auto& s : j["sections"])
      if (s["name"] == "total")
        EXPECT_EQ(s["actual"], point == "mu" ? "2" : point == "gss" ? "10" : "46");
  }
}

TEST(Cli, CensusCsvToFile) {
  const auto path = temp_file("census.csv");
  const CliResult r = run("census --p 5 --deg 1 --point gss --format csv --out " + path.string());
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_EQ(ss.str().rfind("name,anchor,expected,actual,pass\n", 0), 0u);
  EXPECT_NE(ss.str().find("total,"), std::string::npos);
  std::filesystem::remove(path);
}

TEST(Cli, AppendixCensusAtF729) {
  const CliResult r = run("census --p 3 --deg 3 --point appendix --format json");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  bool uv = false;
  for (const auto& s : j["sections"]) uv |= s["name"] == "uv-census";
  EXPECT_TRUE(uv);
}

TEST(Cli, VerifyRaynaud) {
  const CliResult r = run("verify --suite raynaud --format json");
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(r.out)["pass"].get<bool>());
}

TEST(Cli, DumpAndLoad) {
  const auto a = temp_file("gss.json"), b = temp_file("gss2.json");
  ASSERT_EQ(run("dump gss-braid --p 5 --deg 1 --out " + a.string()).code, 0);
  ASSERT_EQ(run("load " + a.string() + " --out " + b.string()).code, 0);
  std::ifstream fa(a), fb(b);
  std::stringstream sa, sb;
  sa << fa.rdbuf();
  sb << fb.rdbuf();
  EXPECT_EQ(sa.str(), sb.str());
  // A broken adjunction is reported with exit code 1.
  auto j = nlohmann::json::parse(sa.str());
  j["pairing"][0][5] = std::vector<int>{2, 0};
  j["pairing"][5][0] = std::vector<int>{23, 0};
  std::ofstream(a) << j.dump();
  EXPECT_EQ(run("load " + a.string()).code, 1);
  std::filesystem::remove(a);
  std::filesystem::remove(b);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("census --p 4").code, 2);
  EXPECT_EQ(run("census --p 3 --deg 0").code, 2);
  EXPECT_EQ(run("census --point nowhere").code, 2);
  EXPECT_EQ(run("verify --suite nothing").code, 2);
  EXPECT_EQ(run("dump unknown-id").code, 2);
  EXPECT_EQ(run("load /nonexistent/file.json").code, 2);
  // The ssp fiber over F_{7^6} is far beyond the enumeration budget.
  EXPECT_EQ(run("census --p 7 --deg 3 --point ssp").code, 2);
}
