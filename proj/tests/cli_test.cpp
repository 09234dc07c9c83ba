// Runs the built CLI as a subprocess; its path comes from SUBREG_CLI.
#include <json.hpp>

#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <set>
#include <string>

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

fs::path work_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("subreg_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

int run(const std::string& args) {
  std::string cmd = std::string(SUBREG_CLI) + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string path(const std::string& name) { return (work_dir() / name).string(); }

std::string slurp(const std::string& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Json load(const std::string& p) { return Json::parse(slurp(p)); }

void write(const std::string& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST(Cli, VerifySo2nExitCodes) {
  EXPECT_EQ(run("verify-so2n --n 4 --out " + path("v4.json")), 0);
  Json b = load(path("v4.json"));
  EXPECT_EQ(b["overall"], "verified");
  EXPECT_EQ(b["tool_version"], "0.1.0");
  EXPECT_EQ(b["command"], "verify-so2n");
  EXPECT_EQ(run("verify-so2n --n 4 --form compact --out " + path("c4.json")), 1);
  EXPECT_EQ(load(path("c4.json"))["overall"], "mixed");
  EXPECT_EQ(run("verify-so2n --n 2"), 2);
  EXPECT_EQ(run("verify-so2n"), 2);
  EXPECT_EQ(run("verify-so2n --n 4 --form split"), 2);
  EXPECT_EQ(run("no-such-command"), 2);
}

TEST(Cli, PresetFiles) {
  write(path("p_ok.json"), R"({"n": 4, "L_basis": [["0","0","1","1"]], "H": ["1","1i","0","0"]})");
  EXPECT_EQ(run("verify-so2n --n 4 --preset " + path("p_ok.json") + " --out " + path("p_ok_out.json")), 0);
  EXPECT_EQ(load(path("p_ok_out.json"))["inputs"]["preset_source"], "file");
  // H real and L + CH conjugation-stable: sum condition fails
  write(path("p_real.json"), R"({"n": 4, "L_basis": [["0","0","1","1"]], "H": ["1","0","0","0"]})");
  EXPECT_EQ(run("verify-so2n --n 4 --preset " + path("p_real.json")), 1);
  write(path("p_bad.json"), R"({"n": 4, "L_basis": [["0","1","0","0"]], "H": ["1","0","0","0"]})");
  EXPECT_EQ(run("verify-so2n --n 4 --preset " + path("p_bad.json")), 2);
  write(path("p_syntax.json"), R"({"n": 4, "L_basis": [)");
  EXPECT_EQ(run("verify-so2n --n 4 --preset " + path("p_syntax.json")), 2);
  write(path("p_value.json"), R"({"n": 4, "L_basis": [["0","0","1","1.0"]], "H": ["1","0","0","0"]})");
  EXPECT_EQ(run("verify-so2n --n 4 --preset " + path("p_value.json")), 2);
  EXPECT_EQ(run("verify-so2n --n 4 --preset " + path("missing.json")), 2);
}

TEST(Cli, G2SurveyBundle) {
  EXPECT_EQ(run("g2-survey --form compact --out " + path("g.json")), 1);
  Json b = load(path("g.json"));
  EXPECT_EQ(b["overall"], "mixed");
  std::set<std::string> capable;
  bool betti_borel = false;
  for (const auto& c : b["certificates"]) {
    if (c["witness"].contains("kind") && c["status"] == "verified") capable.insert(c["witness"]["kind"]);
    if (c["claim"] == "betti(borel, 2) = 1") betti_borel = c["status"] == "verified";
  }
  EXPECT_EQ(capable, (std::set<std::string>{"L_plus_n", "borel"}));
  EXPECT_TRUE(betti_borel);
  EXPECT_EQ(run("g2-survey --form split --out " + path("gs.json")), 1);
  EXPECT_TRUE(load(path("gs.json"))["certificates"][0]["witness"].contains("note"));
}

TEST(Cli, BundlesAreByteIdenticalAcrossRuns) {
  ASSERT_EQ(run("verify-so2n --n 4 --out " + path("d1.json")), 0);
  ASSERT_EQ(run("verify-so2n --n 4 --out " + path("d2.json")), 0);
  EXPECT_EQ(slurp(path("d1.json")), slurp(path("d2.json")));
  run("g2-survey --form compact --out " + path("e1.json"));
  run("g2-survey --form compact --out " + path("e2.json"));
  EXPECT_FALSE(slurp(path("e1.json")).empty());
  EXPECT_EQ(slurp(path("e1.json")), slurp(path("e2.json")));
}

TEST(Cli, SubregularOnExportedData) {
  ASSERT_EQ(run("export --family so2n --n 4 --object algebra --out " + path("so8.json")), 0);
  ASSERT_EQ(run("export --family so2n --n 4 --object s --out " + path("s.json")), 0);
  ASSERT_EQ(run("export --family so2n --n 4 --object cartan --out " + path("h.json")), 0);
  EXPECT_EQ(run("subregular --algebra " + path("so8.json") + " --subalgebra " + path("s.json") + " --cartan " +
                path("h.json") + " --out " + path("sr.json")),
            0);
  Json b = load(path("sr.json"));
  EXPECT_EQ(b["certificates"][2]["witness"]["codimension"], 1);
  EXPECT_EQ(b["certificates"][3]["status"], "verified");

  ASSERT_EQ(run("export --family g2 --object algebra --out " + path("g2.json")), 0);
  ASSERT_EQ(run("export --family g2 --object candidate --kind borel --out " + path("b.json")), 0);
  ASSERT_EQ(run("export --family g2 --object cartan --out " + path("gh.json")), 0);
  run("subregular --algebra " + path("g2.json") + " --subalgebra " + path("b.json") + " --cartan " + path("gh.json") +
      " --out " + path("srb.json"));
  EXPECT_EQ(load(path("srb.json"))["certificates"][2]["witness"]["codimension"], 0);

  EXPECT_EQ(run("subregular --algebra " + path("so8.json") + " --subalgebra " + path("b.json") + " --cartan " +
                path("h.json")),
            2);
}

TEST(Cli, CohomologyDegrees) {
  ASSERT_EQ(run("export --family g2 --object algebra --out " + path("g2c.json")), 0);
  ASSERT_EQ(run("export --family g2 --object candidate --kind borel --out " + path("bc.json")), 0);
  ASSERT_EQ(run("export --family g2 --object candidate --kind L_plus_n --line 1,1i --out " + path("ln.json")), 0);
  auto betti = [&](const std::string& alg, const std::string& sub, int k) {
    std::string out = path("co.json");
    EXPECT_EQ(run("cohomology --algebra " + alg + " --subalgebra " + sub + " --degree " + std::to_string(k) +
                  " --out " + out),
              0);
    return load(out)["certificates"][0]["witness"]["betti"].get<int>();
  };
  EXPECT_EQ(betti(path("g2c.json"), path("bc.json"), 2), 1);
  EXPECT_EQ(betti(path("g2c.json"), path("bc.json"), 1), 2);
  EXPECT_EQ(betti(path("g2c.json"), path("ln.json"), 2), 0);
  write(path("ab.json"), R"({"dim": 2, "structure": []})");
  write(path("abs.json"), R"([["1","0"],["0","1"]])");
  EXPECT_EQ(betti(path("ab.json"), path("abs.json"), 2), 1);
  EXPECT_EQ(betti(path("ab.json"), path("abs.json"), 0), 1);
  EXPECT_EQ(run("cohomology --algebra " + path("ab.json") + " --subalgebra " + path("abs.json") + " --degree 3"), 2);
}
