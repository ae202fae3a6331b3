#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>
#include <sys/wait.h>
#include <unistd.h>

#include "helpers.hpp"
#include "qcover/commands.hpp"
#include "qcover/families.hpp"
#include "qcover/io.hpp"

namespace qcover::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Run {
  int code = 0;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "qcover");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  Run r;
  r.code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("qcover_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }
  std::string write(const std::string& name, const SimplicialComplex& c) { return write(name, io::write_json(c)); }

  fs::path dir_;
};

TEST_F(CliTest, CheckExitCodes) {
  const auto d3 = write("d3.json", delta_n(3));
  const auto r = invoke({"check", d3});
  EXPECT_EQ(r.code, kNotStandardGraded);
  const auto report = r.report();
  EXPECT_EQ(report["tool"], "qcover");
  EXPECT_EQ(report["command"], "check");
  EXPECT_EQ(report["result"]["verdict"]["standard_graded"], false);
  EXPECT_EQ(report["result"]["verdict"]["cover_witness"]["a"], json({1, 1, 1, 0, 0, 0}));

  EXPECT_EQ(invoke({"check", write("f1.json", figure1())}).code, kOk);
  const auto tri = invoke({"check", write("tri.txt", "1 2\n2 3\n1 3\n")});
  EXPECT_EQ(tri.code, kNotQuasiTree);
  EXPECT_TRUE(tri.report()["result"]["verdict"].is_null());
}

TEST_F(CliTest, InputErrors) {
  EXPECT_EQ(invoke({"check", write("bad.json", "{\"facets\": [[1,2],")}).code, kInputError);
  EXPECT_EQ(invoke({"check", (dir_ / "missing.json").string()}).code, kInputError);
  EXPECT_EQ(invoke({"check", write("chain.txt", "1 2\n1 2 3\n")}).code, kInputError);
  EXPECT_EQ(invoke({"bogus"}).code, kInputError);
  const auto r = invoke({"covers", write("d3.json", delta_n(3)), "--k", "-1"});
  EXPECT_EQ(r.code, kInputError);
  EXPECT_NE(r.err.find("qcover:"), std::string::npos);
}

TEST_F(CliTest, BudgetOverride) {
  const auto path = write("d6.json", delta_n(6));
  ::setenv("QCOVER_BUDGET", "1", 1);
  const auto r = invoke({"check", path});
  ::unsetenv("QCOVER_BUDGET");
  EXPECT_EQ(r.code, kInputError);
  EXPECT_NE(r.err.find("BudgetExceeded"), std::string::npos) << r.err;
  EXPECT_EQ(invoke({"check", path}).code, kNotStandardGraded);
}

TEST_F(CliTest, CoversAndGolden) {
  const auto golden = dir_ / "golden.json";
  const auto r = invoke({"covers", write("d3.json", delta_n(3)), "--k", "2", "--emit-golden", golden.string()});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.report()["result"]["count"], 1);
  EXPECT_EQ(testing_support::read_file(golden),
            testing_support::read_file(testing_support::golden_dir() / "delta3_covers_k2.json"));
}

TEST_F(CliTest, DMaxCarriesDisclaimer) {
  const auto r = invoke({"dmax", write("d3.json", delta_n(3)), "--k-max", "3"});
  ASSERT_EQ(r.code, kOk);
  const auto result = r.report()["result"];
  EXPECT_EQ(result["d"], 2);
  EXPECT_EQ(result["exact"], false);
  EXPECT_TRUE(result.contains("disclaimer"));
}

TEST_F(CliTest, VerifyAgrees) {
  const auto r = invoke({"verify", write("d4.json", delta_n(4)), "--k-max", "3", "--seed", "5"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.report()["result"]["agree"], true);
  EXPECT_EQ(invoke({"verify", write("tri.txt", "1 2\n2 3\n1 3\n")}).code, kNotQuasiTree);
}

TEST_F(CliTest, GenRoundTrip) {
  const auto out = dir_ / "r.txt";
  ASSERT_EQ(invoke({"gen", "random", "--seed", "9", "--facets", "6", "--max-size", "4", "--format", "text", "--out",
                    out.string()})
                .code,
            kOk);
  const auto parsed = io::read_complex_file(out);
  EXPECT_EQ(parsed.complex, random_quasi_tree({9, 6, 4, 0}));

  const auto r = invoke({"gen", "delta-n", "--n", "3"});
  EXPECT_EQ(r.out, "{\"facets\":[[1,2,3],[1,2,6],[1,3,5],[2,3,4]]}\n");
  EXPECT_EQ(invoke({"gen", "delta-n", "--n", "2"}).code, kInputError);
  EXPECT_EQ(invoke({"gen", "nope"}).code, kInputError);
}

TEST_F(CliTest, DotGolden) {
  const auto f1 = write("f1.json", figure1());
  const auto path = invoke({"dot", f1, "--order", "1,2,3,4,5", "--rule", "largest"});
  ASSERT_EQ(path.code, kOk) << path.err;
  EXPECT_EQ(path.out, testing_support::read_file(testing_support::golden_dir() / "figure1_path.dot"));
  const auto star = invoke({"dot", f1, "--order", "1,2,3,4,5", "--rule", "smallest"});
  EXPECT_EQ(star.out, testing_support::read_file(testing_support::golden_dir() / "figure1_star.dot"));
  EXPECT_EQ(invoke({"dot", f1, "--order", "5,4,3,2,1"}).code, kInputError);
}

TEST_F(CliTest, ReportIsStableExceptTiming) {
  const auto path = write("f1.json", figure1());
  auto a = invoke({"check", path}).report();
  auto b = invoke({"check", path}).report();
  a.erase("timing_ms");
  b.erase("timing_ms");
  EXPECT_EQ(a, b);
  EXPECT_EQ(a["version"], kVersion);
  EXPECT_EQ(a["input_digest"].get<std::string>().rfind("sha256:", 0), 0U);
}

TEST_F(CliTest, DigestIgnoresInputFormatting) {
  const auto json_path = write("f1.json", figure1());
  const auto text_path = write("f1.txt", "# figure\n2 3 7\n1 2 3\n1 2 4\n1 2 5\n2 3 6\n");
  EXPECT_EQ(invoke({"check", json_path}).report()["input_digest"],
            invoke({"check", text_path}).report()["input_digest"]);
}

TEST_F(CliTest, NamedVerticesAreReported) {
  const auto r = invoke({"check", write("named.txt", "a b c\nb c d\na c e\na b f\n")});
  EXPECT_EQ(r.code, kNotStandardGraded);
  EXPECT_TRUE(r.report()["result"].contains("labels"));
}

TEST(CliBinary, ExitCodeReachesShell) {
  const auto dir = fs::temp_directory_path();
  const auto path = dir / ("qcover_bin_" + std::to_string(::getpid()) + ".json");
  std::ofstream(path) << io::write_json(delta_n(3));
  const std::string cmd = std::string("\"") + QCOVER_EXE + "\" check \"" + path.string() + "\" > /dev/null";
  const int status = std::system(cmd.c_str());
  fs::remove(path);
  ASSERT_TRUE(WIFEXITED(status));
  EXPECT_EQ(WEXITSTATUS(status), kNotStandardGraded);
}

}  // namespace
}  // namespace qcover::cli
