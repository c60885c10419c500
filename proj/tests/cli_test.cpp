#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "rho/cli.hpp"
#include "rho/io.hpp"

using namespace rho;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  args.insert(args.begin(), "rho-radii");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(int(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("rho_cli_test_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
    write("eye3.json", to_json(Matrix(Matrix::Identity(3, 3))));
    Matrix n = Matrix::Zero(2, 2);
    n(0, 1) = 1.0;
    write("nilpotent01.json", to_json(n));
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  void write(const std::string& name, const Json& j) const { std::ofstream(path(name)) << j.dump(); }

  std::filesystem::path dir_;
};

Json strip_time(Json j) {
  j.erase("wall_time_s");
  return j;
}

}  // namespace

TEST_F(CliTest, RadiusOfIdentity) {
  const CliResult r = run({"radius", "--rho", "2", "--input", path("eye3.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_NEAR(j["lo"].get<double>(), 1.0, 1e-6);
  EXPECT_NEAR(j["hi"].get<double>(), 1.0, 1e-6);
}

TEST_F(CliTest, MembershipOfNilpotent) {
  const CliResult r = run({"membership", "--rho", "1", "--input", path("nilpotent01.json")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["decision"], "In");
  EXPECT_GE(j["margin"].get<double>(), -1e-9);
}

TEST_F(CliTest, NumericalRadius) {
  const CliResult r = run({"numrad", "--input", path("nilpotent01.json")});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NEAR(Json::parse(r.out)["numerical_radius"].get<double>(), 0.5, 1e-9);
}

TEST_F(CliTest, VerifyDilation) {
  const ShiftDilation s = build_shift_unitary_rho_dilation(2.0, 8);
  write("small.json", to_json(OperatorTuple::single(nilpotent_block(2.0))));
  write("big.json", to_json(s.big));
  write("emb.json", to_json(s.embedding));
  for (const char* mode : {"sym", "uniform"}) {
    const CliResult r = run({"verify-dilation", "--mode", mode, "--small", path("small.json"), "--big",
                       path("big.json"), "--embedding", path("emb.json"), "--rho", "2", "--nmax", "5"});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    const Json j = Json::parse(r.out);
    EXPECT_TRUE(j["passed"].get<bool>());
    EXPECT_EQ(j["verified_word_length"], 5);
  }
  const CliResult cap = run({"verify-dilation", "--mode", "uniform", "--small", path("small.json"), "--big",
                       path("big.json"), "--embedding", path("emb.json"), "--rho", "2", "--nmax", "7"});
  EXPECT_EQ(cap.code, kExitCapacity);
  EXPECT_EQ(Json::parse(cap.err)["error"], "capacity");
}

TEST_F(CliTest, ReproThm51) {
  const CliResult r = run({"repro", "--name", "thm51", "--rho", "2"});
  EXPECT_EQ(r.code, kExitOk) << r.out;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["name"], "thm51");
  for (const Json& c : j["claims"]) EXPECT_TRUE(c["pass"].get<bool>()) << c.dump();
}

TEST_F(CliTest, ReproWritesOutputFile) {
  const CliResult r = run({"repro", "--name", "scalar-boundary", "--output", path("report.json")});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path("report.json"));
  const Json j = Json::parse(in);
  EXPECT_EQ(j["name"], "scalar-boundary");
}

TEST_F(CliTest, SweepCsv) {
  const CliResult r = run({"sweep", "--rho-from", "0.5", "--rho-to", "2", "--steps", "4", "--input",
                     path("nilpotent01.json"), "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header, "rho,w_rho,lo,hi");
  std::string row;
  int count = 0;
  while (std::getline(lines, row)) {
    const double rho = std::stod(row.substr(0, row.find(',')));
    const double w = std::stod(row.substr(row.find(',') + 1));
    EXPECT_NEAR(w, 1.0 / rho, 1e-6);
    ++count;
  }
  EXPECT_EQ(count, 4);
}

TEST_F(CliTest, ErrorsAndExitCodes) {
  CliResult r = run({"radius", "--rho", "2", "--input", path("missing.json")});
  EXPECT_EQ(r.code, kExitInput);
  EXPECT_EQ(Json::parse(r.err)["error"], "input");

  r = run({"radius", "--rho", "2", "--input", path("eye3.json"), "--bogus", "1"});
  EXPECT_EQ(r.code, kExitInput);
  EXPECT_TRUE(Json::parse(r.err).contains("message"));

  r = run({});
  EXPECT_EQ(r.code, kExitInput);

  r = run({"radius", "--rho", "-1", "--input", path("eye3.json")});
  EXPECT_EQ(r.code, kExitInput);

  r = run({"radius", "--rho", "2", "--input", path("eye3.json"), "--format", "csv"});
  EXPECT_EQ(r.code, kExitInput);

  r = run({"repro", "--name", "nope"});
  EXPECT_EQ(r.code, kExitInput);

  r = run({"repro", "--name", "thm51", "--rho", "2", "--eps", "0.5"});
  EXPECT_EQ(r.code, kExitInput);

  std::ofstream(path("broken.json")) << "{";
  r = run({"numrad", "--input", path("broken.json")});
  EXPECT_EQ(r.code, kExitInput);
}

TEST_F(CliTest, FailedClaimsExitOne) {
  // The Out margin −4ε/(2−ρ)² is far inside the default tolerance, so "Out" cannot be observed.
  const CliResult r = run({"repro", "--name", "scalar-boundary", "--rho", "0.5", "--eps", "1e-12"});
  EXPECT_EQ(r.code, kExitClaimsFailed);
  const Json j = Json::parse(r.out);
  EXPECT_FALSE(j["pass"].get<bool>());
}

TEST_F(CliTest, DeterministicOutput) {
  const std::vector<std::string> args{"repro", "--name", "monotonicity", "--cases", "2", "--seed", "5"};
  const CliResult a = run(args);
  const CliResult b = run(args);
  ASSERT_EQ(a.code, kExitOk);
  EXPECT_EQ(strip_time(Json::parse(a.out)), strip_time(Json::parse(b.out)));
  EXPECT_EQ(Json::parse(a.out)["parameters"]["seed"], 5.0);

  const std::vector<std::string> m{"membership", "--rho", "2", "--input", path("eye3.json")};
  EXPECT_EQ(run(m).out, run(m).out);
}

TEST(CliBinary, RunsAsProcess) {
  const std::string cmd = std::string(RHO_CLI_BINARY) + " repro --name scalar-boundary > /dev/null";
  EXPECT_EQ(std::system(cmd.c_str()), 0);
  const std::string bad = std::string(RHO_CLI_BINARY) + " radius --rho 1 2> /dev/null";
  const int status = std::system(bad.c_str());
  EXPECT_EQ(WEXITSTATUS(status), kExitInput);
}
