#include <diskschwarz/cli.hpp>

#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

namespace ds = diskschwarz;
using nlohmann::json;

namespace {

struct Outcome {
  int status;
  std::string out;
};

Outcome run_binary(const std::string& args) {
  const std::string cmd = std::string(DISKSCHWARZ_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, {}};
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

Outcome run_in_process(std::vector<std::string> args) {
  args.insert(args.begin(), "diskschwarz");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  ds::RunConfig cfg;
  std::ostringstream out, err;
  if (const auto early = ds::parse_command_line(static_cast<int>(argv.size()), argv.data(), cfg, out, err))
    return {*early, out.str()};
  const int status = ds::run(cfg, out, err);
  return {status, out.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST(CliParse, Subcommands) {
  ds::RunConfig cfg;
  const char* argv[] = {"diskschwarz", "verify", "--builtin", "example31", "--M", "0.02", "--alpha", "0", "1"};
  std::ostringstream out, err;
  EXPECT_FALSE(ds::parse_command_line(9, argv, cfg, out, err).has_value());
  EXPECT_EQ(cfg.command, ds::Command::verify);
  EXPECT_EQ(*cfg.builtin, "example31");
  EXPECT_DOUBLE_EQ(*cfg.M, 0.02);
  EXPECT_EQ(*cfg.alpha, ds::complex(0.0, 1.0));
  EXPECT_FALSE(cfg.beta.has_value());
}

TEST(CliParse, UsageErrors) {
  EXPECT_EQ(run_in_process({}).status, ds::kExitUsage);
  EXPECT_EQ(run_in_process({"frobnicate"}).status, ds::kExitUsage);
  EXPECT_EQ(run_in_process({"bound", "--p-norm", "x"}).status, ds::kExitUsage);
  EXPECT_EQ(run_in_process({"bound", "--format", "xml"}).status, ds::kExitUsage);
  EXPECT_EQ(run_in_process({"--help"}).status, ds::kExitOk);
}

TEST(CliRun, BoundAndMajorant) {
  const auto b = run_in_process({"bound", "--p-norm", "0", "--g-norm", "0"});
  ASSERT_EQ(b.status, ds::kExitOk);
  const auto j = json::parse(b.out);
  EXPECT_EQ(j["command"], "bound");
  EXPECT_DOUBLE_EQ(j["bound"].get<double>(), 2.0 / ds::pi);
  EXPECT_EQ(j["in_positivity_region"], true);
  const auto m = json::parse(run_in_process({"majorant", "--r", "1", "--p-norm", "0.1", "--g-norm", "3"}).out);
  EXPECT_DOUBLE_EQ(m["majorant"].get<double>(), 1.0);
  EXPECT_NEAR(m["slope_limit"].get<double>(), ds::theorem_bound(0.1, 3.0), 1e-15);
  EXPECT_EQ(run_in_process({"bound", "--p-norm", "0"}).status, ds::kExitUsage);
}

TEST(CliRun, GalleryList) {
  const auto r = run_in_process({"gallery-list"});
  ASSERT_EQ(r.status, ds::kExitOk);
  EXPECT_EQ(json::parse(r.out)["gallery"].size(), 4u);
}

TEST(CliRun, Norms) {
  const auto r = run_in_process({"norms", "--builtin", "example31", "--M", "0.01"});
  ASSERT_EQ(r.status, ds::kExitOk);
  const auto j = json::parse(r.out);
  EXPECT_NEAR(j["p_norm"].get<double>(), std::sqrt(5.0) * 0.01, 1e-6);
  EXPECT_NEAR(j["g_norm"].get<double>(), 64.0 * std::sqrt(10.0) * 0.01, 1e-5);
}

TEST(CliRun, InstanceFileAndOutPath) {
  const auto path = write_temp("cli_rotation.json", R"({
    "f_star": {"builtin": "mode", "k": 1},
    "phi": {"builtin": "zero"},
    "source": {"builtin": "zero"},
    "alpha": [1, 0], "beta": [1, 0]})");
  const std::string out_path = ::testing::TempDir() + "cli_report.json";
  const auto r = run_in_process({"verify", "--instance", path, "--out", out_path});
  ASSERT_EQ(r.status, ds::kExitOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(out_path);
  const auto j = json::parse(in);
  EXPECT_NEAR(j["lhs_re"].get<double>(), 1.0, 1e-5);
  EXPECT_EQ(j["diagnostics"]["closed_derivatives"], 0.0);
}

TEST(CliBinary, VerifyExample) {
  const auto r = run_binary("verify --builtin example31 --M 0.01");
  ASSERT_EQ(r.status, 0);
  const auto j = json::parse(r.out);
  EXPECT_NEAR(j["lhs_re"].get<double>(), 2.02, 1e-9);
  EXPECT_NEAR(j["lhs_im"].get<double>(), -0.02, 1e-9);
  EXPECT_EQ(j["pass"], true);
  EXPECT_EQ(j["version"], ds::kVersion);
  EXPECT_EQ(j["quadrature"]["n_theta"], 512);
}

TEST(CliBinary, Eval) {
  const auto r = run_binary("eval --builtin example31 --M 0.01 --z 0.3 0");
  ASSERT_EQ(r.status, 0);
  const auto j = json::parse(r.out);
  EXPECT_LE(j["abs_error"].get<double>(), 1e-6);
}

TEST(CliBinary, ConvergenceCsv) {
  const auto r = run_binary("convergence --builtin example31 --M 0.05 --format csv");
  ASSERT_EQ(r.status, 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  EXPECT_EQ(line, "n_theta,n_radial,max_error");
  std::vector<double> errors;
  while (std::getline(lines, line)) errors.push_back(std::stod(line.substr(line.rfind(',') + 1)));
  ASSERT_EQ(errors.size(), 3u);
  EXPECT_GT(errors[0], errors[1]);
  EXPECT_GT(errors[1], errors[2]);
  EXPECT_LE(errors[2], 1e-3);
}

TEST(CliBinary, ZeroInstanceConvergesTrivially) {
  const auto r = run_binary("convergence --builtin zero --format csv");
  ASSERT_EQ(r.status, 0);
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  int rows = 0;
  while (std::getline(lines, line)) {
    EXPECT_EQ(std::stod(line.substr(line.rfind(',') + 1)), 0.0);
    ++rows;
  }
  EXPECT_EQ(rows, 3);
}

TEST(CliBinary, ExitCodes) {
  EXPECT_EQ(run_binary("verify --builtin nope").status, 2);
  EXPECT_EQ(run_binary("verify --builtin example31 --format csv").status, 2);
  const auto bad = write_temp("cli_bad.json", "{ nope");
  EXPECT_EQ(run_binary("verify --instance " + bad).status, 2);
  const auto zero = run_binary("verify --builtin zero");
  EXPECT_EQ(zero.status, 1);
  EXPECT_EQ(json::parse(zero.out)["error"], "hypothesis");
  EXPECT_EQ(run_binary("verify --builtin example31 --M 0.2").status, 2);
  EXPECT_EQ(run_binary("--version").status, 0);
}

TEST(CliBinary, DeterministicOutput) {
  const auto a = run_binary("verify --builtin extremal --alpha 0 1 --beta -1 0");
  const auto b = run_binary("verify --builtin extremal --alpha 0 1 --beta -1 0");
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  const auto j = json::parse(a.out);
  EXPECT_NEAR(j["margin"].get<double>(), 0.0, 1e-12);
  for (const char* cmd : {"gallery-list", "bound --p-norm 0 --g-norm 0", "norms --builtin zero"}) {
    const auto r = json::parse(run_binary(cmd).out);
    EXPECT_TRUE(r.contains("version")) << cmd;
    EXPECT_TRUE(r.contains("quadrature")) << cmd;
  }
}
