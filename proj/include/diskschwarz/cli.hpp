#pragma once

/**
 * @file cli.hpp
 * @brief Command-line front end: argument parsing, command dispatch and the
 *        representation convergence study.
 *
 * Exit codes: 0 success (and inequality holds), 1 inequality fails or the
 * hypothesis audit fails, 2 usage/configuration error, 3 numerical failure.
 */

#include <diskschwarz/core.hpp>
#include <diskschwarz/gallery.hpp>
#include <diskschwarz/io.hpp>
#include <diskschwarz/quadrature.hpp>
#include <diskschwarz/representation.hpp>
#include <diskschwarz/schwarz.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace diskschwarz {

enum class Command { verify, eval, norms, bound, majorant, gallery_list, convergence };
enum class Format { json, csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

struct RunConfig {
  Command command = Command::gallery_list;
  std::optional<std::string> builtin;
  std::optional<std::string> instance_path;
  std::optional<real> M;
  std::optional<real> theta;
  std::optional<complex> alpha;
  std::optional<complex> beta;
  std::optional<complex> z;
  std::optional<real> r;
  std::optional<real> p_norm;
  std::optional<real> g_norm;
  std::optional<int> n_theta;
  std::optional<int> n_radial;
  std::optional<real> fd_step;
  std::optional<std::string> output_path;
  Format format = Format::json;

  QuadratureSpec quadrature() const {
    QuadratureSpec spec;
    if (n_theta) spec.n_theta = *n_theta;
    if (n_radial) spec.n_radial = *n_radial;
    if (fd_step) spec.fd_step = *fd_step;
    return spec;
  }
};

/// Usage or configuration problem detected while running a command.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ConvergenceRow {
  int n_theta;
  int n_radial;
  real max_error;
};

/// n_r radii 0, r_max/(n_r-1), ..., r_max times n_t uniform angles.
inline std::vector<complex> polar_test_points(real r_max = 0.7, int n_r = 9, int n_t = 8) {
  std::vector<complex> pts;
  pts.reserve(static_cast<std::size_t>(n_r * n_t));
  for (int i = 0; i < n_r; ++i) {
    const real r = r_max * i / (n_r - 1);
    for (int k = 0; k < n_t; ++k) pts.push_back(r * unit(uniform_angle(k, n_t)));
  }
  return pts;
}

/// max |evaluate_solution - closed_solution| over the points.
inline real round_trip_error(const ProblemInstance& inst, const QuadratureSpec& spec,
                             const std::vector<complex>& points) {
  if (!inst.has_closed_solution()) throw UsageError("instance '" + inst.name + "' has no closed solution");
  const DiskGrid grid = build_disk_grid(spec);
  const SolutionEvaluator eval(inst, spec, grid);
  real worst = 0.0;
  for (const complex& z : points) {
    const real e = std::abs(eval.interior(DiskPoint(z)) - inst.closed_solution(z));
    if (!std::isfinite(e)) throw NumericalError("round trip produced a non-finite value");
    worst = std::max(worst, e);
  }
  return worst;
}

inline std::vector<std::pair<int, int>> default_convergence_ladder() { return {{128, 64}, {256, 128}, {512, 256}}; }

/// One row per (n_theta, n_radial): the round-trip error on the 9x8 test grid in |z| <= 0.7.
inline std::vector<ConvergenceRow> convergence_study(const ProblemInstance& inst,
                                                     const std::vector<std::pair<int, int>>& ladder,
                                                     const QuadratureSpec& base = {}) {
  if (!inst.has_closed_solution()) throw UsageError("convergence: instance '" + inst.name + "' has no closed solution");
  const auto points = polar_test_points();
  std::vector<ConvergenceRow> rows;
  for (const auto& [nt, nr] : ladder) {
    QuadratureSpec spec = base;
    spec.n_theta = nt;
    spec.n_radial = nr;
    rows.push_back({nt, nr, round_trip_error(inst, spec, points)});
  }
  return rows;
}

namespace cli {

inline std::string format_real(real v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline ProblemInstance builtin_instance(const RunConfig& cfg) {
  const std::string& name = *cfg.builtin;
  const complex alpha = cfg.alpha.value_or(complex{1.0, 0.0});
  const complex beta = cfg.beta.value_or(complex{1.0, 0.0});
  if (!is_unimodular(alpha, 1e-10) || !is_unimodular(beta, 1e-10))
    throw UsageError("--alpha and --beta must be unimodular");
  const complex a = alpha / std::abs(alpha), b = beta / std::abs(beta);
  if (name == "example31") {
    ProblemInstance inst = example31(ExampleParams{cfg.M.value_or(0.01)});
    if (cfg.alpha || cfg.beta) inst = place_instance(inst, a, b);
    return inst;
  }
  if (name == "extremal") return extremal_instance(a, b);
  if (name == "rotation") return rotation_instance(cfg.theta.value_or(cfg.beta ? std::arg(b) : 0.0));
  if (name == "zero") return zero_instance();
  throw UsageError("unknown builtin '" + name + "'");
}

inline ProblemInstance resolve_instance(const RunConfig& cfg) {
  if (cfg.builtin.has_value() == cfg.instance_path.has_value())
    throw UsageError("exactly one of --builtin or --instance is required");
  if (cfg.builtin) return builtin_instance(cfg);
  return io::load_instance(*cfg.instance_path);
}

inline ordered_json envelope(const char* command, const QuadratureSpec& spec) {
  return ordered_json{{"command", command}, {"version", kVersion}, {"quadrature", io::to_json(spec)}};
}

inline void check_finite(const ordered_json& j) {
  if (j.is_number_float() && !std::isfinite(j.get<real>())) throw NumericalError("non-finite value in report");
  if (j.is_structured())
    for (const auto& item : j) check_finite(item);
}

inline int execute(const RunConfig& cfg, std::string& document) {
  const QuadratureSpec spec = cfg.quadrature();
  spec.validate();
  if (cfg.format == Format::csv && cfg.command != Command::convergence)
    throw UsageError("--format csv is only available for the convergence command");

  int status = kExitOk;
  ordered_json out;
  switch (cfg.command) {
    case Command::gallery_list: {
      out = envelope("gallery-list", spec);
      ordered_json list = ordered_json::array();
      for (const auto& e : gallery_entries())
        list.push_back({{"name", e.name}, {"description", e.description}, {"parameters", e.parameters}});
      out["gallery"] = list;
      break;
    }
    case Command::bound: {
      if (!cfg.p_norm || !cfg.g_norm) throw UsageError("bound requires --p-norm and --g-norm");
      out = envelope("bound", spec);
      out["bound"] = theorem_bound(*cfg.p_norm, *cfg.g_norm);
      out["in_positivity_region"] = positivity_region(*cfg.p_norm, *cfg.g_norm);
      break;
    }
    case Command::majorant: {
      if (!cfg.r || !cfg.p_norm || !cfg.g_norm) throw UsageError("majorant requires --r, --p-norm and --g-norm");
      out = envelope("majorant", spec);
      out["r"] = *cfg.r;
      out["majorant"] = majorant(*cfg.r, *cfg.p_norm, *cfg.g_norm);
      out["slope_limit"] = majorant_slope_limit(*cfg.p_norm, *cfg.g_norm);
      break;
    }
    case Command::eval: {
      if (!cfg.z) throw UsageError("eval requires --z");
      const ProblemInstance inst = resolve_instance(cfg);
      const DiskGrid grid = build_disk_grid(spec);
      const DiskPoint z(*cfg.z, spec.boundary_eps);
      const complex value = evaluate_solution(inst, z, spec, grid);
      out = envelope("eval", spec);
      out["instance"] = inst.name;
      out["z"] = io::to_json(*cfg.z);
      out["value"] = io::to_json(value);
      if (inst.has_closed_solution()) {
        const complex closed = inst.closed_solution(*cfg.z);
        out["closed_value"] = io::to_json(closed);
        out["abs_error"] = std::abs(value - closed);
      }
      break;
    }
    case Command::norms: {
      const ProblemInstance inst = resolve_instance(cfg);
      out = envelope("norms", spec);
      out["instance"] = inst.name;
      out["p_norm"] = sup_norm_boundary(phi_one(inst.phi));
      out["g_norm"] = sup_norm_field(inst.source);
      break;
    }
    case Command::verify: {
      const ProblemInstance inst = resolve_instance(cfg);
      const DiskGrid grid = build_disk_grid(spec);
      out = envelope("verify", spec);
      out["instance"] = inst.name;
      try {
        const SchwarzReport report = verify_schwarz(inst, spec, grid);
        const ordered_json fields = io::to_json(report);
        for (const auto& [k, v] : fields.items()) out[k] = v;
        status = report.pass ? kExitOk : kExitFail;
      } catch (const HypothesisViolation& e) {
        out["error"] = "hypothesis";
        out["hypothesis"] = e.hypothesis();
        out["detail"] = e.what();
        status = kExitFail;
      }
      break;
    }
    case Command::convergence: {
      const ProblemInstance inst = resolve_instance(cfg);
      std::vector<std::pair<int, int>> ladder = default_convergence_ladder();
      if (cfg.n_theta || cfg.n_radial)
        ladder = {{spec.n_theta, spec.n_radial},
                  {2 * spec.n_theta, 2 * spec.n_radial},
                  {4 * spec.n_theta, 4 * spec.n_radial}};
      const auto rows = convergence_study(inst, ladder, spec);
      if (cfg.format == Format::csv) {
        std::string csv = "n_theta,n_radial,max_error\n";
        for (const auto& row : rows)
          csv += std::to_string(row.n_theta) + "," + std::to_string(row.n_radial) + "," + format_real(row.max_error) + "\n";
        document = csv;
        return status;
      }
      out = envelope("convergence", spec);
      out["instance"] = inst.name;
      ordered_json table = ordered_json::array();
      for (const auto& row : rows)
        table.push_back({{"n_theta", row.n_theta}, {"n_radial", row.n_radial}, {"max_error", row.max_error}});
      out["rows"] = table;
      break;
    }
  }
  check_finite(out);
  document = out.dump(2) + "\n";
  return status;
}

}  // namespace cli

/// Executes one command; the report goes to cfg.output_path or `out`, errors to `err`.
inline int run(const RunConfig& cfg, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  std::string document;
  int status = kExitOk;
  try {
    status = cli::execute(cfg, document);
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const HypothesisViolation& e) {
    err << "hypothesis violated: " << e.what() << "\n";
    return kExitFail;
  } catch (const std::exception& e) {
    // InputError, UsageError, DomainError and nlohmann type errors are configuration problems
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (cfg.output_path) {
    std::ofstream file(*cfg.output_path, std::ios::binary);
    if (!file) {
      err << "error: cannot write '" << *cfg.output_path << "'\n";
      return kExitUsage;
    }
    file << document;
  } else {
    out << document;
  }
  return status;
}

/**
 * Parses argv into `cfg`. Returns std::nullopt when the command should run,
 * otherwise the exit status (0 for --help, 2 for parse errors).
 */
inline std::optional<int> parse_command_line(int argc, const char* const* argv, RunConfig& cfg,
                                             std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Biharmonic boundary Schwarz verification on the unit disk", "diskschwarz"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();

  std::string builtin, instance, out_path, format = "json";
  real M = 0.0, theta = 0.0, r = 0.0, p = 0.0, g = 0.0, fd = 0.0;
  int nt = 0, nr = 0;
  std::vector<real> alpha, beta, z;

  auto* o_builtin = app.add_option("--builtin", builtin, "Gallery instance: example31, extremal, rotation, zero");
  auto* o_instance = app.add_option("--instance", instance, "Path to an instance JSON file");
  auto* o_M = app.add_option("--M", M, "Amplitude M of example31");
  auto* o_theta = app.add_option("--theta", theta, "Angle of the rotation instance");
  auto* o_alpha = app.add_option("--alpha", alpha, "Contact point alpha as <re> <im>")->expected(2);
  auto* o_beta = app.add_option("--beta", beta, "Contact image beta as <re> <im>")->expected(2);
  auto* o_z = app.add_option("--z", z, "Evaluation point as <re> <im>")->expected(2);
  auto* o_r = app.add_option("--r", r, "Radius for the majorant");
  auto* o_p = app.add_option("--p-norm", p, "Sup norm of P[phi_1]");
  auto* o_g = app.add_option("--g-norm", g, "Sup norm of g");
  auto* o_nt = app.add_option("--n-theta", nt, "Angular node count");
  auto* o_nr = app.add_option("--n-radial", nr, "Radial node count");
  auto* o_fd = app.add_option("--fd-step", fd, "Finite-difference step");
  app.add_option("--format", format, "Output format: json or csv")->check(CLI::IsMember({"json", "csv"}));
  auto* o_out = app.add_option("--out", out_path, "Write the report to this path");

  const std::vector<std::pair<const char*, Command>> commands = {
      {"verify", Command::verify},     {"eval", Command::eval},
      {"norms", Command::norms},       {"bound", Command::bound},
      {"majorant", Command::majorant}, {"gallery-list", Command::gallery_list},
      {"convergence", Command::convergence}};
  std::vector<std::pair<CLI::App*, Command>> subs;
  for (const auto& [name, cmd] : commands) subs.emplace_back(app.add_subcommand(name), cmd);
  subs[0].first->description("Check the boundary inequality on an instance");
  subs[1].first->description("Evaluate the representation formula at --z");
  subs[2].first->description("Estimate ||P[phi_1]|| and ||g|| on the closed disk");
  subs[3].first->description("Right-hand side of the inequality");
  subs[4].first->description("Radial majorant and its slope at r = 1");
  subs[5].first->description("List gallery instances");
  subs[6].first->description("Round-trip error table over refined grids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  for (const auto& [sub, cmd] : subs)
    if (sub->parsed()) cfg.command = cmd;
  if (o_builtin->count()) cfg.builtin = builtin;
  if (o_instance->count()) cfg.instance_path = instance;
  if (o_M->count()) cfg.M = M;
  if (o_theta->count()) cfg.theta = theta;
  if (o_alpha->count()) cfg.alpha = complex{alpha[0], alpha[1]};
  if (o_beta->count()) cfg.beta = complex{beta[0], beta[1]};
  if (o_z->count()) cfg.z = complex{z[0], z[1]};
  if (o_r->count()) cfg.r = r;
  if (o_p->count()) cfg.p_norm = p;
  if (o_g->count()) cfg.g_norm = g;
  if (o_nt->count()) cfg.n_theta = nt;
  if (o_nr->count()) cfg.n_radial = nr;
  if (o_fd->count()) cfg.fd_step = fd;
  if (o_out->count()) cfg.output_path = out_path;
  cfg.format = format == "csv" ? Format::csv : Format::json;
  return std::nullopt;
}

}  // namespace diskschwarz
