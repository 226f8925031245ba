#pragma once

/**
 * @file schwarz.hpp
 * @brief Boundary Schwarz inequality for solutions of the biharmonic
 *        Dirichlet problem:
 *
 *   Re[conj(beta) (f_z(alpha) alpha + f_zbar(alpha) conj(alpha))]
 *       >= 2/pi - 3 ||P[phi_1]||_inf - ||g||_inf / 64,
 *
 * together with the radial majorant whose slope at r = 1 produces the bound.
 */

#include <diskschwarz/boundary.hpp>
#include <diskschwarz/calculus.hpp>
#include <diskschwarz/core.hpp>
#include <diskschwarz/instance.hpp>
#include <diskschwarz/quadrature.hpp>
#include <diskschwarz/representation.hpp>

#include <algorithm>
#include <map>
#include <optional>
#include <string>

namespace diskschwarz {

/// Everything computed when checking the inequality on one instance.
struct SchwarzReport {
  real lhs_re = 0.0;
  real lhs_im = 0.0;
  real p_norm = 0.0;
  real g_norm = 0.0;
  real bound = 0.0;
  real margin = 0.0;
  bool pass = false;
  bool in_positivity_region = false;
  std::map<std::string, real> diagnostics;
};

namespace detail {

/// Golden-section search for a maximum of a unimodal-enough function on [a, b].
template <typename F>
std::pair<real, real> golden_max(const F& fn, real a, real b, int iterations = 80) {
  constexpr real inv_phi = 0.6180339887498949;
  real x1 = b - inv_phi * (b - a), x2 = a + inv_phi * (b - a);
  real f1 = fn(x1), f2 = fn(x2);
  for (int i = 0; i < iterations && (b - a) > 1e-15; ++i) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = fn(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = fn(x1);
    }
  }
  // endpoints are candidates too: maxima of |P[.]| and |g| often sit at r = 1
  std::pair<real, real> best = f1 >= f2 ? std::pair{x1, f1} : std::pair{x2, f2};
  for (real e : {a, b}) {
    const real fe = fn(e);
    if (fe > best.second) best = {e, fe};
  }
  return best;
}

/**
 * Maximum of modulus(r, t) over a polar grid of the closed disk
 * (radii i / n_radial for i = 0..n_radial, n_theta angles), refined by
 * alternating golden-section searches in t and r around the grid argmax.
 */
template <typename F>
real polar_sup(const F& modulus, int n_theta, int n_radial) {
  real best = -1.0, best_r = 0.0, best_t = 0.0;
  for (int i = 0; i <= n_radial; ++i) {
    const real r = static_cast<real>(i) / n_radial;
    for (int k = 0; k < n_theta; ++k) {
      const real t = uniform_angle(k, n_theta);
      const real v = modulus(r, t);
      if (v > best) {
        best = v;
        best_r = r;
        best_t = t;
      }
      if (i == 0) break;  // a single node at the origin
    }
  }
  const real dt = two_pi / n_theta, dr = 1.0 / n_radial;
  real r = best_r, t = best_t, refined = best;
  for (int sweep = 0; sweep < 3; ++sweep) {
    const auto [t_new, v_t] = golden_max([&](real s) { return modulus(r, s); }, t - dt, t + dt);
    if (v_t > refined) {
      refined = v_t;
      t = t_new;
    }
    const auto [r_new, v_r] =
        golden_max([&](real s) { return modulus(s, t); }, std::max(0.0, r - dr), std::min(1.0, r + dr));
    if (v_r > refined) {
      refined = v_r;
      r = r_new;
    }
  }
  return std::max(best, refined);
}

}  // namespace detail

/**
 * Estimate of sup |P[fn]| over the closed disk.
 *
 * The harmonic extension is evaluated through the Fourier series of fn with
 * n_samples terms, which equals the Poisson integral and is valid up to the
 * circle. The result is a refined grid maximum, i.e. a lower estimate.
 */
inline real sup_norm_boundary(const BoundaryFunction& fn, int n_samples = 1024, int n_radial = 16) {
  if (n_samples < 1024) throw DomainError("sup_norm_boundary: n_samples must be >= 1024");
  if (fn.kind() == BoundaryFunction::Kind::builtin && fn.name() == "zero") return 0.0;
  const FourierSeries series = fn.series(n_samples);
  return detail::polar_sup([&](real r, real t) { return std::abs(series.harmonic_extension(r * unit(t))); },
                           n_samples, n_radial);
}

/// Estimate of sup |g| over the closed disk; refined grid maximum (lower estimate).
inline real sup_norm_field(const SourceField& source, int n_theta = 512, int n_radial = 256) {
  if (n_theta < 256 || n_radial < 128) throw DomainError("sup_norm_field: grid density must be >= 256x128");
  if (source.is_zero()) return 0.0;
  return detail::polar_sup([&](real r, real t) { return std::abs(source(r * unit(t))); }, n_theta, n_radial);
}

/// 2/pi - 3 p_norm - g_norm / 64
inline real theorem_bound(real p_norm, real g_norm) {
  if (p_norm < 0.0 || g_norm < 0.0) throw DomainError("theorem_bound: norms must be nonnegative");
  return 2.0 / pi - 3.0 * p_norm - g_norm / 64.0;
}

/// True iff the bound is strictly positive: 3 p_norm + g_norm / 64 < 2/pi.
inline bool positivity_region(real p_norm, real g_norm) {
  if (p_norm < 0.0 || g_norm < 0.0) throw DomainError("positivity_region: norms must be nonnegative");
  return 3.0 * p_norm + g_norm / 64.0 < 2.0 / pi;
}

/**
 * Radial majorant of |h| for a normalized solution (h(0) = 0, contact 1 -> 1):
 *
 *   M(r) = (4/pi) atan r + (1-r^2)/(1+r^2) (y/64 + r^2 x)
 *          + (4/pi) x (1-r^2) atan r + (y/64)(1-r^2)^2
 *
 * with x = ||P[phi_1]||_inf and y = ||g||_inf. M(1) = 1.
 */
inline real majorant(real r, real p_norm, real g_norm) {
  if (!(r >= 0.0 && r <= 1.0)) throw DomainError("majorant: r must lie in [0, 1]");
  const real a = std::atan(r);
  const real one_minus = 1.0 - r * r;
  const real y64 = g_norm / 64.0;
  return 4.0 * a / pi + (one_minus / (1.0 + r * r)) * (y64 + r * r * p_norm) + 4.0 * p_norm * one_minus * a / pi +
         y64 * one_minus * one_minus;
}

/// M'(1) term by term: 2/pi from the arctan, -(y/64 + x), -2x, and 0.
inline real majorant_slope_limit(real p_norm, real g_norm) {
  if (p_norm < 0.0 || g_norm < 0.0) throw DomainError("majorant_slope_limit: norms must be nonnegative");
  const real arctan_term = 2.0 / pi;
  const real damped_term = -(g_norm / 64.0 + p_norm);
  const real weighted_arctan_term = -2.0 * p_norm;
  const real quartic_term = 0.0;
  return arctan_term + damped_term + weighted_arctan_term + quartic_term;
}

struct SchwarzOptions {
  /// Use the radial finite-difference path even when closed derivatives exist.
  bool force_fd = false;
  int boundary_samples = 1024;
  int field_theta = 512;
  int field_radial = 256;
  /// Defaults to 1e-6 on the closed-derivative path and 1e-3 on the FD path.
  std::optional<real> report_tolerance;
};

/// Fixed sample of 200 interior points used for the f(D) in D audit.
inline std::vector<complex> self_map_probe_points(real r_max) {
  std::vector<complex> pts;
  pts.reserve(200);
  for (int i = 0; i < 10; ++i) {
    const real r = r_max * (i + 1) / 10.0;
    for (int k = 0; k < 20; ++k) pts.push_back(r * unit(uniform_angle(k, 20) + 0.1 * i));
  }
  return pts;
}

/**
 * Audits the hypotheses of the inequality on `inst` and reports both sides.
 *
 * Audit: f* flagged analytic and numerically so, f(0) = 0, f(alpha) = beta,
 * |f| < 1 on 200 sample points. A failed audit throws HypothesisViolation.
 *
 * The left side uses the closed Wirtinger derivatives when present (and not
 * overridden), otherwise the radial difference quotient of the closed
 * solution or of the representation formula.
 */
inline SchwarzReport verify_schwarz(const ProblemInstance& inst, const QuadratureSpec& spec, const DiskGrid& grid,
                                    const SchwarzOptions& options = {}) {
  spec.validate();
  inst.validate(spec.boundary_eps);
  SchwarzReport report;
  auto& diag = report.diagnostics;

  const bool closed = inst.has_closed_solution();
  std::optional<SolutionEvaluator> evaluator;
  if (!closed) evaluator.emplace(inst, spec, grid);
  auto f = [&](complex z) { return closed ? inst.closed_solution(z) : (*evaluator)(z); };

  if (!inst.f_star.analytic()) throw HypothesisViolation("f* analytic in D", "boundary data is not flagged analytic");
  const real defect = analytic_defect(inst.f_star, spec);
  diag["analytic_defect"] = defect;
  if (!(defect <= 1e-8)) throw HypothesisViolation("f* analytic in D", "Cauchy correction " + std::to_string(defect));

  const real value_tol = closed ? 1e-10 : 1e-6;
  const real f0 = std::abs(f(complex{}));
  diag["abs_f_at_0"] = f0;
  if (!(f0 <= value_tol)) throw HypothesisViolation("f(0) = 0", "|f(0)| = " + std::to_string(f0));

  const complex alpha = inst.alpha.value();
  const real contact_gap = std::abs(f(alpha) - inst.beta);
  diag["abs_f_alpha_minus_beta"] = contact_gap;
  if (!(contact_gap <= (closed ? 1e-10 : 1e-8)))
    throw HypothesisViolation("f(alpha) = beta", "|f(alpha) - beta| = " + std::to_string(contact_gap));

  real max_modulus = 0.0;
  for (const complex& z : self_map_probe_points(closed ? 0.99 : kSolutionRadiusLimit))
    max_modulus = std::max(max_modulus, std::abs(f(z)));
  diag["max_abs_f_sampled"] = max_modulus;
  if (!(max_modulus < 1.0 + value_tol))
    throw HypothesisViolation("f(D) in D", "sampled |f| reaches " + std::to_string(max_modulus));

  const bool use_closed = inst.has_closed_wirtinger() && !options.force_fd;
  complex radial;
  if (use_closed) {
    const auto d = inst.closed_wirtinger(alpha);
    radial = d.fz * alpha + d.fzbar * std::conj(alpha);
  } else {
    radial = radial_boundary_derivative(f, alpha, spec.fd_step);
  }
  const complex lhs = std::conj(inst.beta) * radial;
  diag["closed_derivatives"] = use_closed ? 1.0 : 0.0;

  report.lhs_re = lhs.real();
  report.lhs_im = lhs.imag();
  report.p_norm = sup_norm_boundary(phi_one(inst.phi), options.boundary_samples);
  report.g_norm = sup_norm_field(inst.source, options.field_theta, options.field_radial);
  report.bound = theorem_bound(report.p_norm, report.g_norm);
  report.margin = report.lhs_re - report.bound;
  const real tol = options.report_tolerance.value_or(use_closed ? 1e-6 : 1e-3);
  diag["report_tolerance"] = tol;
  report.pass = report.margin >= -tol;
  report.in_positivity_region = positivity_region(report.p_norm, report.g_norm);

  for (real v : {report.lhs_re, report.lhs_im, report.p_norm, report.g_norm, report.bound, report.margin})
    if (!std::isfinite(v)) throw NumericalError("verify_schwarz: non-finite value in report");
  return report;
}

}  // namespace diskschwarz
