#pragma once

/**
 * @file representation.hpp
 * @brief The integral representation of solutions of the biharmonic
 *        Dirichlet problem on the disk:
 *
 *   f(z) = P[f*](z) + (1-|z|^2)/(2pi) int f*(e^{it}) conj(z)e^{it}/(1-conj(z)e^{it})^2 dt
 *          - (1-|z|^2) P[phi_1](z) - (1/8) G[g](z),
 *
 * with phi_1(e^{it}) = phi(e^{it}) e^{-it} and
 * G[g](z) = (1/2pi) int_D g(w) G(z,w) dA(w).
 */

#include <diskschwarz/boundary.hpp>
#include <diskschwarz/core.hpp>
#include <diskschwarz/instance.hpp>
#include <diskschwarz/kernels.hpp>
#include <diskschwarz/quadrature.hpp>

#include <algorithm>
#include <array>
#include <optional>
#include <span>
#include <vector>

namespace diskschwarz {

/// Largest modulus at which the circle quadrature is used for the Poisson-type terms.
inline constexpr real kPoissonRadiusLimit = 1.0 - 1e-6;

/// Largest modulus covered by the accuracy contract of evaluate_solution.
inline constexpr real kSolutionRadiusLimit = 0.9;

/// phi_1(e^{it}) = phi(e^{it}) e^{-it}
inline BoundaryFunction phi_one(const BoundaryFunction& phi) {
  if (phi.kind() == BoundaryFunction::Kind::sampled) {
    const auto s = phi.samples();
    std::vector<complex> out(s.size());
    const int n = static_cast<int>(s.size());
    for (int j = 0; j < n; ++j)
      out[static_cast<std::size_t>(j)] = s[static_cast<std::size_t>(j)] * unit(-uniform_angle(j, n));
    return BoundaryFunction::sampled(std::move(out));
  }
  if (phi.name() == "zero") return BoundaryFunction::zero();
  return BoundaryFunction::builtin("phi_one(" + phi.name() + ")", [phi](real t) { return phi(t) * unit(-t); });
}

namespace detail {

inline void require_poisson_range(const DiskPoint& z, const char* who) {
  if (!(z.modulus() < kPoissonRadiusLimit))
    throw DomainError(std::string(who) + ": |z| must be below 1 - 1e-6");
}

}  // namespace detail

/// (1/2pi) int P(z, e^{it}) fn(e^{it}) dt by the periodic trapezoid rule.
inline complex poisson_extension(const BoundaryFunction& fn, const DiskPoint& z, const QuadratureSpec& spec) {
  detail::require_poisson_range(z, "poisson_extension");
  const complex zv = z.value();
  return circle_integral([&](real t) { return raw::poisson_kernel(zv, t) * fn(t); }, spec);
}

/// (1-|z|^2)/(2pi) int f*(e^{it}) K(z,t) dt; vanishes when f* is analytic in the disk.
inline complex cauchy_correction(const BoundaryFunction& f_star, const DiskPoint& z, const QuadratureSpec& spec) {
  detail::require_poisson_range(z, "cauchy_correction");
  const complex zv = z.value();
  const complex mean = circle_integral([&](real t) { return f_star(t) * raw::cauchy_kernel(zv, t); }, spec);
  return (1.0 - std::norm(zv)) * mean;
}

/// Source values at the grid nodes, in grid order.
inline std::vector<complex> sample_source(const SourceField& source, const DiskGrid& grid) {
  std::vector<complex> values;
  values.reserve(grid.nodes.size());
  for (const auto& node : grid.nodes) values.push_back(source(node.point));
  return values;
}

/// (1/2pi) sum_nodes g(w) G(z, w) weight, with g given at the grid nodes.
inline complex green_potential(std::span<const complex> source_values, complex z, const DiskGrid& grid,
                               real diag_guard = kDiagonalGuard) {
  if (source_values.size() != grid.nodes.size())
    throw DomainError("green_potential: source sample count does not match grid");
  complex sum{0.0, 0.0};
  for (std::size_t k = 0; k < grid.nodes.size(); ++k) {
    const auto& node = grid.nodes[k];
    sum += source_values[k] * (raw::biharmonic_green(z, node.point, diag_guard) * node.weight);
  }
  return sum / two_pi;
}

inline complex green_potential(const SourceField& source, const DiskPoint& z, const DiskGrid& grid) {
  if (source.is_zero()) return {};
  const auto values = sample_source(source, grid);
  return green_potential(values, z.value(), grid);
}

/**
 * Evaluates the representation formula for one instance.
 *
 * Inside |z| <= 0.9 the boundary integrals use the trapezoid rule. Beyond it
 * they switch to the Fourier-series form of the boundary data, which stays
 * accurate up to the circle; on the circle the value is f*(z). The Green
 * potential always uses the disk grid, which must outlive the evaluator.
 */
class SolutionEvaluator {
 public:
  SolutionEvaluator(const ProblemInstance& inst, const QuadratureSpec& spec, const DiskGrid& grid)
      : inst_(inst), spec_(spec), grid_(grid), phi1_(phi_one(inst.phi)) {
    spec_.validate();
    inst_.validate(spec_.boundary_eps);
    if (!inst_.source.is_zero()) source_values_ = sample_source(inst_.source, grid_);
  }

  /// Trapezoid route; requires |z| <= 0.9.
  complex interior(const DiskPoint& z) const {
    if (z.modulus() > kSolutionRadiusLimit) throw DomainError("evaluate_solution: |z| must not exceed 0.9");
    const complex zv = z.value();
    const real damp = 1.0 - std::norm(zv);
    return poisson_extension(inst_.f_star, z, spec_) + cauchy_correction(inst_.f_star, z, spec_) -
           damp * poisson_extension(phi1_, z, spec_) - 0.125 * potential(zv);
  }

  /// Any point of the closed disk.
  complex operator()(complex z) const {
    const DiskPoint p(z, spec_.boundary_eps);
    if (p.modulus() <= kSolutionRadiusLimit) return interior(p);
    if (p.on_boundary()) return inst_.f_star(std::arg(z));
    ensure_series();
    const real damp = 1.0 - std::norm(z);
    return f_series_->harmonic_extension(z) + damp * f_series_->cauchy_sum(z) -
           damp * phi1_series_->harmonic_extension(z) - 0.125 * potential(z);
  }

  complex potential(complex z) const {
    if (source_values_.empty()) return {};
    return green_potential(source_values_, z, grid_, spec_.diag_guard);
  }

  const BoundaryFunction& phi_one_data() const noexcept { return phi1_; }

 private:
  void ensure_series() const {
    if (!f_series_) {
      f_series_ = inst_.f_star.series(spec_.n_theta);
      phi1_series_ = phi1_.series(spec_.n_theta);
    }
  }

  ProblemInstance inst_;
  QuadratureSpec spec_;
  const DiskGrid& grid_;
  BoundaryFunction phi1_;
  std::vector<complex> source_values_;
  mutable std::optional<FourierSeries> f_series_;
  mutable std::optional<FourierSeries> phi1_series_;
};

/// P[f*](z) + correction - (1-|z|^2) P[phi_1](z) - G[g](z)/8, for |z| <= 0.9.
inline complex evaluate_solution(const ProblemInstance& inst, const DiskPoint& z, const QuadratureSpec& spec,
                                 const DiskGrid& grid) {
  if (z.modulus() > kSolutionRadiusLimit) throw DomainError("evaluate_solution: |z| must not exceed 0.9");
  return SolutionEvaluator(inst, spec, grid).interior(z);
}

/// Fixed interior points used to audit the analyticity flag of f*.
inline std::array<complex, 5> analyticity_probe_points() {
  std::array<complex, 5> pts{};
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const real r = 0.8 * std::sqrt((static_cast<real>(k) + 0.5) / 5.0);
    pts[k] = r * unit(2.399963229728653 * static_cast<real>(k) + 0.3);
  }
  return pts;
}

/// Largest |cauchy_correction| over the probe points; near zero for analytic f*.
inline real analytic_defect(const BoundaryFunction& f_star, const QuadratureSpec& spec) {
  real worst = 0.0;
  for (const complex& z : analyticity_probe_points())
    worst = std::max(worst, std::abs(cauchy_correction(f_star, DiskPoint(z), spec)));
  return worst;
}

}  // namespace diskschwarz
