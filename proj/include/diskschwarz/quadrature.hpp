#pragma once

/**
 * @file quadrature.hpp
 * @brief Periodic trapezoid rule on the circle and a polar
 *        Gauss-Legendre x trapezoid product rule on the disk.
 *
 * Summation order is fixed (radial-major, angular-minor, sequential), so
 * identical inputs give bit-identical results.
 */

#include <diskschwarz/core.hpp>

#include <concepts>
#include <string>
#include <utility>
#include <vector>

namespace diskschwarz {

/// Node counts, derivative step and tolerances shared by the numerical routines.
struct QuadratureSpec {
  int n_theta = 512;
  int n_radial = 200;
  real fd_step = 1e-4;
  real boundary_eps = kBoundaryEps;
  real diag_guard = kDiagonalGuard;

  /// Throws DomainError when a field is out of range.
  void validate() const {
    if (n_theta < 16 || n_theta % 2 != 0)
      throw DomainError("QuadratureSpec: n_theta must be even and >= 16, got " + std::to_string(n_theta));
    if (n_radial < 8) throw DomainError("QuadratureSpec: n_radial must be >= 8, got " + std::to_string(n_radial));
    if (!(fd_step > 0.0 && fd_step <= 0.1)) throw DomainError("QuadratureSpec: fd_step must lie in (0, 0.1]");
    if (!(boundary_eps > 0.0 && boundary_eps <= 1e-8))
      throw DomainError("QuadratureSpec: boundary_eps must lie in (0, 1e-8]");
    if (!(diag_guard > 0.0)) throw DomainError("QuadratureSpec: diag_guard must be positive");
  }
};

template <typename F>
concept AngleFunction = std::invocable<const F&, real> && std::convertible_to<std::invoke_result_t<const F&, real>, complex>;

template <typename F>
concept DiskField = std::invocable<const F&, complex> && std::convertible_to<std::invoke_result_t<const F&, complex>, complex>;

/// Angle of the k-th of n uniform nodes on the circle.
inline real uniform_angle(int k, int n) noexcept { return two_pi * static_cast<real>(k) / static_cast<real>(n); }

/**
 * Normalized trapezoid mean (1/2pi) * sum_k fn(t_k) * (2pi/n) over n uniform
 * angles t_k = 2pi k / n. Exact for e^{ijt} with |j| < n.
 */
template <AngleFunction F>
complex circle_mean(const F& fn, int n) {
  complex sum{0.0, 0.0};
  for (int k = 0; k < n; ++k) sum += complex(fn(uniform_angle(k, n)));
  return sum / static_cast<real>(n);
}

template <AngleFunction F>
complex circle_integral(const F& fn, const QuadratureSpec& spec) {
  return circle_mean(fn, spec.n_theta);
}

/**
 * Gauss-Legendre nodes and weights on [-1, 1], nodes ascending.
 *
 * Newton iteration on P_n started from the Chebyshev-like guesses
 * cos(pi (k + 3/4) / (n + 1/2)).
 */
inline std::pair<std::vector<real>, std::vector<real>> gauss_legendre(int n) {
  if (n < 1) throw DomainError("gauss_legendre: n must be positive");
  std::vector<real> x(static_cast<std::size_t>(n)), w(static_cast<std::size_t>(n));
  const int half = (n + 1) / 2;
  for (int k = 0; k < half; ++k) {
    real t = std::cos(pi * (k + 0.75) / (n + 0.5));
    real dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      real p0 = 1.0, p1 = t;
      for (int j = 2; j <= n; ++j) {
        const real p2 = ((2.0 * j - 1.0) * t * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (t * p1 - p0) / (t * t - 1.0);
      const real dt = p1 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-16) break;
    }
    // recompute derivative at the converged node
    real p0 = 1.0, p1 = t;
    for (int j = 2; j <= n; ++j) {
      const real p2 = ((2.0 * j - 1.0) * t * p1 - (j - 1.0) * p0) / j;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (t * p1 - p0) / (t * t - 1.0);
    const real wk = 2.0 / ((1.0 - t * t) * dp * dp);
    const auto lo = static_cast<std::size_t>(k), hi = static_cast<std::size_t>(n - 1 - k);
    x[lo] = -t;
    x[hi] = t;
    w[lo] = wk;
    w[hi] = wk;
  }
  if (n % 2 == 1) x[static_cast<std::size_t>(n / 2)] = 0.0;
  return {std::move(x), std::move(w)};
}

/// Tensor-product nodes of the unit disk; the polar Jacobian is folded into the weights.
struct DiskGrid {
  struct Node {
    complex point;
    real weight;
  };

  int n_theta = 0;
  int n_radial = 0;
  std::vector<Node> nodes;  ///< radial-major, angular-minor

  real weight_sum() const noexcept {
    real s = 0.0;
    for (const auto& n : nodes) s += n.weight;
    return s;
  }
};

/**
 * Gauss-Legendre radii in (0, 1) tensored with n_theta uniform angles.
 * The weights integrate dA over the disk, so they sum to pi.
 */
inline DiskGrid build_disk_grid(const QuadratureSpec& spec) {
  spec.validate();
  const auto [x, w] = gauss_legendre(spec.n_radial);
  DiskGrid grid;
  grid.n_theta = spec.n_theta;
  grid.n_radial = spec.n_radial;
  grid.nodes.reserve(static_cast<std::size_t>(spec.n_theta) * static_cast<std::size_t>(spec.n_radial));
  const real dtheta = two_pi / spec.n_theta;
  std::vector<complex> ring(static_cast<std::size_t>(spec.n_theta));
  for (int k = 0; k < spec.n_theta; ++k) ring[static_cast<std::size_t>(k)] = unit(uniform_angle(k, spec.n_theta));
  for (std::size_t j = 0; j < x.size(); ++j) {
    const real r = 0.5 * (x[j] + 1.0);
    const real wr = 0.5 * w[j] * r * dtheta;
    for (const complex& e : ring) grid.nodes.push_back({r * e, wr});
  }
  return grid;
}

/// Sum of fn(node) * weight over the grid, without any normalization.
template <DiskField F>
complex disk_integral(const F& fn, const DiskGrid& grid) {
  complex sum{0.0, 0.0};
  for (const auto& node : grid.nodes) sum += complex(fn(node.point)) * node.weight;
  return sum;
}

}  // namespace diskschwarz
