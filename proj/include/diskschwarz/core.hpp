#pragma once

/**
 * @file core.hpp
 * @brief Scalar types, tolerances, error types and points of the closed unit disk.
 */

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace diskschwarz {

using real = double;
using complex = std::complex<double>;

inline constexpr real pi = std::numbers::pi;
inline constexpr real two_pi = 2.0 * std::numbers::pi;
inline constexpr complex I{0.0, 1.0};

/// Tolerance for membership of the unit circle, shared by every module.
inline constexpr real kBoundaryEps = 1e-12;

/// Pairs closer than sqrt(kDiagonalGuard) are treated as the Green diagonal.
inline constexpr real kDiagonalGuard = 1e-30;

inline constexpr const char* kVersion = "diskschwarz 1.0.0";

/// A precondition on the inputs of an operation was violated.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An instance does not satisfy the hypotheses of the boundary inequality.
class HypothesisViolation : public std::runtime_error {
 public:
  HypothesisViolation(std::string hypothesis, const std::string& detail)
      : std::runtime_error(hypothesis + ": " + detail), hypothesis_(std::move(hypothesis)) {}

  const std::string& hypothesis() const noexcept { return hypothesis_; }

 private:
  std::string hypothesis_;
};

/// A computation produced a non-finite value.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline bool is_finite(complex z) noexcept { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

/// Unit complex number e^{i t}.
inline complex unit(real t) noexcept { return {std::cos(t), std::sin(t)}; }

inline bool is_unimodular(complex z, real eps = kBoundaryEps) noexcept {
  return std::abs(std::abs(z) - 1.0) <= eps;
}

/**
 * A point of the closed unit disk.
 *
 * Construction rejects points with |z|^2 > 1 + eps. A point is on the
 * boundary when ||z| - 1| <= eps and interior otherwise.
 */
class DiskPoint {
 public:
  constexpr DiskPoint() = default;

  explicit DiskPoint(complex z, real eps = kBoundaryEps) : z_(z), eps_(eps) {
    if (!is_finite(z)) throw DomainError("DiskPoint: non-finite coordinates");
    if (std::norm(z) > 1.0 + eps) throw DomainError("DiskPoint: point lies outside the closed unit disk");
  }

  DiskPoint(real re, real im, real eps = kBoundaryEps) : DiskPoint(complex{re, im}, eps) {}

  complex value() const noexcept { return z_; }
  real re() const noexcept { return z_.real(); }
  real im() const noexcept { return z_.imag(); }
  real modulus() const noexcept { return std::abs(z_); }

  bool on_boundary() const noexcept { return std::abs(std::abs(z_) - 1.0) <= eps_; }
  bool interior() const noexcept { return !on_boundary(); }

  /// Point of the unit circle at angle t.
  static DiskPoint boundary(real t) { return DiskPoint(unit(t)); }

 private:
  complex z_{0.0, 0.0};
  real eps_ = kBoundaryEps;
};

/// An angle on the unit circle, normalized to [0, 2pi).
class BoundaryAngle {
 public:
  constexpr BoundaryAngle() = default;

  explicit BoundaryAngle(real theta) {
    if (!std::isfinite(theta)) throw DomainError("BoundaryAngle: non-finite angle");
    theta_ = std::fmod(theta, two_pi);
    if (theta_ < 0.0) theta_ += two_pi;
    if (theta_ >= two_pi) theta_ = 0.0;
  }

  real value() const noexcept { return theta_; }
  complex point() const noexcept { return unit(theta_); }

 private:
  real theta_ = 0.0;
};

}  // namespace diskschwarz
