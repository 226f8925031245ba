#pragma once

/**
 * @file kernels.hpp
 * @brief Poisson kernel, biharmonic Green function and the Cauchy-type
 *        correction kernel of the unit disk.
 *
 * The functions in `raw` take plain complex numbers and skip the domain
 * checks; they are what the quadrature loops call. The checked overloads
 * taking DiskPoint/BoundaryAngle are the public entry points.
 */

#include <diskschwarz/core.hpp>

namespace diskschwarz {

namespace raw {

/// (1 - |z|^2) / |1 - z e^{-it}|^2
inline real poisson_kernel(complex z, real t) noexcept {
  return (1.0 - std::norm(z)) / std::norm(1.0 - z * unit(-t));
}

/// |z-w|^2 log|(1 - z conj(w)) / (z - w)|^2 - (1 - |z|^2)(1 - |w|^2)
inline real biharmonic_green(complex z, complex w, real diag_guard = kDiagonalGuard) noexcept {
  const real d2 = std::norm(z - w);
  const real one_z = 1.0 - std::norm(z);
  if (d2 < diag_guard) return -one_z * one_z;
  return d2 * std::log(std::norm(1.0 - z * std::conj(w)) / d2) - one_z * (1.0 - std::norm(w));
}

/// conj(z) e^{it} / (1 - conj(z) e^{it})^2
inline complex cauchy_kernel(complex z, real t) noexcept {
  const complex q = std::conj(z) * unit(t);
  const complex den = 1.0 - q;
  return q / (den * den);
}

}  // namespace raw

/// Harmonic Poisson kernel P(z, e^{it}); z must be interior.
inline real poisson_kernel(const DiskPoint& z, const BoundaryAngle& theta) {
  if (!z.interior()) throw DomainError("poisson_kernel: z must lie in the open disk");
  return raw::poisson_kernel(z.value(), theta.value());
}

/// Biharmonic Green function G(z, w); the diagonal returns -(1 - |z|^2)^2.
inline real biharmonic_green(const DiskPoint& z, const DiskPoint& w) noexcept {
  return raw::biharmonic_green(z.value(), w.value());
}

/// Kernel of the Cauchy-type correction term; z must be interior.
inline complex cauchy_kernel(const DiskPoint& z, const BoundaryAngle& t) {
  if (!z.interior()) throw DomainError("cauchy_kernel: z must lie in the open disk");
  return raw::cauchy_kernel(z.value(), t.value());
}

}  // namespace diskschwarz
