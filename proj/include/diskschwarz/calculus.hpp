#pragma once

/**
 * @file calculus.hpp
 * @brief Finite-difference Wirtinger derivatives, Laplacian and bilaplacian of
 *        complex-valued fields on the disk, and the radial derivative at a
 *        boundary point.
 */

#include <diskschwarz/core.hpp>
#include <diskschwarz/quadrature.hpp>

#include <string>

namespace diskschwarz {

/// Default step for the 13-point bilaplacian: O(h^2) truncation vs eps/h^4 roundoff.
inline constexpr real kBilaplacianStep = 0.02;

/// f_z, f_zbar and the derived quantities of the real Jacobian matrix D_f.
struct WirtingerPair {
  complex fz;
  complex fzbar;
  real op_norm = 0.0;   ///< ||D_f|| = |f_z| + |f_zbar|
  real lambda = 0.0;    ///< lambda(D_f) = ||f_z| - |f_zbar||
  real jacobian = 0.0;  ///< J_f = |f_z|^2 - |f_zbar|^2

  static WirtingerPair from(complex fz, complex fzbar) noexcept {
    const real a = std::abs(fz), b = std::abs(fzbar);
    return {fz, fzbar, a + b, std::abs(a - b), std::norm(fz) - std::norm(fzbar)};
  }
};

namespace detail {

inline void require_clearance(complex z, real reach, const char* who) {
  if (!(reach > 0.0)) throw DomainError(std::string(who) + ": step must be positive");
  if (!(std::abs(z) + reach <= 1.0)) throw DomainError(std::string(who) + ": stencil leaves the unit disk");
}

}  // namespace detail

/// Central differences f_x, f_y combined into f_z = (f_x - i f_y)/2, f_zbar = (f_x + i f_y)/2.
template <DiskField F>
WirtingerPair wirtinger(const F& f, complex z, real h) {
  detail::require_clearance(z, 2.0 * h, "wirtinger");
  const complex fx = (complex(f(z + h)) - complex(f(z - h))) / (2.0 * h);
  const complex fy = (complex(f(z + I * h)) - complex(f(z - I * h))) / (2.0 * h);
  return WirtingerPair::from(0.5 * (fx - I * fy), 0.5 * (fx + I * fy));
}

/// 5-point Laplacian f_xx + f_yy = 4 f_{z zbar}.
template <DiskField F>
complex laplacian(const F& f, complex z, real h) {
  detail::require_clearance(z, 2.0 * h, "laplacian");
  const complex c = f(z);
  return (complex(f(z + h)) + complex(f(z - h)) + complex(f(z + I * h)) + complex(f(z - I * h)) - 4.0 * c) /
         (h * h);
}

/// f_{z zbar} as the Wirtinger z-bar derivative of the central-difference f_z.
template <DiskField F>
complex mixed_wirtinger(const F& f, complex z, real h) {
  detail::require_clearance(z, 4.0 * h, "mixed_wirtinger");
  auto fz = [&](complex p) {
    const complex fx = (complex(f(p + h)) - complex(f(p - h))) / (2.0 * h);
    const complex fy = (complex(f(p + I * h)) - complex(f(p - I * h))) / (2.0 * h);
    return 0.5 * (fx - I * fy);
  };
  const complex gx = (fz(z + h) - fz(z - h)) / (2.0 * h);
  const complex gy = (fz(z + I * h) - fz(z - I * h)) / (2.0 * h);
  return 0.5 * (gx + I * gy);
}

/**
 * 13-point bilaplacian stencil:
 *
 *              1
 *          2  -8   2
 *      1  -8  20  -8   1     / h^4
 *          2  -8   2
 *              1
 */
template <DiskField F>
complex bilaplacian(const F& f, complex z, real h) {
  detail::require_clearance(z, 4.0 * h, "bilaplacian");
  const complex ih = I * h;
  const complex center = f(z);
  const complex axis1 = complex(f(z + h)) + complex(f(z - h)) + complex(f(z + ih)) + complex(f(z - ih));
  const complex diag = complex(f(z + h + ih)) + complex(f(z + h - ih)) + complex(f(z - h + ih)) + complex(f(z - h - ih));
  const complex axis2 =
      complex(f(z + 2.0 * h)) + complex(f(z - 2.0 * h)) + complex(f(z + 2.0 * ih)) + complex(f(z - 2.0 * ih));
  const real h4 = h * h * h * h;
  return (20.0 * center - 8.0 * axis1 + 2.0 * diag + axis2) / h4;
}

/**
 * d/dr f(r alpha) at r = 1 for a boundary point alpha, i.e.
 * f_z(alpha) alpha + f_zbar(alpha) conj(alpha) when f is differentiable there.
 *
 * One-sided second-order quotient D(s) = (3 f(1) - 4 f(1-s) + f(1-2s)) / (2s)
 * at s = 2h and s = 4h, combined by one Richardson step. Samples the radius
 * on [1 - 8h, 1].
 */
template <DiskField F>
complex radial_boundary_derivative(const F& f, complex alpha, real h) {
  if (!(h > 0.0 && 8.0 * h < 1.0)) throw DomainError("radial_boundary_derivative: step must lie in (0, 1/8)");
  if (!is_unimodular(alpha, 1e-10)) throw DomainError("radial_boundary_derivative: alpha must lie on the circle");
  const complex f1 = f(alpha);
  if (!is_finite(f1)) throw NumericalError("radial_boundary_derivative: f is not evaluable at alpha");
  auto quotient = [&](real s) {
    return (3.0 * f1 - 4.0 * complex(f((1.0 - s) * alpha)) + complex(f((1.0 - 2.0 * s) * alpha))) / (2.0 * s);
  };
  const complex coarse = quotient(4.0 * h);
  const complex fine = quotient(2.0 * h);
  return (4.0 * fine - coarse) / 3.0;
}

}  // namespace diskschwarz
