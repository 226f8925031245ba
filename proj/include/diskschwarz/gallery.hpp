#pragma once

/**
 * @file gallery.hpp
 * @brief Closed-form problem instances and the rotation transform that moves
 *        a contact pair (alpha, beta) to (1, 1).
 */

#include <diskschwarz/boundary.hpp>
#include <diskschwarz/core.hpp>
#include <diskschwarz/instance.hpp>

#include <string>
#include <vector>

namespace diskschwarz {

/// Upper limit 2 sqrt(5) (3 - sqrt(2)) / (35 pi) on the example31 amplitude.
inline const real kExampleAmplitudeLimit = 2.0 * std::sqrt(5.0) * (3.0 - std::sqrt(2.0)) / (35.0 * pi);

struct ExampleParams {
  real amplitude_M = 0.01;

  void validate() const {
    if (!(amplitude_M > 0.0 && amplitude_M < kExampleAmplitudeLimit))
      throw DomainError("example31: M must lie in (0, " + std::to_string(kExampleAmplitudeLimit) + ")");
  }
};

namespace example31_forms {

inline complex solution(real M, complex z) {
  const complex z2 = z * z;
  const real r2 = std::norm(z), r4 = r2 * r2;
  return (1.0 - M) * z2 + (M * I / 4.0) * (1.0 - r4) * (z2 + std::conj(z2)) + M * r4;
}

inline WirtingerValues wirtinger(real M, complex z) {
  const complex zb = std::conj(z);
  const real r2 = std::norm(z), r4 = r2 * r2;
  const complex s = z * z + zb * zb;
  const complex fz = 2.0 * (1.0 - M) * z + (M * I / 2.0) * (z * (1.0 - r4) - z * zb * zb * s) + 2.0 * M * z * zb * zb;
  const complex fzbar = (M * I / 2.0) * (zb * (1.0 - r4) - z * z * zb * s) + 2.0 * M * z * z * zb;
  return {fz, fzbar};
}

/// g(z) = 32 M [2 - 3i (z^2 + conj(z)^2)]
inline complex source(real M, complex z) {
  const complex z2 = z * z;
  return 32.0 * M * (2.0 - 3.0 * I * (z2 + std::conj(z2)));
}

/// phi(e^{it}) = (M/2) e^{it} (4 - 2i cos 2t)
inline complex phi(real M, real t) { return 0.5 * M * unit(t) * (4.0 - 2.0 * I * std::cos(2.0 * t)); }

/// f*(e^{it}) = (1 - M) e^{2it} + M
inline complex f_star(real M, real t) { return (1.0 - M) * unit(2.0 * t) + M; }

}  // namespace example31_forms

/**
 * The example31 family:
 * f(z) = (1-M) z^2 + (Mi/4)(1-|z|^4)(z^2 + conj(z)^2) + M |z|^4,
 * with Delta^2 f = g, contact alpha = beta = 1.
 */
inline ProblemInstance example31(const ExampleParams& params) {
  params.validate();
  const real M = params.amplitude_M;
  ProblemInstance inst;
  inst.name = "example31";
  inst.f_star = BoundaryFunction::builtin("example31_f_star", [M](real t) { return example31_forms::f_star(M, t); }, true);
  inst.phi = BoundaryFunction::builtin("example31_phi", [M](real t) { return example31_forms::phi(M, t); });
  inst.source = SourceField::builtin("example31_g", [M](complex z) { return example31_forms::source(M, z); },
                                     64.0 * std::sqrt(10.0) * M);
  inst.alpha = DiskPoint(1.0, 0.0);
  inst.beta = 1.0;
  inst.closed_solution = [M](complex z) { return example31_forms::solution(M, z); };
  inst.closed_wirtinger = [M](complex z) { return example31_forms::wirtinger(M, z); };
  inst.amplitude_M = M;
  return inst;
}

namespace extremal_forms {

/// (2/pi) atan((z + conj(z)) / (1 - |z|^2)) inside the disk; 1 on the circle.
inline complex h(complex z) {
  const real d = 1.0 - std::norm(z);
  if (d <= kBoundaryEps) return 1.0;
  return 2.0 / pi * std::atan(2.0 * z.real() / d);
}

inline WirtingerValues h_wirtinger(complex z) {
  const complex zb = std::conj(z);
  const real d = 1.0 - std::norm(z);
  const complex s = z + zb;
  const complex den = d * d + s * s;
  return {2.0 / pi * (1.0 + zb * zb) / den, 2.0 / pi * (1.0 + z * z) / den};
}

}  // namespace extremal_forms

/**
 * The sharpness function f(z) = beta h(conj(alpha) z) with
 * h(z) = (2/pi) atan((z + conj(z)) / (1 - |z|^2)).
 *
 * The stored boundary data is f* = beta and phi = 0, so the instance is not
 * used for representation round trips.
 */
inline ProblemInstance extremal_instance(complex alpha, complex beta) {
  if (!is_unimodular(alpha) || !is_unimodular(beta))
    throw DomainError("extremal_instance: alpha and beta must be unimodular");
  ProblemInstance inst;
  inst.name = "extremal";
  inst.f_star = BoundaryFunction::constant(beta).renamed("extremal_f_star");
  inst.phi = BoundaryFunction::zero();
  inst.source = SourceField::zero();
  inst.alpha = DiskPoint(alpha);
  inst.beta = beta;
  const complex ab = std::conj(alpha);
  inst.closed_solution = [ab, beta](complex z) {
    if (is_unimodular(z)) return beta;
    return beta * extremal_forms::h(ab * z);
  };
  // f_z = beta conj(alpha) h_z(conj(alpha) z), f_zbar = beta alpha h_zbar(conj(alpha) z)
  inst.closed_wirtinger = [ab, beta](complex z) {
    const auto d = extremal_forms::h_wirtinger(ab * z);
    return WirtingerValues{beta * ab * d.fz, beta * std::conj(ab) * d.fzbar};
  };
  inst.round_trip = false;
  return inst;
}

/// f(z) = e^{i theta} z with alpha = 1 and beta = e^{i theta}.
inline ProblemInstance rotation_instance(real theta) {
  const complex rot = unit(theta);
  ProblemInstance inst;
  inst.name = "rotation";
  inst.f_star = BoundaryFunction::mode(1, rot).renamed("rotation_f_star");
  inst.phi = BoundaryFunction::zero();
  inst.source = SourceField::zero();
  inst.alpha = DiskPoint(1.0, 0.0);
  inst.beta = rot;
  inst.closed_solution = [rot](complex z) { return rot * z; };
  inst.closed_wirtinger = [rot](complex) { return WirtingerValues{rot, 0.0}; };
  return inst;
}

/// f = f* = phi = g = 0; contact data alpha = beta = 1 is nominal.
inline ProblemInstance zero_instance() {
  ProblemInstance inst;
  inst.name = "zero";
  inst.closed_solution = [](complex) { return complex{}; };
  inst.closed_wirtinger = [](complex) { return WirtingerValues{}; };
  return inst;
}

/**
 * h(z) = conj(b) f(a z), g~(z) = conj(b) g(a z), psi(xi) = conj(b) conj(a) phi(a xi),
 * h*(z) = conj(b) f*(a z), with contact pair (conj(a) alpha, conj(b) beta).
 *
 * With (a, b) = (alpha, beta) the new contact pair is (1, 1).
 */
inline ProblemInstance rotate_instance(const ProblemInstance& inst, complex a, complex b) {
  if (!is_unimodular(a) || !is_unimodular(b)) throw DomainError("rotate_instance: rotation data must be unimodular");
  a /= std::abs(a);
  b /= std::abs(b);
  const real shift = std::arg(a);
  const complex bb = std::conj(b), ab = std::conj(a);

  ProblemInstance out;
  out.name = inst.name;
  out.amplitude_M = inst.amplitude_M;
  out.round_trip = inst.round_trip;

  const BoundaryFunction fs = inst.f_star;
  out.f_star = BoundaryFunction::builtin(
      "rotated(" + fs.name() + ")", [fs, shift, bb](real t) { return bb * fs(t + shift); }, fs.analytic());
  const BoundaryFunction ph = inst.phi;
  if (ph.kind() == BoundaryFunction::Kind::builtin && ph.name() == "zero") {
    out.phi = BoundaryFunction::zero();
  } else {
    out.phi = BoundaryFunction::builtin("rotated(" + ph.name() + ")",
                                        [ph, shift, bb, ab](real t) { return bb * ab * ph(t + shift); });
  }
  if (inst.source.is_zero()) {
    out.source = SourceField::zero();
  } else {
    const SourceField g = inst.source;
    out.source = SourceField::builtin(
        "rotated(" + g.name() + ")", [g, a, bb](complex z) { return bb * g(a * z); }, g.sup_norm_hint());
  }

  complex alpha = ab * inst.alpha.value();
  complex beta = bb * inst.beta;
  out.alpha = DiskPoint(alpha / std::abs(alpha));
  out.beta = beta / std::abs(beta);

  if (inst.closed_solution) {
    auto f = inst.closed_solution;
    out.closed_solution = [f, a, bb](complex z) { return bb * f(a * z); };
  }
  if (inst.closed_wirtinger) {
    auto d = inst.closed_wirtinger;
    out.closed_wirtinger = [d, a, bb, ab](complex z) {
      const auto w = d(a * z);
      return WirtingerValues{bb * a * w.fz, bb * ab * w.fzbar};
    };
  }
  return out;
}

/// Moves an instance with contact pair (1, 1) to contact pair (alpha, beta).
inline ProblemInstance place_instance(const ProblemInstance& inst, complex alpha, complex beta) {
  return rotate_instance(inst, std::conj(alpha), std::conj(beta));
}

struct GalleryEntry {
  std::string name;
  std::string description;
  std::vector<std::string> parameters;
};

inline std::vector<GalleryEntry> gallery_entries() {
  return {
      {"example31", "f = (1-M)z^2 + (Mi/4)(1-|z|^4)(z^2+conj(z)^2) + M|z|^4, g = 32M[2-3i(z^2+conj(z)^2)]",
       {"M", "alpha", "beta"}},
      {"extremal", "f = (2 beta/pi) atan((conj(alpha) z + alpha conj(z)) / (1-|z|^2))", {"alpha", "beta"}},
      {"rotation", "f = e^{i theta} z", {"theta"}},
      {"zero", "f = 0", {}},
  };
}

}  // namespace diskschwarz
