#pragma once

/**
 * @file instance.hpp
 * @brief One Dirichlet problem for the non-homogeneous biharmonic equation
 *        on the unit disk, together with its boundary contact data.
 */

#include <diskschwarz/boundary.hpp>
#include <diskschwarz/core.hpp>

#include <functional>
#include <optional>
#include <string>

namespace diskschwarz {

/// Values of f_z and f_zbar at a point.
struct WirtingerValues {
  complex fz;
  complex fzbar;
};

/**
 * Data (f*, phi, g) with f = f* and f_zbar = phi on the circle and
 * Delta^2 f = g in the disk, plus the contact point alpha and its image beta.
 *
 * `closed_solution` and `closed_wirtinger` are optional closed forms; when
 * present they are defined on the closed disk.
 */
struct ProblemInstance {
  std::string name = "instance";
  BoundaryFunction f_star;
  BoundaryFunction phi;
  SourceField source;
  DiskPoint alpha{1.0, 0.0};
  complex beta{1.0, 0.0};
  std::function<complex(complex)> closed_solution;
  std::function<WirtingerValues(complex)> closed_wirtinger;
  std::optional<real> amplitude_M;
  /// False for instances whose stored boundary data does not reproduce the
  /// closed form through the representation formula.
  bool round_trip = true;

  bool has_closed_solution() const noexcept { return static_cast<bool>(closed_solution); }
  bool has_closed_wirtinger() const noexcept { return static_cast<bool>(closed_wirtinger); }

  /// Throws DomainError unless alpha and beta are unimodular within eps.
  void validate(real eps = kBoundaryEps) const {
    if (!is_unimodular(alpha.value(), eps)) throw DomainError("ProblemInstance: |alpha| must equal 1");
    if (!is_unimodular(beta, eps)) throw DomainError("ProblemInstance: |beta| must equal 1");
  }
};

}  // namespace diskschwarz
