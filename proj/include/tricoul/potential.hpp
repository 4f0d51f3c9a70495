// Copyright (c) 2026 the tricoul authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "tricoul/quadrature.hpp"

// Dimensionless static potential of the confined three-body system:
//
//   V(R, rho, theta) = Z/R - q { 1/sqrt(R^2/4 + rho^2 - R rho cos theta)
//                              + 1/sqrt(R^2/4 + rho^2 + R rho cos theta) }
//
// plus an optional diamagnetic term beta * rho^2 sin^2(theta) for a constant
// magnetic field along the heavy-particle axis.

namespace tricoul {

// Raised when an evaluation lands on a Coulomb center; kept distinct from
// overflow so the operator assembly can name the offending node.
class SingularityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct PotentialParams {
  double Z = 1.0;
  double q = 1.0;
  double beta = 0.0;  // diamagnetic strength; 0 disables the magnetic term

  // Z = 0 and q = 0 are both allowed so the kinetic-only (particle-in-a-box)
  // limits are reachable.
  void validate() const {
    if (!(Z >= 0.0)) throw std::invalid_argument("potential.Z must be >= 0");
    if (!(q >= 0.0)) throw std::invalid_argument("potential.q must be >= 0");
    if (!(beta >= 0.0)) throw std::invalid_argument("potential.beta must be >= 0");
  }

  friend bool operator==(const PotentialParams&, const PotentialParams&) = default;
};

namespace detail {

// Squared distances from the light particle to the two heavy centers,
// x = cos theta.
inline void center_distances_sq(double R, double rho, double x, double& d_minus_sq,
                                double& d_plus_sq) {
  const double a = 0.25 * R * R + rho * rho;
  const double b = R * rho * x;
  d_minus_sq = a - b;
  d_plus_sq = a + b;
}

}  // namespace detail

// V at a point, x = cos theta in [-1, 1].
inline double coulomb_potential_x(double R, double rho, double x, const PotentialParams& p) {
  if (!(R > 0.0))
    throw SingularityError("coulomb_potential: R must be > 0 (heavy-pair coincidence)");
  double dm2, dp2;
  detail::center_distances_sq(R, rho, x, dm2, dp2);
  const double scale = 0.25 * R * R + rho * rho;
  const double floor = 1e-28 * scale;
  if (dm2 <= floor || dp2 <= floor)
    throw SingularityError("coulomb_potential: light charge coincides with a heavy charge");
  return p.Z / R - p.q * (1.0 / std::sqrt(dm2) + 1.0 / std::sqrt(dp2));
}

inline double coulomb_potential(double R, double rho, double theta, const PotentialParams& p) {
  return coulomb_potential_x(R, rho, std::cos(theta), p);
}

// beta * rho^2 sin^2(theta): squared distance of the light particle from the
// field axis times the field-strength knob.
inline double diamagnetic_term_x(double rho, double x, const PotentialParams& p) {
  return p.beta * rho * rho * (1.0 - x * x);
}

inline double diamagnetic_term(double rho, double theta, const PotentialParams& p) {
  const double s = std::sin(theta);
  return p.beta * rho * rho * s * s;
}

// Shell-theorem closed form of the theta-averaged attraction: the average of
// 1/|distance| over cos theta is 2 min(R/2, rho) / (R rho), so
//
//   Vbar = Z/R - 2q/rho   for rho >= R/2
//   Vbar = Z/R - 4q/R     for rho <  R/2
//
// Analytic oracle for the quadrature below; Coulomb part only.
inline double averaged_potential_closed_form(double R, double rho, const PotentialParams& p) {
  if (!(R > 0.0) || !(rho > 0.0))
    throw std::domain_error("averaged_potential_closed_form: R and rho must be > 0");
  if (rho >= 0.5 * R) return p.Z / R - 2.0 * p.q / rho;
  return p.Z / R - 4.0 * p.q / R;
}

// Theta-average (1/2) int_{-1}^{1} dx V(R, rho, x) by adaptive quadrature.
// n_theta sets the initial uniform panel budget (roughly 15 nodes per
// panel); adaptation then drives the result to ~1e-10 absolute even next to
// the rho = R/2 shell crossing, where the integrand develops an endpoint
// near-singularity. Includes the diamagnetic term when beta > 0.
inline double averaged_potential(double R, double rho, const PotentialParams& p,
                                 int n_theta = 512) {
  if (!(R > 0.0) || !(rho > 0.0))
    throw std::domain_error("averaged_potential: R and rho must be > 0");
  const auto integrand = [&](double x) {
    double v = coulomb_potential_x(R, rho, x, p);
    if (p.beta > 0.0) v += diamagnetic_term_x(rho, x, p);
    return v;
  };
  const int panels = std::max(1, n_theta / 15);
  return 0.5 * quadrature::integrate(integrand, -1.0, 1.0, 1e-10, panels);
}

// Same average on the cell-centered midpoint rule the operator assembly
// uses: x_k = -1 + (k + 1/2) dx, equal weights dx. Second-order away from
// the shell crossing.
inline double averaged_potential_midpoint(double R, double rho, const PotentialParams& p,
                                          int n_theta) {
  if (!(R > 0.0) || !(rho > 0.0))
    throw std::domain_error("averaged_potential_midpoint: R and rho must be > 0");
  if (n_theta < 1) throw std::invalid_argument("averaged_potential_midpoint: n_theta >= 1");
  const double dx = 2.0 / n_theta;
  double sum = 0.0;
  for (int k = 0; k < n_theta; ++k) {
    const double x = -1.0 + (k + 0.5) * dx;
    double v = coulomb_potential_x(R, rho, x, p);
    if (p.beta > 0.0) v += diamagnetic_term_x(rho, x, p);
    sum += v;
  }
  return 0.5 * sum * dx;
}

}  // namespace tricoul
