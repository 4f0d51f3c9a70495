// Copyright (c) 2026 the tricoul authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

#include "tricoul/constants.hpp"

// Dimensional analysis for the confined three-body Coulomb system: two heavy
// charges +Ze at (0,0,+-R/2) and one light charge -qe at spherical
// (rho, theta, phi). All internal computations use dimensionless coordinates
// obtained by rescaling lengths with G^2 = Z e^2 m / (2 pi eps0 hbar^2);
// this module owns every conversion back to SI.

namespace tricoul {

struct ParticleParams {
  double Z = 1.0;                          // heavy (positive) charge number
  double q = 1.0;                          // light (negative) charge number
  double m = codata2018::electron_mass;    // light mass, kg
  double M = codata2018::deuteron_mass;    // heavy mass, kg

  // q = 0 is allowed: it turns the light-heavy attraction off, which the
  // box-limit checks rely on.
  void validate() const {
    if (!(Z > 0.0)) throw std::invalid_argument("particles.Z must be > 0");
    if (!(q >= 0.0)) throw std::invalid_argument("particles.q must be >= 0");
    if (!(m > 0.0)) throw std::invalid_argument("particles.m must be > 0");
    if (!(M > m)) throw std::invalid_argument("particles.M must exceed particles.m");
  }

  friend bool operator==(const ParticleParams&, const ParticleParams&) = default;
};

// All physical <-> dimensionless conversion factors for one particle system.
// length_unit is meters per dimensionless length (1/G^2); energy_unit is eV
// per dimensionless energy (hbar^2 G^4 / 2m); time_unit is hbar over the
// energy unit. wavelength_numerator / dE gives the photon wavelength in
// meters for a dimensionless excitation dE.
struct ScaleSet {
  double g2_over_Z = 0.0;             // G^2/Z, 1/m
  double length_unit = 0.0;           // m
  double energy_unit = 0.0;           // eV
  double time_unit = 0.0;             // s
  double mu = 0.0;                    // m/M
  double wavelength_numerator = 0.0;  // m * (dimensionless energy)
};

enum class Dimension { length, energy, time };

inline Dimension dimension_from_string(std::string_view s) {
  if (s == "length") return Dimension::length;
  if (s == "energy") return Dimension::energy;
  if (s == "time") return Dimension::time;
  throw std::invalid_argument("unknown dimension tag: " + std::string(s));
}

inline ScaleSet compute_scales(const ParticleParams& p) {
  p.validate();
  namespace cd = codata2018;
  constexpr double pi = 3.14159265358979323846;

  ScaleSet s;
  s.g2_over_Z = cd::elementary_charge * cd::elementary_charge * p.m /
                (2.0 * pi * cd::vacuum_permittivity * cd::hbar * cd::hbar);
  const double g2 = p.Z * s.g2_over_Z;
  s.length_unit = 1.0 / g2;
  const double energy_unit_joule = cd::hbar * cd::hbar * g2 * g2 / (2.0 * p.m);
  s.energy_unit = energy_unit_joule / cd::electron_volt;
  s.time_unit = cd::hbar / energy_unit_joule;
  s.mu = p.m / p.M;
  s.wavelength_numerator = cd::planck * cd::speed_of_light / energy_unit_joule;
  return s;
}

// Dimensionless -> physical. Lengths in meters, energies in eV, times in s.
inline double convert(double value, Dimension d, const ScaleSet& s) {
  if (!std::isfinite(value)) throw std::invalid_argument("convert: non-finite value");
  switch (d) {
    case Dimension::length: return value * s.length_unit;
    case Dimension::energy: return value * s.energy_unit;
    case Dimension::time: return value * s.time_unit;
  }
  throw std::invalid_argument("convert: unknown dimension tag");
}

inline double convert_to_dimensionless(double value, Dimension d, const ScaleSet& s) {
  if (!std::isfinite(value)) throw std::invalid_argument("convert: non-finite value");
  switch (d) {
    case Dimension::length: return value / s.length_unit;
    case Dimension::energy: return value / s.energy_unit;
    case Dimension::time: return value / s.time_unit;
  }
  throw std::invalid_argument("convert: unknown dimension tag");
}

// Photon wavelength (m) resonant with a dimensionless excitation energy.
inline double wavelength_for_excitation(double delta_e, const ScaleSet& s) {
  if (!(delta_e > 0.0))
    throw std::domain_error("wavelength_for_excitation: delta_e must be > 0");
  return s.wavelength_numerator / delta_e;
}

// Dimensionless diamagnetic strength for a constant magnetic field B (tesla)
// along the heavy-particle axis. The light particle acquires the harmonic
// term beta * rho^2 sin^2(theta) with beta = (e B L^2 / 2 hbar)^2, L being
// the length unit; the heavy particles sit on the field axis and contribute
// nothing.
inline double beta_for_field(double b_tesla, const ScaleSet& s) {
  namespace cd = codata2018;
  const double w = cd::elementary_charge * b_tesla * s.length_unit * s.length_unit /
                   (2.0 * cd::hbar);
  return w * w;
}

}  // namespace tricoul
