// Copyright (c) 2026 the tricoul authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

// CODATA 2018 recommended values, SI units. Pinned so that every derived
// conversion factor is reproducible bit-for-bit across builds.

namespace tricoul::codata2018 {

inline constexpr double elementary_charge = 1.602176634e-19;     // C (exact)
inline constexpr double vacuum_permittivity = 8.8541878128e-12;  // F/m
inline constexpr double hbar = 1.054571817e-34;                  // J s
inline constexpr double planck = 6.62607015e-34;                 // J s (exact)
inline constexpr double speed_of_light = 299792458.0;            // m/s (exact)
inline constexpr double electron_mass = 9.1093837015e-31;        // kg
inline constexpr double deuteron_mass = 3.3435837724e-27;        // kg
inline constexpr double electron_volt = 1.602176634e-19;         // J (exact)

}  // namespace tricoul::codata2018
