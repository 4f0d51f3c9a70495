// Copyright (c) 2026 the tricoul authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tricoul/grid.hpp"
#include "tricoul/potential.hpp"
#include "tricoul/sparse.hpp"

// Discrete Hamiltonian acting on the transformed wave function
// u(R, rho, x) = rho * Psi(R, rho, theta), l = 0 sector:
//
//   H u = -c_R d^2u/dR^2 - d^2u/drho^2 - (1/rho^2) d/dx[(1-x^2) du/dx]
//         + [V_coulomb + V_diamagnetic] u
//
// with c_R = 8 mu by default. The u = rho Psi substitution turns the radial
// part of the spherical Laplacian into a plain second derivative and makes
// rho = 0 a Dirichlet wall, so the whole operator is symmetric in the flat
// measure dR drho dx. The angular term is discretized in flux form with
// face-centered (1 - x^2); the faces at x = +-1 carry zero flux, so no pole
// condition is needed.

namespace tricoul {

struct HamiltonianOperator {
  Grid grid;
  PotentialParams pot;
  double mu = 0.0;
  double heavy_coeff = 0.0;  // c_R, coefficient of -d^2/dR^2
  SparseSymmetric matrix;

  std::size_t dimension() const { return matrix.size(); }

  void apply(std::span<const double> x, std::span<double> y, int n_threads = 1) const {
    matrix.apply(x, y, n_threads);
  }

  // <v, Hv> / <v, v>. The uniform grid weight cancels in the ratio.
  double rayleigh_quotient(std::span<const double> v) const {
    if (v.size() != dimension())
      throw std::invalid_argument("rayleigh_quotient: dimension mismatch");
    std::vector<double> hv(v.size());
    apply(v, hv);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      num += v[i] * hv[i];
      den += v[i] * v[i];
    }
    if (den == 0.0) throw std::invalid_argument("rayleigh_quotient: zero vector");
    return num / den;
  }
};

// Assemble the sparse symmetric operator on the grid. mu >= 0; pass
// heavy_kinetic_coeff to override the default c_R = 8 mu (the kinetic
// coefficient of the heavy-pair coordinate is convention-sensitive, so it is
// a configuration knob).
inline HamiltonianOperator assemble(const Grid& grid, const PotentialParams& pot, double mu,
                                    std::optional<double> heavy_kinetic_coeff = {}) {
  pot.validate();
  if (!(mu >= 0.0)) throw std::invalid_argument("assemble: mu must be >= 0");
  const double c_r = heavy_kinetic_coeff.value_or(8.0 * mu);
  if (!(c_r >= 0.0)) throw std::invalid_argument("assemble: heavy kinetic coefficient must be >= 0");

  const int nr = grid.n_r, nrho = grid.n_rho, nx = grid.n_theta;
  const double inv_dr2 = 1.0 / (grid.dr * grid.dr);
  const double inv_drho2 = 1.0 / (grid.drho * grid.drho);
  const double inv_dx2 = 1.0 / (grid.dx * grid.dx);

  // Face-centered angular coefficients a_m = 1 - x_m^2 at x_m = -1 + m dx;
  // the outer faces m = 0 and m = nx are exactly zero.
  std::vector<double> face(nx + 1, 0.0);
  for (int m = 1; m < nx; ++m) {
    const double xm = -1.0 + m * grid.dx;
    face[m] = 1.0 - xm * xm;
  }

  SparseSymmetric::Builder b(grid.size());
  for (int j = 0; j < nr; ++j) {
    const double R = grid.r_nodes[j];
    for (int i = 0; i < nrho; ++i) {
      const double rho = grid.rho_nodes[i];
      const double inv_rho2 = 1.0 / (rho * rho);
      for (int k = 0; k < nx; ++k) {
        const std::size_t me = grid.flat_index(j, i, k);
        double vpot;
        try {
          vpot = coulomb_potential_x(R, rho, grid.x_nodes[k], pot) +
                 diamagnetic_term_x(rho, grid.x_nodes[k], pot);
        } catch (const SingularityError& e) {
          throw std::runtime_error("assemble: singular potential at node (i_r=" +
                                   std::to_string(j) + ", i_rho=" + std::to_string(i) +
                                   ", i_x=" + std::to_string(k) + "): " + e.what());
        }
        const double diag = 2.0 * c_r * inv_dr2 + 2.0 * inv_drho2 +
                            (face[k] + face[k + 1]) * inv_rho2 * inv_dx2 + vpot;
        b.add(me, me, diag);
        if (j + 1 < nr) b.add(me, grid.flat_index(j + 1, i, k), -c_r * inv_dr2);
        if (i + 1 < nrho) b.add(me, grid.flat_index(j, i + 1, k), -inv_drho2);
        if (k + 1 < nx) b.add(me, grid.flat_index(j, i, k + 1), -face[k + 1] * inv_rho2 * inv_dx2);
      }
    }
  }

  HamiltonianOperator h;
  h.grid = grid;
  h.pot = pot;
  h.mu = mu;
  h.heavy_coeff = c_r;
  h.matrix = b.build();
  return h;
}

}  // namespace tricoul
