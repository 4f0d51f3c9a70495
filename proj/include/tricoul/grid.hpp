// Copyright (c) 2026 the tricoul authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

// Discretized (R, rho, x = cos theta) domain. R and rho get uniform interior
// nodes with Dirichlet walls at 0 and the outer radius; x gets cell-centered
// midpoints on (-1, 1) so the coordinate singularities R = 0, rho = 0 and
// |cos theta| = 1 are never sampled.

namespace tricoul {

struct GridSpec {
  int n_r = 24;
  int n_rho = 24;
  int n_theta = 16;
  double r_max = 10.0;   // heavy-pair separation wall
  double rho_max = 5.0;  // light-particle confinement radius

  void validate() const {
    if (n_r < 3) throw std::invalid_argument("grid.n_r must be >= 3");
    if (n_rho < 3) throw std::invalid_argument("grid.n_rho must be >= 3");
    if (n_theta < 2) throw std::invalid_argument("grid.n_theta must be >= 2");
    if (!(r_max > 0.0)) throw std::invalid_argument("grid.r_max must be > 0");
    if (!(rho_max > 0.0)) throw std::invalid_argument("grid.rho_max must be > 0");
  }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

class Grid {
 public:
  std::vector<double> r_nodes;        // R_j = (j+1) dr, j = 0..n_r-1
  std::vector<double> rho_nodes;      // rho_i = (i+1) drho
  std::vector<double> x_nodes;        // cell centers in (-1, 1)
  std::vector<double> theta_weights;  // all dx; sum = 2
  double dr = 0.0;
  double drho = 0.0;
  double dx = 0.0;
  int n_r = 0;
  int n_rho = 0;
  int n_theta = 0;
  double r_max = 0.0;
  double rho_max = 0.0;

  std::size_t size() const { return n_; }

  std::size_t flat_index(int i_r, int i_rho, int i_x) const {
    check_bounds(i_r, i_rho, i_x);
    return (static_cast<std::size_t>(i_r) * n_rho + i_rho) * n_theta + i_x;
  }

  std::array<int, 3> unflatten(std::size_t k) const {
    if (k >= n_) throw std::out_of_range("grid: flat index out of range");
    const int i_x = static_cast<int>(k % n_theta);
    const std::size_t rest = k / n_theta;
    const int i_rho = static_cast<int>(rest % n_rho);
    const int i_r = static_cast<int>(rest / n_rho);
    return {i_r, i_rho, i_x};
  }

  // Measure in which the transformed components u = rho * Psi are
  // orthonormal; the rho^2 Jacobian is absorbed by that substitution.
  double integration_weight(int i_r, int i_rho, int i_x) const {
    check_bounds(i_r, i_rho, i_x);
    return dr * drho * theta_weights[i_x];
  }

  // All theta weights are equal by construction, so the measure is one
  // scalar. Kept next to integration_weight for callers that exploit it.
  double uniform_weight() const { return dr * drho * dx; }

  friend Grid build_grid(const GridSpec& spec);

 private:
  std::size_t n_ = 0;

  void check_bounds(int i_r, int i_rho, int i_x) const {
    if (i_r < 0 || i_r >= n_r || i_rho < 0 || i_rho >= n_rho || i_x < 0 || i_x >= n_theta)
      throw std::out_of_range("grid: node index (" + std::to_string(i_r) + "," +
                              std::to_string(i_rho) + "," + std::to_string(i_x) +
                              ") out of range");
  }
};

inline Grid build_grid(const GridSpec& spec) {
  spec.validate();
  Grid g;
  g.n_r = spec.n_r;
  g.n_rho = spec.n_rho;
  g.n_theta = spec.n_theta;
  g.r_max = spec.r_max;
  g.rho_max = spec.rho_max;
  g.dr = spec.r_max / (spec.n_r + 1);
  g.drho = spec.rho_max / (spec.n_rho + 1);
  g.dx = 2.0 / spec.n_theta;

  g.r_nodes.resize(spec.n_r);
  for (int j = 0; j < spec.n_r; ++j) g.r_nodes[j] = (j + 1) * g.dr;
  g.rho_nodes.resize(spec.n_rho);
  for (int i = 0; i < spec.n_rho; ++i) g.rho_nodes[i] = (i + 1) * g.drho;
  g.x_nodes.resize(spec.n_theta);
  g.theta_weights.assign(spec.n_theta, g.dx);
  for (int k = 0; k < spec.n_theta; ++k) g.x_nodes[k] = -1.0 + (k + 0.5) * g.dx;

  g.n_ = static_cast<std::size_t>(spec.n_r) * spec.n_rho * spec.n_theta;
  return g;
}

}  // namespace tricoul
