// Copyright (c) 2026 the tricoul authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstddef>
#include <utility>

// Adaptive 1-D quadrature on finite intervals, built on the 15-point
// Gauss-Kronrod pair. Bisection recurses wherever the embedded 7-point Gauss
// rule disagrees with the Kronrod value, which resolves integrable
// square-root singularities and steep near-singular integrands without any
// problem-specific substitutions.

namespace tricoul::quadrature {

namespace detail {

// Kronrod abscissae (positive half) and weights; Gauss weights of the
// embedded 7-point rule.
inline constexpr double xgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
inline constexpr double wgk[8] = {
    0.02293532201052922, 0.06309209262997855, 0.10479001032225018,
    0.14065325971552592, 0.16900472663926790, 0.19035057806478559,
    0.20443294007529889, 0.20948214108472782};
inline constexpr double wg[4] = {
    0.12948496616886969, 0.27970539148927664, 0.38183005050511894,
    0.41795918367346939};

struct PanelResult {
  double kronrod;
  double err;  // |kronrod - gauss|
};

template <typename F>
PanelResult gk15(const F& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double resk = wgk[7] * fc;
  double resg = wg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = h * xgk[j];
    const double fsum = f(c - dx) + f(c + dx);
    resk += wgk[j] * fsum;
    if (j % 2 == 1) resg += wg[j / 2] * fsum;
  }
  return {resk * h, std::fabs((resk - resg) * h)};
}

template <typename F>
double adapt(const F& f, double a, double b, double tol, int depth, int max_depth) {
  const PanelResult r = gk15(f, a, b);
  if (r.err <= tol || depth >= max_depth) return r.kronrod;
  const double c = 0.5 * (a + b);
  return adapt(f, a, c, 0.5 * tol, depth + 1, max_depth) +
         adapt(f, c, b, 0.5 * tol, depth + 1, max_depth);
}

}  // namespace detail

// Integrate f over [a, b]. initial_panels splits the interval uniformly
// before adaptation starts; abs_tol is distributed over the panels.
template <typename F>
double integrate(const F& f, double a, double b, double abs_tol = 1e-12,
                 int initial_panels = 1, int max_depth = 60) {
  if (a == b) return 0.0;
  if (initial_panels < 1) initial_panels = 1;
  const double w = (b - a) / initial_panels;
  const double panel_tol = abs_tol / initial_panels;
  double total = 0.0;
  for (int p = 0; p < initial_panels; ++p) {
    const double pa = a + p * w;
    const double pb = (p + 1 == initial_panels) ? b : a + (p + 1) * w;
    total += detail::adapt(f, pa, pb, panel_tol, 0, max_depth);
  }
  return total;
}

}  // namespace tricoul::quadrature
