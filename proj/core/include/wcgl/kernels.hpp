#pragma once

#include <array>

#include "wcgl/common.hpp"

namespace wcgl {

// Periodized complex heat kernel K(t,x) on the unit torus and the
// self-correlation kernel script-K(delta; x), both by direct image summation
// (the lattice sum factorizes into two 1-D theta sums).

/// K(t,x) = sum_{y in Z^2} e^{-t}/(4 pi (i+mu) t) exp(-|x-y|^2 / (4 (i+mu) t)).
cplx kernel_KM(double t, double x1, double x2, double mu);

/// script-K(delta; x) = sum_y int_{|delta|}^inf e^{-s}/(8 pi (i delta + mu s))
///                      exp(-|x-y|^2 / (4 (i delta + mu s))) ds,
/// by fixed log-spaced Gauss-Legendre panels; absolute accuracy ~1e-8
/// (doubling the panel density is exposed for cross-checks).
cplx script_K(double delta, double x1, double x2, double mu, int panels_per_efold = 3);

/// Distance to the nearest lattice point, |x|_1 on the unit torus.
double torus_distance(double x1, double x2);

}  // namespace wcgl
