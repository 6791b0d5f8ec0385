#pragma once

#include "wcgl/transforms.hpp"

namespace wcgl {

// Dealiased pointwise operations. Fields enter band-limited to |m| <= n and
// the grid invariant N >= 4n+2 makes truncated products of up to three
// factors equal the exact spectral convolution.

/// Truncation to |m| <= n of f * g (pointwise product).
SpectralField dealiased_product(const SpectralField& f, const SpectralField& g);

/// Truncation to |m| <= n of |u|^2 u.
SpectralField dealiased_cubic(const SpectralField& u);

/// Gradient as a pair of fields (2 pi i m_x f_m, 2 pi i m_y f_m).
std::pair<SpectralField, SpectralField> gradient(const SpectralField& f);

/// Laplacian: -4 pi^2 |m|^2 f_m.
SpectralField laplacian(const SpectralField& f);

/// L^p norm of the collocation values ((1/N^2) sum |v|^p)^{1/p}; p = inf is
/// the grid max. Exact for even integer p when N > p * (band limit); other p
/// are plain quadrature. N_quad = 0 picks the smallest exact/refined grid.
double lp_norm(const SpectralField& f, double p, int N_quad = 0);

/// Quadrature grid that makes |f|^p integration exact for even integer p.
int quadrature_points(const Grid& g, double p);

}  // namespace wcgl
