#pragma once

#include "wcgl/grid.hpp"

namespace wcgl {

// FFT bridge between coefficients and collocation values. Plans are cached
// per size behind a mutex and executed re-entrantly on caller buffers, so
// fields can be transformed from any worker thread.

/// Collocation values v[j1*N + j2] = f(j/N) on the N x N grid of the field's
/// own grid (or an explicit override N_out >= 2n+2 for finer quadrature).
std::vector<cplx> to_grid(const SpectralField& f, int N_out = 0);

/// Inverse: reads off coefficients with |m| <= n from N x N values.
/// Exact for data that is band-limited below the grid Nyquist.
SpectralField from_grid(const std::vector<cplx>& values, const Grid& g, int N_in = 0);

}  // namespace wcgl
