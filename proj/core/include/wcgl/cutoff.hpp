#pragma once

#include "wcgl/grid.hpp"

namespace wcgl {

// Smooth Fourier cutoff Pi_n with radial symbol a_m = s(|m|/n):
// identically 1 on |m| <= n/2, 0 on |m| >= n, with a fixed C-infinity
// monotone transition in between. The transition profile is pinned here so
// runs are reproducible bit-for-bit.

/// Radial symbol value at mode m for cutoff n; in [0,1], radially non-increasing.
inline double cutoff_symbol(int n, int mx, int my) {
    if (n < 1) throw config_error("cutoff: n must be >= 1");
    const double r = std::sqrt(static_cast<double>(mx) * mx + static_cast<double>(my) * my) / n;
    if (r <= 0.5) return 1.0;
    if (r >= 1.0) return 0.0;
    return smooth_step(2.0 * (1.0 - r));
}

/// Per-mode multiplication by cutoff_symbol(n, m).
inline SpectralField project_pi(const SpectralField& f, int n) {
    const Grid& g = f.grid();
    SpectralField out(g);
    for (int mx = -g.n; mx <= g.n; ++mx)
        for (int my = -g.n; my <= g.n; ++my) {
            const cplx a = f.at(mx, my);
            if (a != cplx(0.0)) out.at(mx, my) = cutoff_symbol(n, mx, my) * a;
        }
    return out;
}

}  // namespace wcgl
