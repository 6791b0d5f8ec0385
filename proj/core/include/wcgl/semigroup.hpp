#pragma once

#include "wcgl/grid.hpp"

namespace wcgl {

// Diagonal linear flows. With A = (i+mu) Lap - 1 the mode-m eigenvalue of -A
// is lambda_A(m) = 4 pi^2 (i+mu) |m|^2 + 1, so e^{tA} multiplies coefficient
// m by exp(-t lambda_A(m)). lambda_diff drops the "-1" shift.

enum class LinearSymbol { lambda_A, lambda_diff };

inline cplx linear_symbol(LinearSymbol which, double mu, int mx, int my) {
    const double m2 = static_cast<double>(mx) * mx + static_cast<double>(my) * my;
    const cplx base = 4.0 * pi * pi * cplx(mu, 1.0) * m2;
    return which == LinearSymbol::lambda_A ? base + 1.0 : base;
}

/// phi1(w) = (e^w - 1)/w, the ETD1 quadrature weight; series for small |w|.
inline cplx phi1(cplx w) {
    if (std::abs(w) < 1e-6) return 1.0 + w / 2.0 + w * w / 6.0;
    return (std::exp(w) - 1.0) / w;
}

/// e^{-t symbol(m)} f, exact in time.
inline SpectralField semigroup_apply(const SpectralField& f, double t, LinearSymbol which, double mu) {
    if (t < 0.0) throw input_error("semigroup: negative time");
    const Grid& g = f.grid();
    SpectralField out(g);
    for (int mx = -g.n; mx <= g.n; ++mx)
        for (int my = -g.n; my <= g.n; ++my) {
            const cplx a = f.at(mx, my);
            if (a != cplx(0.0)) out.at(mx, my) = std::exp(-t * linear_symbol(which, mu, mx, my)) * a;
        }
    return out;
}

}  // namespace wcgl
