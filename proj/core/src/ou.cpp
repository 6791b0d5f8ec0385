#include "wcgl/ou.hpp"

#include <algorithm>

namespace wcgl {

RenormConstant renorm_constant(int n, double mu) {
    if (n < 1) throw config_error("renorm_constant: n must be >= 1");
    if (!(mu > 0.0)) throw config_error("renorm_constant: mu must be positive");
    // Descending-magnitude accumulation: low modes carry the largest terms,
    // so gather terms first and sort.
    std::vector<double> terms;
    terms.reserve(static_cast<std::size_t>(2 * n + 1) * (2 * n + 1));
    for (int mx = -n; mx <= n; ++mx)
        for (int my = -n; my <= n; ++my) {
            const double a = cutoff_symbol(n, mx, my);
            if (a == 0.0) continue;
            const double re_lambda = 4.0 * pi * pi * mu * (static_cast<double>(mx) * mx + static_cast<double>(my) * my) + 1.0;
            terms.push_back(a * a / (2.0 * re_lambda));
        }
    std::sort(terms.begin(), terms.end(), std::greater<double>());
    KahanSum s;
    for (double t : terms) s.add(t);
    return RenormConstant{n, mu, s.value()};
}

NoiseIncrement draw_increment(const Grid& g, double h, std::uint64_t seed, std::uint64_t replica, std::uint64_t step) {
    if (!(h > 0.0)) throw input_error("draw_increment: h must be positive");
    NoiseIncrement inc{h, SpectralField(g)};
    for (int mx = -g.n; mx <= g.n; ++mx)
        for (int my = -g.n; my <= g.n; ++my) {
            if (!g.in_ball(mx, my)) continue;
            inc.dW.at(mx, my) = keyed_cgauss(seed, NoiseStream::ou, replica, step, mx, my, h);
        }
    return inc;
}

OUState ou_init(const Grid& g, int n, double mu, OuInit kind, std::uint64_t seed, std::uint64_t replica) {
    OUState s{0.0, SpectralField(g)};
    if (kind == OuInit::zero) return s;
    for (int mx = -g.n; mx <= g.n; ++mx)
        for (int my = -g.n; my <= g.n; ++my) {
            if (!g.in_ball(mx, my)) continue;
            const double a = cutoff_symbol(n, mx, my);
            if (a == 0.0) continue;
            const double re_lambda = linear_symbol(LinearSymbol::lambda_A, mu, mx, my).real();
            // Shared standard draw, scaled per cutoff: couples ladders.
            const cplx gdraw = keyed_cgauss(seed, NoiseStream::ou_init, replica, 0, mx, my, 1.0);
            s.Z.at(mx, my) = a / std::sqrt(2.0 * re_lambda) * gdraw;
        }
    return s;
}

OUState ou_exact_step(const OUState& state, double h, int n, double mu, std::uint64_t seed, std::uint64_t replica,
                      std::uint64_t step) {
    if (!(h > 0.0)) throw input_error("ou_exact_step: h must be positive");
    const Grid& g = state.Z.grid();
    OUState out{state.t + h, SpectralField(g)};
    for (int mx = -g.n; mx <= g.n; ++mx)
        for (int my = -g.n; my <= g.n; ++my) {
            if (!g.in_ball(mx, my)) continue;
            const cplx lam = linear_symbol(LinearSymbol::lambda_A, mu, mx, my);
            cplx z = std::exp(-h * lam) * state.Z.at(mx, my);
            const double a = cutoff_symbol(n, mx, my);
            if (a != 0.0) {
                const double var = (1.0 - std::exp(-2.0 * lam.real() * h)) / (2.0 * lam.real());
                z += a * keyed_cgauss(seed, NoiseStream::ou, replica, step, mx, my, var);
            }
            out.Z.at(mx, my) = z;
        }
    return out;
}

OUState ou_em_step(const OUState& state, const NoiseIncrement& dW, int n, double mu) {
    const Grid& g = state.Z.grid();
    require_same_grid(state.Z, dW.dW);
    OUState out{state.t + dW.h, SpectralField(g)};
    for (int mx = -g.n; mx <= g.n; ++mx)
        for (int my = -g.n; my <= g.n; ++my) {
            if (!g.in_ball(mx, my)) continue;
            const cplx lam = linear_symbol(LinearSymbol::lambda_A, mu, mx, my);
            cplx z = std::exp(-dW.h * lam) * state.Z.at(mx, my);
            const double a = cutoff_symbol(n, mx, my);
            if (a != 0.0) z += a * phi1(-dW.h * lam) * dW.dW.at(mx, my);
            out.Z.at(mx, my) = z;
        }
    return out;
}

WickBundle wick_bundle(const SpectralField& Z, const RenormConstant& c) {
    const std::vector<cplx> v = to_grid(Z);
    const std::size_t P = v.size();
    std::vector<cplx> v20(P), v11(P), v21(P);
    for (std::size_t i = 0; i < P; ++i) {
        const cplx z = v[i];
        const double z2 = std::norm(z);
        v20[i] = z * z;
        v11[i] = z2 - c.value;
        v21[i] = (z2 - 2.0 * c.value) * z;
    }
    const Grid& g = Z.grid();
    WickBundle b;
    b.z10 = Z;
    b.z20 = from_grid(v20, g);
    b.z11 = from_grid(v11, g);
    b.z21 = from_grid(v21, g);
    b.c = c.value;
    return b;
}

WickBundle nonstationary_shift(const SpectralField& Z_s, const SpectralField& Z_t, double dt,
                               const RenormConstant& c) {
    if (dt < 0.0) throw input_error("nonstationary_shift: dt must be >= 0");
    require_same_grid(Z_s, Z_t);
    SpectralField shifted = Z_t - semigroup_apply(Z_s, dt, LinearSymbol::lambda_A, c.mu);
    return wick_bundle(shifted, c);
}

}  // namespace wcgl
