#include "wcgl/products.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace wcgl {

SpectralField dealiased_product(const SpectralField& f, const SpectralField& g) {
    require_same_grid(f, g);
    std::vector<cplx> vf = to_grid(f);
    const std::vector<cplx> vg = to_grid(g);
    for (std::size_t i = 0; i < vf.size(); ++i) vf[i] *= vg[i];
    return from_grid(vf, f.grid());
}

SpectralField dealiased_cubic(const SpectralField& u) {
    std::vector<cplx> v = to_grid(u);
    for (auto& x : v) x = std::norm(x) * x;
    return from_grid(v, u.grid());
}

std::pair<SpectralField, SpectralField> gradient(const SpectralField& f) {
    const Grid& g = f.grid();
    SpectralField dx(g), dy(g);
    for (int mx = -g.n; mx <= g.n; ++mx)
        for (int my = -g.n; my <= g.n; ++my) {
            const cplx a = f.at(mx, my);
            if (a == cplx(0.0)) continue;
            dx.at(mx, my) = cplx(0.0, two_pi * mx) * a;
            dy.at(mx, my) = cplx(0.0, two_pi * my) * a;
        }
    return {std::move(dx), std::move(dy)};
}

SpectralField laplacian(const SpectralField& f) {
    const Grid& g = f.grid();
    SpectralField out(g);
    for (int mx = -g.n; mx <= g.n; ++mx)
        for (int my = -g.n; my <= g.n; ++my) {
            const cplx a = f.at(mx, my);
            if (a != cplx(0.0)) out.at(mx, my) = -4.0 * pi * pi * (static_cast<double>(mx) * mx + static_cast<double>(my) * my) * a;
        }
    return out;
}

int quadrature_points(const Grid& g, double p) {
    if (std::isinf(p)) return std::max(g.N, 2 * g.n + 2);
    const int pi_ = static_cast<int>(std::lround(p));
    if (std::abs(p - pi_) < 1e-12 && pi_ % 2 == 0) {
        int Nq = std::max(g.N, pi_ * g.n + 2);
        if (Nq % 2 != 0) ++Nq;
        return Nq;
    }
    return std::max(g.N, 2 * g.n + 2);
}

double lp_norm(const SpectralField& f, double p, int N_quad) {
    if (p < 1.0) throw config_error("lp_norm: p must be >= 1");
    const int Nq = N_quad > 0 ? N_quad : quadrature_points(f.grid(), p);
    if (Nq < 2 * f.grid().n + 2) throw config_error("lp_norm: under-resolved quadrature grid");
    const std::vector<cplx> v = to_grid(f, Nq);
    if (std::isinf(p)) {
        double mx = 0.0;
        for (const auto& x : v) mx = std::max(mx, std::abs(x));
        return mx;
    }
    // Descending-magnitude accumulation keeps large-dynamic-range sums stable.
    std::vector<double> terms(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) terms[i] = std::pow(std::abs(v[i]), p);
    std::sort(terms.begin(), terms.end(), std::greater<double>());
    KahanSum s;
    for (double t : terms) s.add(t);
    return std::pow(s.value() / static_cast<double>(v.size()), 1.0 / p);
}

}  // namespace wcgl
