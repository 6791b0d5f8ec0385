#include "wcgl/dyadic.hpp"

#include <algorithm>
#include <cmath>

namespace wcgl {

namespace {

// psi: smooth, radial, 1 on [0,1], 0 on [4/3, inf), monotone in between.
double psi(double r) {
    if (r <= 1.0) return 1.0;
    if (r >= 4.0 / 3.0) return 0.0;
    return 1.0 - smooth_step(3.0 * (r - 1.0));
}

}  // namespace

DyadicPartition::DyadicPartition(int kmax) : kmax_(kmax) {
    if (kmax < 0) throw config_error("dyadic: kmax must be >= 0");
}

DyadicPartition DyadicPartition::for_band(int band) {
    // Blocks -1..kmax cover modes up to 2^{kmax+1}.
    int kmax = 0;
    while ((1 << (kmax + 1)) < std::max(band, 1)) ++kmax;
    return DyadicPartition(kmax);
}

double DyadicPartition::chi_minus1(double r) const { return psi(r); }

double DyadicPartition::chi(double r) const { return psi(r / 2.0) - psi(r); }

double DyadicPartition::block_weight(int k, int mx, int my) const {
    if (k < -1 || k > kmax_) throw input_error("dyadic: block index out of range");
    const double r = std::sqrt(static_cast<double>(mx) * mx + static_cast<double>(my) * my);
    if (k == -1) return chi_minus1(r);
    return chi(r / static_cast<double>(1 << k));
}

SpectralField lp_block(const SpectralField& f, int k, const DyadicPartition& part) {
    const Grid& g = f.grid();
    SpectralField out(g);
    for (int mx = -g.n; mx <= g.n; ++mx)
        for (int my = -g.n; my <= g.n; ++my) {
            const cplx a = f.at(mx, my);
            if (a != cplx(0.0)) out.at(mx, my) = part.block_weight(k, mx, my) * a;
        }
    return out;
}

double besov_norm(const SpectralField& f, const BesovParams& params, const DyadicPartition& part, int N_quad) {
    if (params.p < 1.0 || params.q < 1.0) throw config_error("besov: p, q must be >= 1");
    if ((1 << (part.kmax() + 1)) < f.grid().n) throw config_error("besov: partition does not cover the band limit");
    const int Nq = N_quad > 0 ? N_quad : quadrature_points(f.grid(), params.p);

    std::vector<double> weighted;
    weighted.reserve(part.kmax() + 2);
    for (int k = -1; k <= part.kmax(); ++k) {
        const double w = k == -1 ? 1.0 : std::pow(2.0, params.alpha * k);
        weighted.push_back(w * lp_norm(lp_block(f, k, part), params.p, Nq));
    }
    if (std::isinf(params.q)) return *std::max_element(weighted.begin(), weighted.end());
    std::sort(weighted.begin(), weighted.end(), std::greater<double>());
    KahanSum s;
    for (double w : weighted) s.add(std::pow(w, params.q));
    return std::pow(s.value(), 1.0 / params.q);
}

std::tuple<SpectralField, SpectralField, SpectralField> bony_decompose(const SpectralField& f, const SpectralField& g,
                                                                       const DyadicPartition& part) {
    require_same_grid(f, g);
    if ((1 << (part.kmax() + 1)) < f.grid().n) throw config_error("bony: partition does not cover the band limit");
    const int K = part.kmax();

    std::vector<SpectralField> df, dg;
    df.reserve(K + 2);
    dg.reserve(K + 2);
    for (int k = -1; k <= K; ++k) {
        df.push_back(lp_block(f, k, part));
        dg.push_back(lp_block(g, k, part));
    }
    auto blk = [&](const std::vector<SpectralField>& v, int k) -> const SpectralField& { return v[k + 1]; };

    // Cumulative low-pass S_j = sum_{k <= j} delta_k, so each paraproduct
    // costs one product per block instead of a double sum.
    std::vector<SpectralField> Sf, Sg;
    Sf.reserve(K + 2);
    Sg.reserve(K + 2);
    for (int k = -1; k <= K; ++k) {
        Sf.push_back(k == -1 ? blk(df, k) : Sf.back() + blk(df, k));
        Sg.push_back(k == -1 ? blk(dg, k) : Sg.back() + blk(dg, k));
    }

    SpectralField para_fg(f.grid()), resonant(f.grid()), para_gf(f.grid());
    for (int k = -1; k <= K; ++k) {
        if (k - 2 >= -1) {
            para_fg += dealiased_product(Sf[k - 2 + 1], blk(dg, k));  // sum_{j < k-1} dj f dk g
            para_gf += dealiased_product(Sg[k - 2 + 1], blk(df, k));
        }
        for (int j = std::max(-1, k - 1); j <= std::min(K, k + 1); ++j)
            resonant += dealiased_product(blk(df, j), blk(dg, k));
    }
    return {std::move(para_fg), std::move(resonant), std::move(para_gf)};
}

}  // namespace wcgl
