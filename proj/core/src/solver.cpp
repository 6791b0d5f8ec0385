#include "wcgl/solver.hpp"

#include <algorithm>
#include <cmath>

namespace wcgl {

namespace {

// The six-product cubic group
//   |Y|^2 Y + 2 Z |Y|^2 + conj(Z) Y^2 + 2 z11 Y + z20 conj(Y) + z21,
// evaluated in one pass over the padded grid; every term is a product of at
// most three band-limited factors, so truncation back to the band is exact.
SpectralField cubic_group(const SpectralField& Y, const WickBundle& zb) {
    require_same_grid(Y, zb.z10);
    const std::vector<cplx> vY = to_grid(Y);
    const std::vector<cplx> vZ = to_grid(zb.z10);
    const std::vector<cplx> v11 = to_grid(zb.z11);
    const std::vector<cplx> v20 = to_grid(zb.z20);
    std::vector<cplx> out(vY.size());
    for (std::size_t i = 0; i < vY.size(); ++i) {
        const cplx y = vY[i];
        const cplx z = vZ[i];
        const double y2 = std::norm(y);
        out[i] = y2 * y + 2.0 * z * y2 + std::conj(z) * y * y + 2.0 * v11[i] * y + v20[i] * std::conj(y);
    }
    return from_grid(out, Y.grid()) + zb.z21;
}

}  // namespace

SpectralField nonlinearity_psi(const SpectralField& Y, const WickBundle& zb, const PhysParams& params) {
    SpectralField psi = cubic_group(Y, zb);
    psi *= -params.nu;
    psi += (1.0 + params.lambda) * (Y + zb.z10);
    return psi;
}

SplitState step_shifted(const SplitState& state, const SolverConfig& cfg, std::uint64_t replica, std::uint64_t step,
                        const NoiseIncrement* shared) {
    if (state.blown_up) return state;
    const double h = shared ? shared->h : cfg.h;
    const PhysParams& pp = cfg.params;
    const Grid& g = state.Y.grid();

    // Drift frozen at the left endpoint. Pi_n acts on the cubic group only;
    // the (1+lambda)(Z+Y) part belongs to the unprojected linear drift of
    // the Galerkin system.
    const WickBundle zb = wick_bundle(state.ou.Z, state.c);
    SpectralField drift = project_pi(cubic_group(state.Y, zb), cfg.n());
    drift *= -pp.nu;
    drift += (1.0 + pp.lambda) * (state.Y + state.ou.Z);

    SplitState out;
    out.t = state.t + h;
    out.c = state.c;
    out.Y = SpectralField(g);
    for (int mx = -g.n; mx <= g.n; ++mx)
        for (int my = -g.n; my <= g.n; ++my) {
            if (!g.in_ball(mx, my)) continue;
            const cplx lam = linear_symbol(LinearSymbol::lambda_A, pp.mu, mx, my);
            out.Y.at(mx, my) = std::exp(-h * lam) * state.Y.at(mx, my) + h * phi1(-h * lam) * drift.at(mx, my);
        }
    out.ou = shared ? ou_em_step(state.ou, *shared, cfg.n(), pp.mu)
                    : ou_exact_step(state.ou, h, cfg.n(), pp.mu, cfg.seed, replica, step);

    if (!out.Y.all_finite() || !out.ou.Z.all_finite()) {
        out.blown_up = true;
        out.blowup_time = out.t;
    }
    return out;
}

SpectralField galerkin_drift(const SpectralField& u, const RenormConstant& c, const PhysParams& params, int n) {
    std::vector<cplx> v = to_grid(u);
    for (auto& x : v) x = (std::norm(x) - 2.0 * c.value) * x;  // H21(u, c)
    SpectralField drift = project_pi(from_grid(v, u.grid()), n);
    drift *= -params.nu;
    return drift;
}

SpectralField step_galerkin_sde(const SpectralField& u, const RenormConstant& c, double h, const NoiseIncrement& dW,
                                const PhysParams& params, int n) {
    require_same_grid(u, dW.dW);
    const Grid& g = u.grid();
    const SpectralField drift = galerkin_drift(u, c, params, n);
    SpectralField out(g);
    for (int mx = -g.n; mx <= g.n; ++mx)
        for (int my = -g.n; my <= g.n; ++my) {
            if (!g.in_ball(mx, my)) continue;
            const cplx lam = linear_symbol(LinearSymbol::lambda_diff, params.mu, mx, my) - params.lambda;
            const cplx decay = std::exp(-h * lam);
            cplx x = decay * u.at(mx, my) + h * phi1(-h * lam) * drift.at(mx, my);
            const double a = cutoff_symbol(n, mx, my);
            if (a != 0.0) x += a * decay * dW.dW.at(mx, my);
            out.at(mx, my) = x;
        }
    return out;
}

EnergyTerms energy_terms(const SpectralField& Y, const WickBundle& zb, const PhysParams& params, double p) {
    const int pi_ = static_cast<int>(std::lround(p));
    if (std::abs(p - pi_) > 1e-12 || pi_ < 2 || pi_ % 2 != 0)
        throw config_error("energy_terms: p must be an even integer >= 2 for exact quadrature");
    const Grid& g = Y.grid();
    int Nq = std::max(g.N, (pi_ + 2) * g.n + 2);
    if (Nq % 2 != 0) ++Nq;

    const std::vector<cplx> vY = to_grid(Y, Nq);
    auto [gx, gy] = gradient(Y);
    const std::vector<cplx> vGx = to_grid(gx, Nq);
    const std::vector<cplx> vGy = to_grid(gy, Nq);
    const SpectralField psi = nonlinearity_psi(Y, zb, params);
    const std::vector<cplx> vPsi = to_grid(psi, Nq);

    const std::size_t P = vY.size();
    const double inv = 1.0 / static_cast<double>(P);
    const cplx imu(params.mu, 1.0);  // i + mu

    KahanSum grad_term, lp_p, pot, gradw, psi_term;
    for (std::size_t i = 0; i < P; ++i) {
        const cplx y = vY[i];
        const double y2 = std::norm(y);
        const double yp2 = pi_ == 2 ? 1.0 : std::pow(y2, (pi_ - 2) / 2);  // |Y|^{p-2}
        const cplx dx = vGx[i], dy = vGy[i];
        const double grad2 = std::norm(dx) + std::norm(dy);

        // grad(conj(Y) |Y|^{p-2}) = (p/2)|Y|^{p-2} grad conj(Y)
        //                           + ((p-2)/2)|Y|^{p-4} conj(Y)^2 grad Y
        cplx ggx = 0.5 * pi_ * yp2 * std::conj(dx);
        cplx ggy = 0.5 * pi_ * yp2 * std::conj(dy);
        if (pi_ >= 4) {
            const double yp4 = pi_ == 4 ? 1.0 : std::pow(y2, (pi_ - 4) / 2);
            const cplx cyy = std::conj(y) * std::conj(y) * yp4;
            ggx += 0.5 * (pi_ - 2) * cyy * dx;
            ggy += 0.5 * (pi_ - 2) * cyy * dy;
        }

        grad_term.add((-imu * (dx * ggx + dy * ggy)).real());
        lp_p.add(y2 * yp2);
        pot.add(y2 * y2 * yp2);
        gradw.add(grad2 * yp2);
        psi_term.add((vPsi[i] * std::conj(y) * yp2).real());
    }

    EnergyTerms out;
    out.gradient_term = grad_term.value() * inv;
    out.lp_pow_p = lp_p.value() * inv;
    out.potential_term = pot.value() * inv;
    out.grad_weighted = gradw.value() * inv;
    out.psi_term = psi_term.value() * inv;
    return out;
}

std::vector<double> lp_energy_residual(const std::vector<TrajectorySample>& traj, double p, const PhysParams& params) {
    if (traj.empty()) throw input_error("lp_energy_residual: empty trajectory");
    std::vector<double> integrand(traj.size()), lp_p(traj.size());
    for (std::size_t i = 0; i < traj.size(); ++i) {
        const EnergyTerms e = energy_terms(traj[i].Y, traj[i].zb, params, p);
        integrand[i] = e.gradient_term - e.lp_pow_p + e.psi_term;
        lp_p[i] = e.lp_pow_p;
    }
    std::vector<double> residual(traj.size());
    double rhs = 0.0;
    residual[0] = 0.0;
    for (std::size_t i = 1; i < traj.size(); ++i) {
        const double dt = traj[i].t - traj[i - 1].t;
        rhs += 0.5 * dt * (integrand[i] + integrand[i - 1]);
        residual[i] = (lp_p[i] - lp_p[0]) / p - rhs;
    }
    return residual;
}

double ZbarMonitor::observe(double t, const WickBundle& zb) {
    const BesovParams bp{-alpha_, std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
    const double ta = std::pow(t, alpha_);
    double v = besov_norm(zb.z10, bp, part_);
    v = std::max(v, ta * besov_norm(zb.z20, bp, part_));
    v = std::max(v, ta * besov_norm(zb.z11, bp, part_));
    v = std::max(v, ta * besov_norm(zb.z21, bp, part_));
    running_ = std::max(running_, v);
    return running_;
}

std::vector<ComingDownRow> coming_down_experiment(const std::vector<double>& R_values, double t0, int replicas,
                                                  const SolverConfig& cfg, double moment_p, unsigned workers) {
    cfg.validate();
    if (!(t0 >= 10.0 * cfg.h)) throw config_error("coming_down: t0 must be >= 10 h");
    const DyadicPartition part = DyadicPartition::for_band(cfg.grid.n);
    const BesovParams bp{cfg.besov_alpha, std::numeric_limits<double>::infinity(),
                         std::numeric_limits<double>::infinity()};

    struct Cell {
        double norm = 0.0;
        bool blown = false;
    };
    std::vector<Cell> cells(R_values.size() * replicas);

    parallel_for(cells.size(), workers, [&](std::size_t idx) {
        const std::size_t ri = idx / replicas;
        const std::uint64_t rep = idx % replicas;
        const double R = R_values[ri];
        // Independent noise per (R, replica) lane.
        const std::uint64_t lane = static_cast<std::uint64_t>(ri) * 1000003ull + rep;

        SplitState st;
        st.t = 0.0;
        st.Y = SpectralField(cfg.grid);
        st.Y.at(0, 0) = R;
        st.ou = ou_init(cfg.grid, cfg.n(), cfg.params.mu, cfg.ou_init_kind, cfg.seed, lane);
        st.c = renorm_constant(cfg.n(), cfg.params.mu);

        // Deterministic warm-up: h_j = min(h, max(theta t, h0)) resolves the
        // initial collapse from large R without error control.
        const double h0 = 0.4 / (1.0 + std::abs(cfg.params.nu) * R * R);
        const double theta = 0.1;
        SolverConfig local = cfg;
        std::uint64_t step = 0;
        while (st.t < t0 && !st.blown_up) {
            double hs = std::min(cfg.h, std::max(theta * st.t, h0));
            local.h = std::min(hs, t0 - st.t);
            st = step_shifted(st, local, lane, step++);
        }
        if (st.blown_up) {
            cells[idx].blown = true;
        } else {
            cells[idx].norm = besov_norm(st.u(), bp, part);
        }
    });

    std::vector<ComingDownRow> rows;
    for (std::size_t ri = 0; ri < R_values.size(); ++ri) {
        ComingDownRow row;
        row.R = R_values[ri];
        std::vector<double> norms;
        for (int r = 0; r < replicas; ++r) {
            const Cell& c = cells[ri * replicas + r];
            if (c.blown)
                ++row.blowups;
            else
                norms.push_back(c.norm);
        }
        if (!norms.empty()) {
            std::sort(norms.begin(), norms.end());
            row.median_norm = norms[norms.size() / 2];
            double s = 0.0;
            for (double v : norms) s += std::pow(v, moment_p);
            row.mean_norm_p = s / norms.size();
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace wcgl
