#include "wcgl/bel.hpp"

#include <cmath>

namespace wcgl {

VariationalState variational_step(const VariationalState& v, const SpectralField& u, const RenormConstant& c,
                                  double h, const PhysParams& params, int n) {
    require_same_grid(v.J, u);
    const Grid& g = u.grid();

    // dH21(u,c).zeta = 2(|u|^2 - c) zeta + u^2 conj(zeta), frozen at the left
    // endpoint; same exponential linear flow as the primal scheme.
    const std::vector<cplx> vu = to_grid(u);
    std::vector<cplx> vj = to_grid(v.J);
    for (std::size_t i = 0; i < vj.size(); ++i) {
        const cplx z = vu[i];
        vj[i] = 2.0 * (std::norm(z) - c.value) * vj[i] + z * z * std::conj(vj[i]);
    }
    SpectralField drift = project_pi(from_grid(vj, g), n);
    drift *= -params.nu;

    VariationalState out;
    out.J = SpectralField(g);
    for (int mx = -g.n; mx <= g.n; ++mx)
        for (int my = -g.n; my <= g.n; ++my) {
            if (!g.in_ball(mx, my)) continue;
            const cplx lam = linear_symbol(LinearSymbol::lambda_diff, params.mu, mx, my) - params.lambda;
            out.J.at(mx, my) = std::exp(-h * lam) * v.J.at(mx, my) + h * phi1(-h * lam) * drift.at(mx, my);
        }
    return out;
}

Observable observable_re_mode0() {
    Observable o;
    o.value = [](const SpectralField& u) { return u.at(0, 0).real(); };
    o.derivative = [](const SpectralField&, const SpectralField& zeta) { return zeta.at(0, 0).real(); };
    return o;
}

Observable observable_tanh_re_mode0() {
    Observable o;
    o.value = [](const SpectralField& u) { return std::tanh(u.at(0, 0).real()); };
    o.derivative = [](const SpectralField& u, const SpectralField& zeta) {
        const double th = std::tanh(u.at(0, 0).real());
        return (1.0 - th * th) * zeta.at(0, 0).real();
    };
    return o;
}

namespace {

// <x, y>_R = sum_m Re(x_m) Re(y_m) + Im(x_m) Im(y_m) over the mode vector.
double real_pairing(const SpectralField& x, const SpectralField& y) {
    double s = 0.0;
    const auto& a = x.coeffs();
    const auto& b = y.coeffs();
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
    return s;
}

}  // namespace

BELReport bel_estimator(const Observable& phi, const SpectralField& v0, const SpectralField& h_dir,
                        const BELConfig& cfg, std::uint64_t replicas, unsigned workers) {
    cfg.params.validate();
    const int steps = static_cast<int>(std::llround(cfg.t / cfg.h));
    if (steps < 1 || std::abs(steps * cfg.h - cfg.t) > 1e-9) throw config_error("bel: t must be a multiple of h");
    const RenormConstant c = renorm_constant(cfg.n(), cfg.params.mu);
    const DyadicPartition part = DyadicPartition::for_band(cfg.grid.n);

    struct Cell {
        double lhs = 0.0, rhs = 0.0;
        bool discarded = false;
    };
    std::vector<Cell> cells(replicas);

    parallel_for(replicas, workers, [&](std::size_t rep) {
        SpectralField u = project_pi(v0, cfg.n());
        VariationalState var{project_pi(h_dir, cfg.n())};
        OUState Z{0.0, SpectralField(cfg.grid)};
        ZbarMonitor monitor(cfg.chi_alpha, part);
        double martingale = 0.0;
        bool past_tau2 = false;

        for (int s = 0; s < steps; ++s) {
            const NoiseIncrement dW = draw_increment(cfg.grid, cfg.h, cfg.seed, rep, s);
            if (!past_tau2) martingale += 2.0 * real_pairing(var.J, dW.dW);
            const SpectralField u_next = step_galerkin_sde(u, c, cfg.h, dW, cfg.params, cfg.n());
            var = variational_step(var, u, c, cfg.h, cfg.params, cfg.n());
            Z = ou_em_step(Z, dW, cfg.n(), cfg.params.mu);
            u = u_next;
            const double zn = monitor.observe(Z.t, wick_bundle(Z.Z, c));
            if (zn >= cfg.tau2_threshold) past_tau2 = true;
        }

        if (monitor.running_max() >= cfg.chi_threshold) {
            cells[rep].discarded = true;
            return;
        }
        cells[rep].lhs = phi.derivative(u, cfg.t * var.J);
        cells[rep].rhs = phi.value(u) * martingale;
    });

    // Fixed replica order, compensated accumulation.
    KahanSum sl, sr, sl2, sr2, sd2, sd;
    std::uint64_t kept = 0, discarded = 0;
    for (const Cell& c2 : cells) {
        if (c2.discarded) {
            ++discarded;
            continue;
        }
        ++kept;
        sl.add(c2.lhs);
        sr.add(c2.rhs);
        sl2.add(c2.lhs * c2.lhs);
        sr2.add(c2.rhs * c2.rhs);
        sd.add(c2.lhs - c2.rhs);
        sd2.add((c2.lhs - c2.rhs) * (c2.lhs - c2.rhs));
    }
    BELReport rep;
    rep.replicas = kept;
    rep.discarded_fraction = static_cast<double>(discarded) / static_cast<double>(replicas);
    if (kept > 1) {
        const double k = static_cast<double>(kept);
        rep.lhs = sl.value() / k;
        rep.rhs = sr.value() / k;
        auto stderr_of = [&](const KahanSum& s1, const KahanSum& s2, double mean) {
            const double var = std::max(0.0, s2.value() / k - mean * mean);
            return std::sqrt(var / k);
        };
        rep.lhs_stderr = stderr_of(sl, sl2, rep.lhs);
        rep.rhs_stderr = stderr_of(sr, sr2, rep.rhs);
        rep.diff_stderr = stderr_of(sd, sd2, sd.value() / k);
    }
    rep.reliable = rep.discarded_fraction <= cfg.max_discard;
    return rep;
}

std::vector<GradientBoundRow> local_gradient_bound_check(const SpectralField& v0, const SpectralField& h_dir,
                                                         const BELConfig& cfg, const std::vector<double>& h_scales,
                                                         const std::vector<double>& R_values, double gamma,
                                                         double alpha0, double alpha1, double kappa) {
    const RenormConstant c = renorm_constant(cfg.n(), cfg.params.mu);
    const DyadicPartition part = DyadicPartition::for_band(cfg.grid.n);
    const BesovParams bp_plus{alpha1, std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()};
    const BesovParams bp_minus{-alpha0, std::numeric_limits<double>::infinity(),
                               std::numeric_limits<double>::infinity()};

    std::vector<GradientBoundRow> rows;
    for (double R : R_values) {
        const double t_star = std::pow(1.0 + R, -kappa);
        const int steps = std::max(4, static_cast<int>(std::ceil(t_star / cfg.h)));
        const double h = t_star / steps;
        for (double scale : h_scales) {
            SpectralField u = project_pi(R * v0, cfg.n());
            VariationalState var{project_pi(scale * h_dir, cfg.n())};
            OUState Z{0.0, SpectralField(cfg.grid)};
            const double hnorm = besov_norm(project_pi(scale * h_dir, cfg.n()), bp_minus, part);
            double sup_stat = 0.0;
            for (int s = 0; s < steps; ++s) {
                const NoiseIncrement dW = draw_increment(cfg.grid, h, cfg.seed, 0, s);
                const SpectralField u_next = step_galerkin_sde(u, c, h, dW, cfg.params, cfg.n());
                var = variational_step(var, u, c, h, cfg.params, cfg.n());
                u = u_next;
                const double t = (s + 1) * h;
                sup_stat = std::max(sup_stat, std::pow(t, gamma) * besov_norm(var.J, bp_plus, part));
            }
            rows.push_back(GradientBoundRow{scale, R, sup_stat / hnorm});
        }
    }
    return rows;
}

}  // namespace wcgl
