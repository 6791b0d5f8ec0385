#pragma once

#include <optional>

#include "wcgl/dyadic.hpp"
#include "wcgl/ou.hpp"

namespace wcgl {

// Time integration of the renormalized equation: the shifted splitting
// u = Z + Y with Y driven by the mild form, and the direct Galerkin SDE for
// u itself. Both are exponential Euler (ETD1): exact diagonal linear flow,
// first-order quadrature of the nonlinearity frozen at the left endpoint.

enum class Scheme { split_exp_euler, galerkin_sde };

struct SolverConfig {
    PhysParams params;
    Grid grid;
    int cutoff = 0;  // Pi_n radius; defaults to grid.n
    double h = 1e-3;
    double T = 1.0;
    Scheme scheme = Scheme::split_exp_euler;
    OuInit ou_init_kind = OuInit::zero;
    std::uint64_t seed = 0;
    int snapshot_every = 0;  // steps; 0 = never
    double besov_alpha = -0.5;
    std::vector<double> lp_exponents = {2.0, 4.0};

    int n() const { return cutoff > 0 ? cutoff : grid.n; }
    void validate() const {
        params.validate();
        if (!(h > 0.0)) throw config_error("solver: h must be positive");
        if (!(T >= h)) throw config_error("solver: T must be >= h");
        for (double p : lp_exponents)
            if (p < 2.0) throw config_error("solver: energy diagnostics need p >= 2");
    }
};

struct SplitState {
    double t = 0.0;
    SpectralField Y;
    OUState ou;
    RenormConstant c;
    bool blown_up = false;
    double blowup_time = 0.0;

    SpectralField u() const { return Y + ou.Z; }
};

/// Full driving nonlinearity, projection-free:
/// (1+lambda)(Z+Y) - nu (|Y|^2 Y + 2 Z |Y|^2 + conj(Z) Y^2 + 2 z11 Y
///                       + z20 conj(Y) + z21), all products dealiased.
SpectralField nonlinearity_psi(const SpectralField& Y, const WickBundle& zb, const PhysParams& params);

/// One ETD1 step of the shifted equation; the OU field advances by the exact
/// transition, or by the em rule when `shared` carries an increment.
SplitState step_shifted(const SplitState& state, const SolverConfig& cfg, std::uint64_t replica, std::uint64_t step,
                        const NoiseIncrement* shared = nullptr);

/// One ETD1 step of the direct Galerkin SDE
/// du = {(i+mu) Lap u - nu Pi_n[H21(u, c)] + lambda u} dt + sum a_m e_m dW_m.
SpectralField step_galerkin_sde(const SpectralField& u, const RenormConstant& c, double h, const NoiseIncrement& dW,
                                const PhysParams& params, int n);

/// - nu Pi_n [ H21(u, c) ] + lambda u folded linear part excluded; helper
/// shared by the direct scheme and the variational flow.
SpectralField galerkin_drift(const SpectralField& u, const RenormConstant& c, const PhysParams& params, int n);

struct TrajectorySample {
    double t = 0.0;
    SpectralField Y;
    WickBundle zb;
};

/// Pointwise residual of the L^p balance over a stored trajectory:
/// residual(t_k) = lhs(t_k) - trapezoid rhs up to t_k, with
/// lhs = (1/p)(||Y_t||_p^p - ||Y_t0||_p^p) and
/// rhs = Re{ -(i+mu)<grad Y, grad(conj(Y)|Y|^{p-2})> - ||Y||_p^p
///           + <Psi(Y, Zb), conj(Y)|Y|^{p-2}> }.
std::vector<double> lp_energy_residual(const std::vector<TrajectorySample>& traj, double p, const PhysParams& params);

/// Integrands of the energy balance at one snapshot, exact quadrature.
struct EnergyTerms {
    double gradient_term = 0.0;   // Re[-(i+mu)<grad Y, grad(conj(Y)|Y|^{p-2})>]
    double lp_pow_p = 0.0;        // ||Y||_p^p
    double potential_term = 0.0;  // ||Y||_{p+2}^{p+2}
    double grad_weighted = 0.0;   // <1, |grad Y|^2 |Y|^{p-2}>
    double psi_term = 0.0;        // Re <Psi, conj(Y)|Y|^{p-2}>
};
EnergyTerms energy_terms(const SpectralField& Y, const WickBundle& zb, const PhysParams& params, double p);

/// max over sample times so far of
/// max{ ||Z||_{C^-a}, t^a ||z20||_{C^-a}, t^a ||z11||_{C^-a}, t^a ||z21||_{C^-a} }.
class ZbarMonitor {
  public:
    ZbarMonitor(double alpha, const DyadicPartition& part) : alpha_(alpha), part_(part) {}
    double observe(double t, const WickBundle& zb);  // returns the running max
    double running_max() const { return running_; }

  private:
    double alpha_;
    DyadicPartition part_;
    double running_ = 0.0;
};

struct ComingDownRow {
    double R = 0.0;
    double median_norm = 0.0;
    double mean_norm_p = 0.0;  // p-th moment mean
    int blowups = 0;
};

/// Runs the split solver from u0 = R e_0 for each R with independent noise;
/// reports the distribution of ||u(t0)||_{B^{-alpha}_{inf,inf}}. Uses a
/// deterministic warm-up step schedule so huge R stays stable.
std::vector<ComingDownRow> coming_down_experiment(const std::vector<double>& R_values, double t0, int replicas,
                                                  const SolverConfig& cfg, double moment_p = 2.0,
                                                  unsigned workers = 1);

}  // namespace wcgl
