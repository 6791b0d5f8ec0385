#pragma once

#include "wcgl/cutoff.hpp"
#include "wcgl/rng.hpp"
#include "wcgl/semigroup.hpp"

namespace wcgl {

// The Galerkin Ornstein-Uhlenbeck field Z(0,t) driven per mode by
// dZ_m = -lambda_A(m) Z_m dt + a_m dW_m, its Wick powers via complex Hermite
// polynomials, and the renormalization constant c_n.

/// c_n = sum_{|m|<=n} a_m^2 / (2 (4 pi^2 mu |m|^2 + 1)); equals the
/// stationary spatial variance E|Z(x)|^2 by Ito isometry and Parseval.
struct RenormConstant {
    int n = 0;
    double mu = 1.0;
    double value = 0.0;
};

RenormConstant renorm_constant(int n, double mu);

/// Per-mode complex Brownian increments over a step h: E|dW_m|^2 = h,
/// E[dW_m^2] = 0, independent across modes. Keyed by (seed, replica, step,
/// mode) so ladders sharing modes share increments.
struct NoiseIncrement {
    double h = 0.0;
    SpectralField dW;
};

NoiseIncrement draw_increment(const Grid& g, double h, std::uint64_t seed, std::uint64_t replica, std::uint64_t step);

struct OUState {
    double t = 0.0;
    SpectralField Z;
};

enum class OuInit { zero, stationary };

/// Zero state or one draw from the exact per-mode stationary Gaussian.
/// Stationary draws are keyed by mode only, so cutoff ladders couple.
OUState ou_init(const Grid& g, int n, double mu, OuInit kind, std::uint64_t seed, std::uint64_t replica);

/// Exact transition: Z_m <- e^{-lambda_m h} Z_m + a_m G_m with
/// E|G_m|^2 = (1 - e^{-2 Re lambda_m h}) / (2 Re lambda_m). The Gaussian is
/// keyed by the step counter floor(t/h)-independent argument `step`.
OUState ou_exact_step(const OUState& state, double h, int n, double mu, std::uint64_t seed, std::uint64_t replica,
                      std::uint64_t step);

/// Exponential Euler with an explicit shared increment:
/// Z_m <- e^{-lambda_m h} Z_m + a_m phi1(-lambda_m h) dW_m.
OUState ou_em_step(const OUState& state, const NoiseIncrement& dW, int n, double mu);

/// The quadruple (Z, Z^2, |Z|^2 - c, |Z|^2 Z - 2 c Z), every product
/// evaluated pointwise on the padded grid and truncated back to the band.
struct WickBundle {
    SpectralField z10, z20, z11, z21;
    double c = 0.0;
};

WickBundle wick_bundle(const SpectralField& Z, const RenormConstant& c);

/// Z(s,t) = Z_t - e^{dt A} Z_s, Wick-powered with the same constant.
WickBundle nonstationary_shift(const SpectralField& Z_s, const SpectralField& Z_t, double dt,
                               const RenormConstant& c);

}  // namespace wcgl
