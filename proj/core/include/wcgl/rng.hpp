#pragma once

#include <cstdint>

#include "wcgl/common.hpp"

namespace wcgl {

// Counter-based random numbers. Every draw is a pure function of
// (master seed, stream, replica, step, mode, slot), so trajectories are
// reproducible bit-for-bit regardless of scheduling or worker count, and
// modes shared between two cutoff ladders see identical increments.
//
// Gaussian convention: Box-Muller, cosine component first. Polar/Marsaglia
// rejection is not used anywhere (it would consume a data-dependent number
// of uniforms and break the counter contract).

namespace rng_detail {

inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::uint64_t combine(std::uint64_t h, std::uint64_t w) { return mix64(h ^ (w + 0x9e3779b97f4a7c15ull)); }

}  // namespace rng_detail

/// Stream selectors; fixed numbering is part of the reproducibility contract.
enum class NoiseStream : std::uint64_t {
    ou = 1,          // per-mode Brownian increments driving Z and u
    ou_init = 2,     // stationary initialization draws
    chaos = 3,       // cell masses M(E_i) in the chaos module
    field_init = 4,  // random test/initial fields
    scratch = 5,     // anything test-local
};

/// One u64 keyed by the full counter block.
inline std::uint64_t keyed_u64(std::uint64_t seed, NoiseStream stream, std::uint64_t replica, std::uint64_t step,
                               std::int64_t mx, std::int64_t my, std::uint64_t slot) {
    using namespace rng_detail;
    std::uint64_t h = mix64(seed);
    h = combine(h, static_cast<std::uint64_t>(stream));
    h = combine(h, replica);
    h = combine(h, step);
    h = combine(h, static_cast<std::uint64_t>(mx) * 0x9ddfea08eb382d69ull + static_cast<std::uint64_t>(my));
    h = combine(h, slot);
    return h;
}

/// Uniform in (0, 1]; never returns 0 so log() is safe.
inline double u64_to_unit(std::uint64_t x) { return (static_cast<double>(x >> 11) + 1.0) * 0x1.0p-53; }

/// Standard normal pair by Box-Muller (cos first).
inline void box_muller(std::uint64_t u_a, std::uint64_t u_b, double& g1, double& g2) {
    const double u1 = u64_to_unit(u_a);
    const double u2 = u64_to_unit(u_b);
    const double r = std::sqrt(-2.0 * std::log(u1));
    g1 = r * std::cos(two_pi * u2);
    g2 = r * std::sin(two_pi * u2);
}

/// Isotropic complex Gaussian with E|G|^2 = var, keyed by the counter block.
inline cplx keyed_cgauss(std::uint64_t seed, NoiseStream stream, std::uint64_t replica, std::uint64_t step,
                         std::int64_t mx, std::int64_t my, double var) {
    double g1, g2;
    box_muller(keyed_u64(seed, stream, replica, step, mx, my, 0), keyed_u64(seed, stream, replica, step, mx, my, 1),
               g1, g2);
    return std::sqrt(0.5 * var) * cplx(g1, g2);
}

/// Sequential stream view over the same counter space, for Monte Carlo code
/// that just needs "the next draw" within one (seed, stream, replica) lane.
class CounterRng {
  public:
    CounterRng(std::uint64_t seed, NoiseStream stream, std::uint64_t replica = 0)
        : seed_(seed), stream_(stream), replica_(replica) {}

    std::uint64_t next_u64() { return keyed_u64(seed_, stream_, replica_, 0, 0, 0, ctr_++); }

    double uniform() { return u64_to_unit(next_u64()); }

    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double g1, g2;
        box_muller(next_u64(), next_u64(), g1, g2);
        spare_ = g2;
        have_spare_ = true;
        return g1;
    }

    /// Isotropic complex Gaussian with E|G|^2 = var, E[G^2] = 0.
    cplx cgauss(double var = 1.0) {
        double g1, g2;
        box_muller(next_u64(), next_u64(), g1, g2);
        return std::sqrt(0.5 * var) * cplx(g1, g2);
    }

    /// Independent child lane (e.g. one per Monte Carlo replica).
    CounterRng split(std::uint64_t replica) const { return CounterRng(seed_, stream_, replica); }

  private:
    std::uint64_t seed_;
    NoiseStream stream_;
    std::uint64_t replica_;
    std::uint64_t ctr_ = 0;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace wcgl
