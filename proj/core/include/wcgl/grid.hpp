#pragma once

#include <vector>

#include "wcgl/common.hpp"

namespace wcgl {

/// Physical parameters of the equation du = (i+mu) Lap u - nu |u|^2 u + lambda u + xi.
struct PhysParams {
    double mu = 1.0;
    cplx nu = 1.0;
    cplx lambda = 0.0;

    void validate() const {
        if (!(mu > 0.0)) throw config_error("mu must be positive");
        if (!(nu.real() > 0.0) && nu != cplx(0.0)) throw config_error("Re(nu) must be positive (or nu = 0 for linear runs)");
    }
};

/// Spectral cutoff ball |m| <= n plus a collocation grid of N points per
/// dimension. N >= 4n+2 and even, so truncated cubic products are exact.
struct Grid {
    int n = 0;
    int N = 0;

    Grid() = default;
    Grid(int n_, int N_) : n(n_), N(N_) {
        if (n < 0) throw config_error("grid: cutoff must be nonnegative");
        if (N < 4 * n + 2 || N % 2 != 0) throw config_error("grid: need even N >= 4n+2 for exact cubic dealiasing");
    }
    static Grid standard(int n_) { return Grid(n_, 4 * n_ + 4); }

    int side() const { return 2 * n + 1; }
    int modes() const { return side() * side(); }
    int points() const { return N * N; }

    int index(int mx, int my) const { return (mx + n) * side() + (my + n); }
    bool in_ball(int mx, int my) const { return mx * mx + my * my <= n * n; }

    bool operator==(const Grid& o) const { return n == o.n && N == o.N; }
};

/// Band-limited field on the unit torus, stored as coefficients of
/// e_m(x) = exp(2 pi i m.x) over the square [-n,n]^2; entries outside the
/// Euclidean ball |m| <= n are structurally zero.
class SpectralField {
  public:
    SpectralField() = default;
    explicit SpectralField(const Grid& g) : grid_(g), a_(g.modes(), cplx(0.0)) {}

    const Grid& grid() const { return grid_; }

    cplx& at(int mx, int my) { return a_[grid_.index(mx, my)]; }
    cplx at(int mx, int my) const { return a_[grid_.index(mx, my)]; }

    const std::vector<cplx>& coeffs() const { return a_; }
    std::vector<cplx>& coeffs() { return a_; }

    SpectralField& operator+=(const SpectralField& o);
    SpectralField& operator-=(const SpectralField& o);
    SpectralField& operator*=(cplx s);

    friend SpectralField operator+(SpectralField a, const SpectralField& b) { return a += b; }
    friend SpectralField operator-(SpectralField a, const SpectralField& b) { return a -= b; }
    friend SpectralField operator*(cplx s, SpectralField a) { return a *= s; }

    /// Coefficient-wise conjugate field: (conj f)_m = conj(f_{-m}).
    SpectralField conjugated() const;

    /// sqrt(sum_m |f_m|^2) = L^2(T) norm by Parseval.
    double l2_norm() const;

    bool all_finite() const;

    /// <f, g>_1 = int f g (no conjugation) = sum_m f_m g_{-m}.
    friend cplx pairing(const SpectralField& f, const SpectralField& g);

  private:
    Grid grid_;
    std::vector<cplx> a_;
};

void require_same_grid(const SpectralField& a, const SpectralField& b);

}  // namespace wcgl
