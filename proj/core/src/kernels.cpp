#include "wcgl/kernels.hpp"

#include <cmath>

namespace wcgl {

namespace {

// 16-point Gauss-Legendre nodes/weights on [-1,1], generated once by Newton
// iteration on the Legendre recurrence.
struct GL16 {
    std::array<double, 16> x{}, w{};
    GL16() {
        const int n = 16;
        for (int i = 0; i < n / 2; ++i) {
            double t = std::cos(pi * (i + 0.75) / (n + 0.5));
            double p0, p1, dp;
            for (int it = 0; it < 100; ++it) {
                p0 = 1.0;
                p1 = t;
                for (int k = 2; k <= n; ++k) {
                    const double p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n * (t * p1 - p0) / (t * t - 1.0);
                const double dt = p1 / dp;
                t -= dt;
                if (std::abs(dt) < 1e-16) break;
            }
            x[i] = -t;
            x[n - 1 - i] = t;
            w[i] = w[n - 1 - i] = 2.0 / ((1.0 - t * t) * dp * dp);
        }
    }
};

const GL16& gl16() {
    static const GL16 g;
    return g;
}

// sum_{y in Z} exp(-(x - y)^2 * w), truncated where the real part of the
// exponent exceeds ~37 log10 units.
cplx theta_sum(double x, cplx w) {
    const double rate = w.real();  // decay of |exp|
    const int R = rate > 0.0 ? static_cast<int>(std::ceil(std::sqrt(38.0 / rate))) + 1 : 1;
    cplx s = 0.0;
    for (int y = -R; y <= R; ++y) {
        const double d = x - y;
        s += std::exp(-d * d * w);
    }
    return s;
}

}  // namespace

double torus_distance(double x1, double x2) {
    auto frac = [](double x) {
        const double f = x - std::round(x);
        return f;
    };
    const double a = frac(x1), b = frac(x2);
    return std::sqrt(a * a + b * b);
}

cplx kernel_KM(double t, double x1, double x2, double mu) {
    if (!(t > 0.0)) throw input_error("kernel_KM: t must be positive");
    const cplx denom = 4.0 * cplx(mu, 1.0) * t;  // 4 (i+mu) t
    const cplx w = 1.0 / denom;
    const cplx pref = std::exp(-t) / (pi * denom);
    return pref * theta_sum(x1, w) * theta_sum(x2, w);
}

cplx script_K(double delta, double x1, double x2, double mu, int panels_per_efold) {
    if (!(mu > 0.0)) throw config_error("script_K: mu must be positive");
    const double dmin = torus_distance(x1, x2);
    if (delta == 0.0 && dmin < 1e-12) throw input_error("script_K: logarithmically singular at x = 0, delta = 0");

    const double s_hi = 42.0;  // e^{-s} below 1e-18 past here
    double s_lo;
    if (std::abs(delta) > 0.0) {
        s_lo = std::abs(delta);
        if (s_lo >= s_hi) return 0.0;
    } else {
        // Integrand is exp(-d^2/(4 mu s)) / s; negligible below this scale.
        s_lo = std::min(1e-4, dmin * dmin / (320.0 * mu));
        s_lo = std::max(s_lo, 1e-300);
    }

    const double u_lo = std::log(s_lo), u_hi = std::log(s_hi);
    const int panels = std::max(4, static_cast<int>(std::ceil(panels_per_efold * (u_hi - u_lo))));
    const double du = (u_hi - u_lo) / panels;
    const auto& gl = gl16();

    cplx total = 0.0;
    for (int p = 0; p < panels; ++p) {
        const double a = u_lo + p * du;
        cplx acc = 0.0;
        for (int q = 0; q < 16; ++q) {
            const double u = a + 0.5 * du * (gl.x[q] + 1.0);
            const double s = std::exp(u);
            const cplx z = cplx(mu * s, delta);  // i delta + mu s
            const cplx w = 1.0 / (4.0 * z);
            const cplx f = std::exp(-s) / (8.0 * pi * z) * theta_sum(x1, w) * theta_sum(x2, w);
            acc += gl.w[q] * f * s;  // d s = s d u
        }
        total += 0.5 * du * acc;
    }
    return total;
}

}  // namespace wcgl
