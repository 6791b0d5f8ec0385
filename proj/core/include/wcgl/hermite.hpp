#pragma once

#include <array>

#include "wcgl/common.hpp"

namespace wcgl {

// Complex Hermite polynomials H_{k,l}(z, c) and their Wirtinger derivatives.
// Evaluation uses the explicit finite sum
//   H_{k,l}(z,c) = sum_{m=0}^{min(k,l)} m! C(k,m) C(l,m) (-c)^m z^{k-m} conj(z)^{l-m}
// with factorials precomputed up to the configured maximum total degree.

inline constexpr int hermite_default_max_degree = 8;

struct WickIndex {
    int k = 0;
    int l = 0;
};

namespace hermite_detail {

inline constexpr int table_size = 2 * hermite_default_max_degree + 1;

inline const std::array<double, table_size>& factorials() {
    static const std::array<double, table_size> f = [] {
        std::array<double, table_size> t{};
        t[0] = 1.0;
        for (int i = 1; i < table_size; ++i) t[i] = t[i - 1] * i;
        return t;
    }();
    return f;
}

inline double binom(int n, int r) {
    const auto& f = factorials();
    return f[n] / (f[r] * f[n - r]);
}

inline void check_degree(int k, int l, int max_degree) {
    if (k < 0 || l < 0) throw input_error("hermite: negative degree");
    if (k + l > max_degree) throw config_error("hermite: total degree k+l exceeds configured maximum");
    if (max_degree > hermite_default_max_degree) throw config_error("hermite: maximum degree above table size");
}

}  // namespace hermite_detail

inline cplx hermite_eval(int k, int l, cplx z, double c, int max_degree = hermite_default_max_degree) {
    using namespace hermite_detail;
    check_degree(k, l, max_degree);
    const int mmax = std::min(k, l);
    // Horner-style accumulation from the largest m keeps the (-c)^m ladder stable.
    cplx sum = 0.0;
    const cplx zb = std::conj(z);
    for (int m = mmax; m >= 0; --m) {
        cplx term = factorials()[m] * binom(k, m) * binom(l, m) * std::pow(-c, m);
        if (k - m > 0) term *= std::pow(z, k - m);
        if (l - m > 0) term *= std::pow(zb, l - m);
        sum += term;
    }
    return sum;
}

/// d/dz H_{k,l} = k H_{k-1,l}.
inline cplx hermite_dz(int k, int l, cplx z, double c, int max_degree = hermite_default_max_degree) {
    hermite_detail::check_degree(k, l, max_degree);
    if (k == 0) return 0.0;
    return static_cast<double>(k) * hermite_eval(k - 1, l, z, c, max_degree);
}

/// d/dzbar H_{k,l} = l H_{k,l-1}.
inline cplx hermite_dzbar(int k, int l, cplx z, double c, int max_degree = hermite_default_max_degree) {
    hermite_detail::check_degree(k, l, max_degree);
    if (l == 0) return 0.0;
    return static_cast<double>(l) * hermite_eval(k, l - 1, z, c, max_degree);
}

}  // namespace wcgl
