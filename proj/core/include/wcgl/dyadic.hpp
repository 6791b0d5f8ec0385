#pragma once

#include <tuple>

#include "wcgl/products.hpp"

namespace wcgl {

// Littlewood-Paley blocks, Besov norms and the Bony decomposition, used as
// the diagnostic metric layer. The radial profiles come from the mollified
// indicator psi (1 on [0,1], 0 on [4/3,inf)): chi_{-1}(r) = psi(r) and
// chi(r) = psi(r/2) - psi(r), which telescopes to a partition of unity.

struct BesovParams {
    double alpha = 0.0;
    double p = std::numeric_limits<double>::infinity();
    double q = std::numeric_limits<double>::infinity();
};

class DyadicPartition {
  public:
    explicit DyadicPartition(int kmax);

    /// Smallest partition resolving modes up to |m| <= band.
    static DyadicPartition for_band(int band);

    int kmax() const { return kmax_; }

    /// chi_k(|m|) for k in {-1, 0, .., kmax}.
    double block_weight(int k, int mx, int my) const;

    double chi_minus1(double r) const;
    double chi(double r) const;

  private:
    int kmax_;
};

/// delta_k f: coefficients multiplied by chi_k(m).
SpectralField lp_block(const SpectralField& f, int k, const DyadicPartition& part);

/// Besov norm: l^q over k of 2^{alpha k} ||delta_k f||_{L^p}, with unit
/// weight on the k = -1 block. p or q = inf mean max.
double besov_norm(const SpectralField& f, const BesovParams& params, const DyadicPartition& part, int N_quad = 0);

/// Bony split of the pointwise product: (f < g, f o g, f > g), all truncated
/// to the band limit; their sum equals the dealiased product f g.
std::tuple<SpectralField, SpectralField, SpectralField> bony_decompose(const SpectralField& f, const SpectralField& g,
                                                                       const DyadicPartition& part);

}  // namespace wcgl
