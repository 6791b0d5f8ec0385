#pragma once

#include <map>
#include <vector>

#include "wcgl/hermite.hpp"
#include "wcgl/rng.hpp"

namespace wcgl {

// Complex multiple Ito-Wiener integrals over a finite system of disjoint
// cells. Kernels are simple functions; coefficients indexed by a repeated
// cell vanish. This is enough to exercise the chaos product formula and the
// second-moment bound at desk scale.

struct CellSystem {
    struct Cell {
        int id;
        double mass;  // m(E_i) > 0
    };
    std::vector<Cell> cells;

    CellSystem() = default;
    explicit CellSystem(std::vector<Cell> cs);

    bool has(int id) const;
    double mass(int id) const;
};

class SimpleKernel {
  public:
    SimpleKernel(WickIndex order, int max_degree = hermite_default_max_degree);

    /// Sets the coefficient of the slot tuple (k holomorphic ids, then l
    /// antiholomorphic ids). Tuples with a repeated id must carry zero.
    void set(const std::vector<int>& ids, cplx value);
    cplx coeff(const std::vector<int>& ids) const;

    WickIndex order() const { return order_; }
    const std::map<std::vector<int>, cplx>& coeffs() const { return coeffs_; }

    /// L2 norm squared: sum |a|^2 prod m(E_i) over the index tuple.
    double norm_sq(const CellSystem& cells) const;

    SimpleKernel conjugated() const;  // swaps (k,l) and conjugates entries

  private:
    WickIndex order_;
    int max_degree_;
    std::map<std::vector<int>, cplx> coeffs_;
};

/// One sample of J_{k,l}(f): draws one isotropic complex Gaussian per cell
/// with E|M(E_i)|^2 = m(E_i) and evaluates the defining sum.
cplx chaos_integral_sample(const SimpleKernel& f, const CellSystem& cells, CounterRng& rng);

/// A contraction pairing: entries pair one holomorphic slot with one
/// antiholomorphic slot across the two factors. Global slot numbering is
/// holomorphic 0..k1-1 (f), k1..k1+k2-1 (g); antiholomorphic 0..l1-1 (f),
/// l1..l1+l2-1 (g). A pair must be (f-hol, g-antihol) or (g-hol, f-antihol).
struct Pairing {
    std::vector<std::pair<int, int>> pairs;  // (holomorphic slot, antiholomorphic slot)
};

/// Contracted kernel f (x)_gamma g on the shared cell system. Paired slots
/// are forced to one cell and summed against its mass; entries of the result
/// indexed by a repeated cell are dropped (cells are atoms, so the diagonal
/// must stay out of the chaos representation).
SimpleKernel contract(const SimpleKernel& f, const SimpleKernel& g, const Pairing& gamma, const CellSystem& cells);

}  // namespace wcgl
