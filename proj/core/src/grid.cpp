#include "wcgl/grid.hpp"

#include <cmath>

namespace wcgl {

void require_same_grid(const SpectralField& a, const SpectralField& b) {
    if (!(a.grid() == b.grid())) throw input_error("fields live on different grids");
}

SpectralField& SpectralField::operator+=(const SpectralField& o) {
    require_same_grid(*this, o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
}

SpectralField& SpectralField::operator-=(const SpectralField& o) {
    require_same_grid(*this, o);
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
    return *this;
}

SpectralField& SpectralField::operator*=(cplx s) {
    for (auto& a : a_) a *= s;
    return *this;
}

SpectralField SpectralField::conjugated() const {
    SpectralField out(grid_);
    for (int mx = -grid_.n; mx <= grid_.n; ++mx)
        for (int my = -grid_.n; my <= grid_.n; ++my) out.at(mx, my) = std::conj(at(-mx, -my));
    return out;
}

double SpectralField::l2_norm() const {
    double s = 0.0;
    for (const auto& a : a_) s += std::norm(a);
    return std::sqrt(s);
}

bool SpectralField::all_finite() const {
    for (const auto& a : a_)
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) return false;
    return true;
}

cplx pairing(const SpectralField& f, const SpectralField& g) {
    require_same_grid(f, g);
    const Grid& gr = f.grid();
    cplx s = 0.0;
    for (int mx = -gr.n; mx <= gr.n; ++mx)
        for (int my = -gr.n; my <= gr.n; ++my) s += f.at(mx, my) * g.at(-mx, -my);
    return s;
}

}  // namespace wcgl
