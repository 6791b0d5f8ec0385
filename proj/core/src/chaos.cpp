#include "wcgl/chaos.hpp"

#include <algorithm>
#include <unordered_map>

namespace wcgl {

namespace {

bool has_repeat(const std::vector<int>& ids) {
    for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j)
            if (ids[i] == ids[j]) return true;
    return false;
}

}  // namespace

CellSystem::CellSystem(std::vector<Cell> cs) : cells(std::move(cs)) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (cells[i].mass <= 0.0) throw input_error("cell mass must be positive");
        for (std::size_t j = i + 1; j < cells.size(); ++j)
            if (cells[i].id == cells[j].id) throw input_error("duplicate cell identifier");
    }
}

bool CellSystem::has(int id) const {
    return std::any_of(cells.begin(), cells.end(), [&](const Cell& c) { return c.id == id; });
}

double CellSystem::mass(int id) const {
    for (const auto& c : cells)
        if (c.id == id) return c.mass;
    throw input_error("unknown cell identifier");
}

SimpleKernel::SimpleKernel(WickIndex order, int max_degree) : order_(order), max_degree_(max_degree) {
    if (order.k < 0 || order.l < 0) throw input_error("kernel order must be nonnegative");
    if (order.k + order.l > max_degree) throw config_error("kernel order exceeds configured maximum degree");
}

void SimpleKernel::set(const std::vector<int>& ids, cplx value) {
    if (static_cast<int>(ids.size()) != order_.k + order_.l) throw input_error("index tuple has wrong length");
    if (has_repeat(ids) && value != 0.0) throw input_error("repeated cell identifier must carry zero coefficient");
    if (value == 0.0)
        coeffs_.erase(ids);
    else
        coeffs_[ids] = value;
}

cplx SimpleKernel::coeff(const std::vector<int>& ids) const {
    auto it = coeffs_.find(ids);
    return it == coeffs_.end() ? cplx(0.0) : it->second;
}

double SimpleKernel::norm_sq(const CellSystem& cells) const {
    double s = 0.0;
    for (const auto& [ids, a] : coeffs_) {
        double w = std::norm(a);
        for (int id : ids) w *= cells.mass(id);
        s += w;
    }
    return s;
}

SimpleKernel SimpleKernel::conjugated() const {
    SimpleKernel out(WickIndex{order_.l, order_.k}, max_degree_);
    for (const auto& [ids, a] : coeffs_) {
        std::vector<int> swapped(ids.begin() + order_.k, ids.end());
        swapped.insert(swapped.end(), ids.begin(), ids.begin() + order_.k);
        out.set(swapped, std::conj(a));
    }
    return out;
}

cplx chaos_integral_sample(const SimpleKernel& f, const CellSystem& cells, CounterRng& rng) {
    // One M(E_i) per cell, in the declared cell order.
    std::unordered_map<int, cplx> draws;
    draws.reserve(cells.cells.size());
    for (const auto& c : cells.cells) draws[c.id] = rng.cgauss(c.mass);

    const int k = f.order().k;
    const int kl = k + f.order().l;
    cplx sum = 0.0;
    for (const auto& [ids, a] : f.coeffs()) {
        cplx term = a;
        for (int s = 0; s < kl; ++s) {
            auto it = draws.find(ids[s]);
            if (it == draws.end()) throw input_error("kernel references unknown cell identifier");
            term *= (s < k) ? it->second : std::conj(it->second);
        }
        sum += term;
    }
    return sum;
}

SimpleKernel contract(const SimpleKernel& f, const SimpleKernel& g, const Pairing& gamma, const CellSystem& cells) {
    const int k1 = f.order().k, l1 = f.order().l;
    const int k2 = g.order().k, l2 = g.order().l;
    const int r = static_cast<int>(gamma.pairs.size());

    std::vector<bool> hol_used(k1 + k2, false), anti_used(l1 + l2, false);
    for (const auto& [hs, as] : gamma.pairs) {
        if (hs < 0 || hs >= k1 + k2 || as < 0 || as >= l1 + l2) throw input_error("pairing slot out of range");
        if (hol_used[hs] || anti_used[as]) throw input_error("pairing repeats a slot");
        const bool h_in_f = hs < k1;
        const bool a_in_f = as < l1;
        if (h_in_f == a_in_f) throw input_error("pairing must join slots of different factors");
        hol_used[hs] = true;
        anti_used[as] = true;
    }

    SimpleKernel out(WickIndex{k1 + k2 - r, l1 + l2 - r});
    std::map<std::vector<int>, cplx> acc;

    for (const auto& [fids, fa] : f.coeffs()) {
        for (const auto& [gids, ga] : g.coeffs()) {
            // Global slot values for this coefficient pair.
            std::vector<int> hol(k1 + k2), anti(l1 + l2);
            for (int i = 0; i < k1; ++i) hol[i] = fids[i];
            for (int i = 0; i < l1; ++i) anti[i] = fids[k1 + i];
            for (int i = 0; i < k2; ++i) hol[k1 + i] = gids[i];
            for (int i = 0; i < l2; ++i) anti[l1 + i] = gids[k2 + i];

            cplx w = fa * ga;
            bool ok = true;
            for (const auto& [hs, as] : gamma.pairs) {
                if (hol[hs] != anti[as]) {
                    ok = false;
                    break;
                }
                w *= cells.mass(hol[hs]);
            }
            if (!ok) continue;

            std::vector<int> ids;
            ids.reserve(k1 + k2 + l1 + l2 - 2 * r);
            for (int i = 0; i < k1 + k2; ++i)
                if (!hol_used[i]) ids.push_back(hol[i]);
            for (int i = 0; i < l1 + l2; ++i)
                if (!anti_used[i]) ids.push_back(anti[i]);
            acc[ids] += w;
        }
    }

    for (const auto& [ids, a] : acc) {
        bool repeat = false;
        for (std::size_t i = 0; i < ids.size() && !repeat; ++i)
            for (std::size_t j = i + 1; j < ids.size(); ++j)
                if (ids[i] == ids[j]) {
                    repeat = true;
                    break;
                }
        if (!repeat && a != 0.0) out.set(ids, a);
    }
    return out;
}

}  // namespace wcgl
