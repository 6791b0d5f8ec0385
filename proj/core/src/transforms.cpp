#include "wcgl/transforms.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace wcgl {

namespace {

// One forward + one backward plan per grid size. FFTW planning is not
// thread-safe; execution via fftw_execute_dft on distinct buffers is.
class PlanCache {
  public:
    static PlanCache& instance() {
        static PlanCache c;
        return c;
    }

    fftw_plan get(int N, int sign) {
        std::lock_guard<std::mutex> lk(mtx_);
        auto key = std::make_pair(N, sign);
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;
        std::vector<cplx> buf(static_cast<std::size_t>(N) * N);
        auto* p = reinterpret_cast<fftw_complex*>(buf.data());
        fftw_plan plan = fftw_plan_dft_2d(N, N, p, p, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
        plans_[key] = plan;
        return plan;
    }

  private:
    PlanCache() = default;
    std::mutex mtx_;
    std::map<std::pair<int, int>, fftw_plan> plans_;
};

void execute(int N, int sign, std::vector<cplx>& data) {
    fftw_plan plan = PlanCache::instance().get(N, sign);
    auto* p = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(plan, p, p);
}

}  // namespace

std::vector<cplx> to_grid(const SpectralField& f, int N_out) {
    const Grid& g = f.grid();
    const int N = N_out > 0 ? N_out : g.N;
    if (N < 2 * g.n + 2) throw config_error("to_grid: output grid does not resolve the band limit");
    std::vector<cplx> data(static_cast<std::size_t>(N) * N, cplx(0.0));
    for (int mx = -g.n; mx <= g.n; ++mx) {
        const int jx = ((mx % N) + N) % N;
        for (int my = -g.n; my <= g.n; ++my) {
            const cplx a = f.at(mx, my);
            if (a == cplx(0.0)) continue;
            const int jy = ((my % N) + N) % N;
            data[static_cast<std::size_t>(jx) * N + jy] += a;
        }
    }
    execute(N, FFTW_BACKWARD, data);  // sum_m a_m e^{+2 pi i m.j/N}
    return data;
}

SpectralField from_grid(const std::vector<cplx>& values, const Grid& g, int N_in) {
    const int N = N_in > 0 ? N_in : g.N;
    if (values.size() != static_cast<std::size_t>(N) * N) throw input_error("from_grid: value array size mismatch");
    if (N < 2 * g.n + 2) throw config_error("from_grid: grid does not resolve the band limit");
    std::vector<cplx> data = values;
    execute(N, FFTW_FORWARD, data);
    const double scale = 1.0 / (static_cast<double>(N) * N);
    SpectralField f(g);
    for (int mx = -g.n; mx <= g.n; ++mx) {
        const int jx = ((mx % N) + N) % N;
        for (int my = -g.n; my <= g.n; ++my) {
            if (!g.in_ball(mx, my)) continue;
            const int jy = ((my % N) + N) % N;
            f.at(mx, my) = scale * data[static_cast<std::size_t>(jx) * N + jy];
        }
    }
    return f;
}

}  // namespace wcgl
