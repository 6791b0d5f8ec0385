#pragma once

#include <string>

#include "wcgl/grid.hpp"

namespace wcgl {

// Binary field snapshots: little-endian header
//   { magic "WCGL", version u32, n u32, N u32, t f64, seed u64 }
// followed by the (2n+1)^2 coefficient block in row-major m-order, two
// float64 components per coefficient. Lossless, so a restored run replays
// the remaining trajectory bit-for-bit.

struct Snapshot {
    SpectralField field;
    double t = 0.0;
    std::uint64_t seed = 0;
};

void write_snapshot(const std::string& path, const SpectralField& f, double t, std::uint64_t seed);
Snapshot read_snapshot(const std::string& path);

}  // namespace wcgl
