#include "wcgl/snapshot.hpp"

#include <cstring>
#include <fstream>

namespace wcgl {

namespace {

constexpr char magic[4] = {'W', 'C', 'G', 'L'};
constexpr std::uint32_t version = 1;

template <typename T>
void put(std::ostream& os, const T& v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
void get(std::istream& is, T& v) {
    is.read(reinterpret_cast<char*>(&v), sizeof(T));
}

}  // namespace

void write_snapshot(const std::string& path, const SpectralField& f, double t, std::uint64_t seed) {
    std::ofstream os(path, std::ios::binary | std::ios::trunc);
    if (!os) throw input_error("snapshot: cannot open for writing: " + path);
    os.write(magic, 4);
    put(os, version);
    put(os, static_cast<std::uint32_t>(f.grid().n));
    put(os, static_cast<std::uint32_t>(f.grid().N));
    put(os, t);
    put(os, seed);
    // Row-major m-order over the (2n+1)^2 square, two little-endian f64 per mode.
    for (const cplx& a : f.coeffs()) {
        put(os, a.real());
        put(os, a.imag());
    }
    if (!os) throw input_error("snapshot: write failed: " + path);
}

Snapshot read_snapshot(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw input_error("snapshot: cannot open: " + path);
    char m[4];
    is.read(m, 4);
    if (!is || std::memcmp(m, magic, 4) != 0) throw input_error("snapshot: bad magic in " + path);
    std::uint32_t ver, n, N;
    get(is, ver);
    if (ver != version) throw input_error("snapshot: unsupported version");
    get(is, n);
    get(is, N);
    Snapshot snap;
    get(is, snap.t);
    get(is, snap.seed);
    snap.field = SpectralField(Grid(static_cast<int>(n), static_cast<int>(N)));
    for (cplx& a : snap.field.coeffs()) {
        double re, im;
        get(is, re);
        get(is, im);
        a = cplx(re, im);
    }
    if (!is) throw input_error("snapshot: truncated file: " + path);
    return snap;
}

}  // namespace wcgl
