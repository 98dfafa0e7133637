#include "lowdisc/generators.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <sstream>

#include "lowdisc/rng.hpp"

namespace lowdisc::gen {

PointSet kronecker_lattice(std::size_t n, double alpha) {
    if (n < 1) throw RaggedInput("n must be >= 1");
    std::vector<double> coords(n * 2);
    for (std::size_t i = 0; i < n; ++i) {
        double ai = alpha * double(i);
        coords[2 * i] = double(i) / double(n);
        coords[2 * i + 1] = ai - std::floor(ai);
    }
    return make_point_set(n, 2, std::move(coords));
}

PointSet fibonacci_set(std::size_t n) {
    // identical code path as kronecker_lattice(n, phi), so the two agree
    // coordinate for coordinate
    return kronecker_lattice(n, (1.0 + std::sqrt(5.0)) / 2.0);
}

PointSet fibonacci_integration_lattice(unsigned k) {
    if (k < 2 || k > 92) throw IndexTooLarge("index must satisfy 2 <= k <= 92");
    std::uint64_t fprev = 1, f = 1;  // F_1, F_2
    for (unsigned j = 3; j <= k; ++j) {
        std::uint64_t next = fprev + f;
        fprev = f;
        f = next;
    }
    std::size_t n = f;
    std::vector<double> coords(n * 2);
    for (std::uint64_t i = 0; i < n; ++i) {
        // second coordinate is the exact rational (F_{k-1} i mod F_k) / F_k
        std::uint64_t num = std::uint64_t((unsigned __int128)(fprev) * i % f);
        coords[2 * i] = double(i) / double(n);
        coords[2 * i + 1] = double(num) / double(f);
    }
    return make_point_set(n, 2, std::move(coords));
}

PointSet random_set(std::size_t n, std::size_t d, std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<double> coords(n * d);
    for (double& c : coords) c = rng.next_double();
    return make_point_set(n, d, std::move(coords));
}

namespace {

constexpr int kBits = 52;  // fixed-point precision of the direction integers

// direction integers V[1..kBits] for one dimension, scaled by 2^kBits
std::vector<std::uint64_t> direction_integers(const SobolTable& table, std::size_t dim) {
    std::vector<std::uint64_t> V(kBits + 1, 0);
    if (dim == 1) {
        for (int j = 1; j <= kBits; ++j) V[j] = std::uint64_t(1) << (kBits - j);
        return V;
    }
    const SobolDirections& e = table.dims[dim - 2];
    unsigned s = e.s;
    for (unsigned j = 1; j <= s && j <= kBits; ++j)
        V[j] = std::uint64_t(e.m[j - 1]) << (kBits - j);
    for (unsigned j = s + 1; j <= kBits; ++j) {
        std::uint64_t v = V[j - s] ^ (V[j - s] >> s);
        for (unsigned t = 1; t < s; ++t)
            if ((e.a >> (s - 1 - t)) & 1u) v ^= V[j - t];
        V[j] = v;
    }
    return V;
}

}  // namespace

PointSet sobol_set(std::size_t n, const SobolParams& params) {
    if (n < 1) throw RaggedInput("n must be >= 1");
    const SobolTable& table = params.table ? *params.table : sobol_default_table();
    if (params.d < 1 || params.d > table.max_dim())
        throw DimensionUnsupported("d = " + std::to_string(params.d) +
                                   " exceeds table '" + table.id + "' (max " +
                                   std::to_string(table.max_dim()) + ")");
    std::size_t d = params.d;
    std::vector<std::vector<std::uint64_t>> V(d);
    for (std::size_t k = 0; k < d; ++k) V[k] = direction_integers(table, k + 1);

    std::vector<double> coords(n * d, 0.0);
    std::vector<std::uint64_t> X(d, 0);
    std::uint64_t total = params.skip + n;
    // Gray-code order: element i flips the bit at the rightmost zero of i-1
    for (std::uint64_t i = 0; i < total; ++i) {
        if (i > 0) {
            int c = std::countr_one(i - 1) + 1;
            if (c > kBits)
                throw DimensionUnsupported("sequence index exceeds 52-bit precision");
            for (std::size_t k = 0; k < d; ++k) X[k] ^= V[k][c];
        }
        if (i >= params.skip) {
            std::size_t row = i - params.skip;
            for (std::size_t k = 0; k < d; ++k)
                coords[row * d + k] = double(X[k]) * 0x1.0p-52;
        }
    }
    return make_point_set(n, d, std::move(coords));
}

SobolTable load_sobol_table(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    SobolTable table;
    table.id = path.filename().string();
    std::string line;
    std::size_t lineno = 0;
    std::size_t expect = 2;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::uint64_t dcol;
        if (!(ls >> dcol)) continue;  // header or blank line
        SobolDirections e;
        if (!(ls >> e.s >> e.a))
            throw ParseError(lineno, "expected 'd s a m_1 ... m_s'");
        if (dcol != expect)
            throw ParseError(lineno, "dimensions must be contiguous from 2");
        e.m.resize(e.s);
        for (unsigned j = 0; j < e.s; ++j) {
            if (!(ls >> e.m[j])) throw ParseError(lineno, "too few m values");
            if (e.m[j] % 2 == 0) throw ParseError(lineno, "m values must be odd");
        }
        table.dims.push_back(std::move(e));
        ++expect;
    }
    if (table.dims.empty()) throw ParseError(lineno, "no direction numbers found");
    return table;
}

}  // namespace lowdisc::gen
