#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "lowdisc/point_set.hpp"

namespace lowdisc::gen {

// {(i/n, {phi i})} with phi the golden ratio. d = 2.
PointSet fibonacci_set(std::size_t n);

// {(i/n, {alpha i})}. alpha = sqrt(2) reproduces the classic lattice;
// alpha = phi coincides with fibonacci_set coordinate for coordinate.
PointSet kronecker_lattice(std::size_t n, double alpha);

// {(i/F_k, (F_{k-1} i mod F_k)/F_k)}, exact integer arithmetic. A rank-1
// integration lattice; a local optimum of the periodic L2 discrepancy.
// Throws IndexTooLarge outside 2 <= k <= 92 (F_k must fit in 64 bits).
PointSet fibonacci_integration_lattice(unsigned k);

// i.i.d. uniform coordinates from splitmix64. Same seed, same set.
PointSet random_set(std::size_t n, std::size_t d, std::uint64_t seed);

// One direction-number row: primitive polynomial degree s, interior
// coefficient bits a, and initial odd values m_1..m_s.
struct SobolDirections {
    unsigned s;
    unsigned a;
    std::vector<std::uint32_t> m;
};

struct SobolTable {
    std::string id;
    // entry j holds dimension j+2; dimension 1 is the van der Corput column
    std::vector<SobolDirections> dims;
    std::size_t max_dim() const { return dims.size() + 1; }
};

// Embedded Joe-Kuo table (d <= 16 subset of the 21201-dimension file).
const SobolTable& sobol_default_table();

// Joe-Kuo text format: optional header line, then "d s a m_1 ... m_s".
SobolTable load_sobol_table(const std::filesystem::path& path);

struct SobolParams {
    std::size_t d = 2;
    std::uint64_t skip = 0;
    std::string table_id;            // empty means the embedded table's id
    const SobolTable* table = nullptr;  // nullptr means the embedded table
};

// First n elements (after skip) of the Sobol' sequence in Gray-code order,
// 52-bit precision. The initial point (0,...,0) is kept when skip = 0.
// Throws DimensionUnsupported when d exceeds the table.
PointSet sobol_set(std::size_t n, const SobolParams& params);

}  // namespace lowdisc::gen
