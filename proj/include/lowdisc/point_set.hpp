#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string_view>
#include <vector>

#include "lowdisc/errors.hpp"

namespace lowdisc {

// n points in [0,1]^d, row-major. Treated as immutable by every evaluator;
// duplicates are legal and order is preserved by I/O round trips.
struct PointSet {
    std::size_t n = 0;
    std::size_t d = 0;
    std::vector<double> coords;  // size n*d

    double x(std::size_t i, std::size_t k) const { return coords[i * d + k]; }
    double& x(std::size_t i, std::size_t k) { return coords[i * d + k]; }
};

// Validates and builds a PointSet. Coordinates outside [0,1] are rejected,
// never clamped. Throws OutOfUnitCube or RaggedInput.
PointSet make_point_set(const std::vector<std::vector<double>>& rows);
PointSet make_point_set(std::size_t n, std::size_t d, std::vector<double> coords);

// Plain text, one point per line, space separated ('#' lines ignored, ','
// also accepted as separator on input). Writer emits 17 significant digits
// so binary64 values survive a round trip exactly.
PointSet load_point_set(const std::filesystem::path& path);
void save_point_set(const PointSet& P, const std::filesystem::path& path);

enum class DiscrepancyKind { L2Star, L2Periodic, L2Extreme, LInfStar };

const char* kind_name(DiscrepancyKind kind);
std::optional<DiscrepancyKind> kind_from_name(std::string_view name);

}  // namespace lowdisc
