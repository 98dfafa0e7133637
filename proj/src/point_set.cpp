#include "lowdisc/point_set.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace lowdisc {

static void validate(const PointSet& P) {
    if (P.n < 1 || P.d < 1) throw RaggedInput("empty point set");
    for (std::size_t s = 0; s < P.coords.size(); ++s) {
        double c = P.coords[s];
        if (!(c >= 0.0 && c <= 1.0)) throw OutOfUnitCube(s, c);
    }
}

PointSet make_point_set(std::size_t n, std::size_t d, std::vector<double> coords) {
    if (coords.size() != n * d) throw RaggedInput("coordinate count does not match n*d");
    PointSet P{n, d, std::move(coords)};
    validate(P);
    return P;
}

PointSet make_point_set(const std::vector<std::vector<double>>& rows) {
    if (rows.empty() || rows[0].empty()) throw RaggedInput("empty input");
    std::size_t d = rows[0].size();
    std::vector<double> coords;
    coords.reserve(rows.size() * d);
    for (const auto& r : rows) {
        if (r.size() != d) throw RaggedInput("rows have differing lengths");
        coords.insert(coords.end(), r.begin(), r.end());
    }
    return make_point_set(rows.size(), d, std::move(coords));
}

PointSet load_point_set(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        for (char& ch : line)
            if (ch == ',') ch = ' ';
        std::istringstream ls(line);
        std::vector<double> row;
        std::string tok;
        while (ls >> tok) {
            double v;
            auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc{} || p != tok.data() + tok.size())
                throw ParseError(lineno, "bad number '" + tok + "'");
            row.push_back(v);
        }
        if (row.empty()) continue;
        if (!rows.empty() && row.size() != rows[0].size())
            throw RaggedInput("line " + std::to_string(lineno) + ": expected " +
                              std::to_string(rows[0].size()) + " columns, got " +
                              std::to_string(row.size()));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ParseError(lineno, "no points in file");
    return make_point_set(rows);
}

void save_point_set(const PointSet& P, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path.string());
    char buf[32];
    for (std::size_t i = 0; i < P.n; ++i) {
        for (std::size_t k = 0; k < P.d; ++k) {
            // 17 significant digits round-trip any binary64 value
            std::snprintf(buf, sizeof buf, "%.17g", P.x(i, k));
            out << (k ? " " : "") << buf;
        }
        out << '\n';
    }
    if (!out) throw IoError("write failed for " + path.string());
}

const char* kind_name(DiscrepancyKind kind) {
    switch (kind) {
        case DiscrepancyKind::L2Star: return "l2-star";
        case DiscrepancyKind::L2Periodic: return "l2-periodic";
        case DiscrepancyKind::L2Extreme: return "l2-extreme";
        case DiscrepancyKind::LInfStar: return "linf-star";
    }
    return "?";
}

std::optional<DiscrepancyKind> kind_from_name(std::string_view name) {
    if (name == "l2-star") return DiscrepancyKind::L2Star;
    if (name == "l2-periodic") return DiscrepancyKind::L2Periodic;
    if (name == "l2-extreme") return DiscrepancyKind::L2Extreme;
    if (name == "linf-star") return DiscrepancyKind::LInfStar;
    return std::nullopt;
}

}  // namespace lowdisc
