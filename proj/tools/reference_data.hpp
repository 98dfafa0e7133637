#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace lowdisc::ref {

// One published benchmark cell. The harness copies these into its CSVs
// flagged source=paper; it never recomputes them.
struct PaperCell {
    const char* table;
    const char* row;
    const char* col;
    double value;
};

const std::vector<PaperCell>& paper_cells();
std::optional<double> paper_value(std::string_view table, std::string_view row,
                                  std::string_view col);

// Cells this implementation computed once and committed. Reruns must match
// them to 1e-12; they exist because Sobol'-seeded published values come from
// a different direction-number variant and are not bit-reproducible here.
struct BaselineCell {
    const char* table;
    const char* row;
    const char* col;
    double value;
};

const std::vector<BaselineCell>& own_baselines();
std::optional<double> baseline_value(std::string_view table, std::string_view row,
                                     std::string_view col);
bool baselines_pinned();

// Cells whose recomputed value may differ from the published one by more
// than 10 percent, with the cause. The committed baseline is the binding
// reference for these; any other cell off by that much is a defect.
std::optional<std::string_view> deviation_note(std::string_view table,
                                               std::string_view row,
                                               std::string_view col);

// L_inf star reference constants of the message-passing baseline (2-D);
// the descent's returned sets are expected to beat them for n >= 100.
struct MpmcRow {
    std::size_t n;
    double linf;
};
const std::vector<MpmcRow>& mpmc_linf_2d();

// Distributional statistics quoted for random initial sets (n = 260, d = 2):
// mean/min of the L2 star root over 2000 draws. Kept for the informational
// comparison in the random-set summary; they disagree with the closed-form
// expectation E[d2^2] = (1/n)(2^-d - 3^-d) by a factor of about 3, so the
// summary reports them as a documented deviation rather than a target.
inline constexpr double kQuotedRandomInitMean = 0.007789;
inline constexpr double kQuotedRandomInitMin = 0.004529;

// Restart-experiment outcome quoted alongside Table 2 (400 restarts, n=260):
inline constexpr double kQuotedRestartBestL2 = 0.003018;
inline constexpr double kQuotedRestartBestLinf = 0.01344;

}  // namespace lowdisc::ref
