#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "optidx/coloring.hpp"
#include "optidx/oracle.hpp"
#include "optidx/tree.hpp"

namespace optidx {

/// Process exit codes shared by every subcommand.
enum ExitCode : int {
    kExitOk = 0,
    kExitVerifyFailed = 1,
    kExitInputError = 2,
    kExitBoundViolation = 3,
};

/// Bad command-line or file input (maps to kExitInputError).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct PhaseTimings {
    std::int64_t profile_ms = 0;
    std::int64_t coloring_ms = 0;
    std::int64_t verify_ms = 0;
    std::int64_t exact_ms = 0;
};

struct IndexReport {
    Vertex n = 0;
    std::int64_t pi = 0;
    Edge argmax_edge;
    std::int64_t colors_constructed = 0;
    std::size_t violations = 0;
    std::optional<std::int64_t> exact_lower;
    std::optional<std::int64_t> exact_upper;
    std::optional<bool> exact_flag;
    std::int64_t ratio_numerator = 0;    // 2 * colors_constructed
    std::int64_t ratio_denominator = 0;  // 3 * pi
    bool bound_ok = false;
    PhaseTimings elapsed;

    bool proper() const noexcept { return violations == 0; }
};

struct ReportOptions {
    bool exact = false;
    std::int64_t budget_ms = 10'000;
};

/// Full pipeline on one tree. `coloring_out`, when given, receives the
/// constructed coloring. BoundViolation propagates.
IndexReport build_report(const Tree& t, const ReportOptions& options, PathColoring* coloring_out = nullptr);

/// Flat JSON object with keys in a fixed order. Timings only when asked,
/// since they differ between runs.
std::string report_json(const IndexReport& r, bool with_timings = false);
std::string report_csv(const IndexReport& r);

/// "3", "1..4", "2,5..7". Descending a..b yields nothing.
std::vector<std::int64_t> parse_range(std::string_view text);

struct SweepRequest {
    Family family = Family::Path;
    /// One value list per family parameter: path/star {n}, spider {k, t},
    /// mary {arity, depth}, random {n, seed}.
    std::vector<std::vector<std::int64_t>> params;
    ReportOptions options;
};

/// Family name plus range arguments; random takes an optional seed range
/// and falls back to `default_seed`.
SweepRequest parse_sweep(std::string_view family, const std::vector<std::string>& ranges,
                         std::uint64_t default_seed);

std::string sweep_csv(const SweepRequest& request);
std::string sweep_json(const SweepRequest& request);

struct EnumerateOptions {
    bool exact = false;
    std::int64_t budget_ms = 200;
    bool force = false;
};

struct EnumerateSummary {
    Vertex n = 0;
    std::uint64_t trees = 0;
    std::uint64_t improper = 0;
    std::uint64_t bound_failures = 0;
    std::int64_t max_ratio_numerator = 0;
    std::int64_t max_ratio_denominator = 1;
    std::uint64_t exact_runs = 0;
    std::uint64_t exact_closed = 0;
    std::uint64_t sandwich_failures = 0;

    bool ok() const noexcept {
        return improper == 0 && bound_failures == 0 && sandwich_failures == 0 && exact_closed == exact_runs;
    }
};

/// Pipeline over every labeled tree on n vertices. n above the default cap
/// needs `force`; the exact oracle runs only for n <= 7.
EnumerateSummary enumerate_trees(Vertex n, const EnumerateOptions& options);
std::string summary_json(const EnumerateSummary& s);

/// "u v color" lines with '#' comments. Every pair must appear exactly once.
PathColoring parse_coloring(std::string_view text, Vertex n);
std::string format_coloring(const PathColoring& c);

std::string format_violation(const Violation& v, const PathColoring& c);

/// Graphviz rendering of the tree.
std::string to_dot(const Tree& t);

/// Edge-list text accepted by parse_edge_list.
std::string format_edge_list(const Tree& t);

}  // namespace optidx
