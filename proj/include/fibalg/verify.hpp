#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fibalg/jordan.hpp"
#include "fibalg/lie.hpp"
#include "fibalg/serialize.hpp"
#include "fibalg/tables.hpp"

namespace fibalg {

/// Parameters shared by the verification suites; each suite reads the ones it needs.
struct VerifyParams {
    Rational alpha = 1;
    std::int64_t beta = 0;
    /// Suite-specific default when unset.
    std::optional<std::int64_t> range;
    bool falsify = false;
    /// witt, virasoro or qclie (jacobi and antisymmetry only).
    std::string algebra = "witt";
    CentralSign central_sign = CentralSign::Table;
    /// QCLie window [window_lo, window_hi].
    Rational window_lo = 0;
    Rational window_hi = 1;
    std::int64_t N = 12;
    std::int64_t M = 4;
    TruncationMode mode = TruncationMode::ZeroProduct;
    /// Lower end of the sub-window [c, 1] for abelian and ideal.
    Rational c = Rational(1, 2);
    std::int64_t gaps = 10000;
};

/// Verdict of one suite.  At most `max_listed` violations are listed; violation_count is exact.
struct Verdict {
    std::string suite;
    json params;
    std::uint64_t checked = 0;
    std::uint64_t violation_count = 0;
    json violations = json::array();
    /// Extra per-suite findings (e.g. the truncated-axioms verdicts).
    json details;
    /// Whether the outcome is the one predicted: no violations where none are claimed,
    /// some violations in falsification runs.
    bool expected_outcome = true;
    double elapsed_seconds = 0;

    static constexpr std::size_t max_listed = 100;
};

std::vector<std::string> suite_names();

/// Throws UnknownSuite for names outside suite_names(), InvalidAlgebra for invalid specs without falsify.
Verdict run_verify(std::string_view suite, const VerifyParams& params);

/// {suite, params, checked, violation_count, violations, expected_outcome[, details][, elapsed]}.
json to_json(const Verdict& verdict, bool include_elapsed = false);

/// The structure-constant table of a truncation, serialized as JSON or CSV.
std::string run_export(const TruncationSpec& tspec, OutputFormat format);

}  // namespace fibalg
