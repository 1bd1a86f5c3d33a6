#pragma once

#include <set>
#include <string>
#include <vector>

namespace markov {

struct SelftestOptions {
    /// Use the (b - 2) row-one factor in place of (b - 2a).
    bool printed_row1 = false;
    /// Modules whose entries are reported as skipped.
    std::set<std::string> skip;
};

enum class SelftestStatus { pass, fail, skip };

struct SelftestEntry {
    std::string module;
    std::string name;
    SelftestStatus status = SelftestStatus::pass;
    std::string detail;
};

[[nodiscard]] const std::vector<std::string>& selftest_modules();

/// Reproduces every printed example and figure value.
[[nodiscard]] std::vector<SelftestEntry> run_selftest(const SelftestOptions& options = {});

/// Fixed-width pass/fail table.
[[nodiscard]] std::string format_selftest(const std::vector<SelftestEntry>& entries);

}  // namespace markov
