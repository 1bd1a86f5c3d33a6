#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "markov/fraction.hpp"
#include "markov/topograph.hpp"

namespace markov {

enum class Check { saturation, logconcave, factor4, duality, location4, equation };

[[nodiscard]] const char* to_string(Check c);
[[nodiscard]] std::vector<Check> all_checks();
/// Comma-separated names or "all". Throws std::invalid_argument for unknown names.
[[nodiscard]] std::set<Check> parse_checks(const std::string& text);

enum class Status { pass, fail, vacuous };

[[nodiscard]] const char* to_string(Status s);

struct CheckResult {
    Status status = Status::pass;
    /// Where the first failure happened, e.g. "(3,4)".
    std::string counterexample;
};

struct SweepRecord {
    Fraction rho{0, 1};
    std::string markov_number;
    std::map<Check, CheckResult> results;
    std::optional<double> wall_ms;

    [[nodiscard]] std::int64_t height() const noexcept { return rho.height(); }
    [[nodiscard]] bool failed() const;
};

struct SweepOptions {
    std::int64_t max_sum = 20;
    std::set<Check> checks;
    int workers = 1;
    std::uint64_t seed = 1;
    bool timings = false;
    /// Exact equation check up to this height, random points above it.
    std::int64_t exact_equation_limit = 20;
    int random_points = 5;
};

/// Reduced a/b with 0 < a < b and a + b <= max_sum, sorted by (a+b, a).
[[nodiscard]] std::vector<Fraction> sweep_fractions(std::int64_t max_sum);

[[nodiscard]] SweepRecord evaluate_fraction(Topograph& engine, const Fraction& rho, const SweepOptions& options);

/*
 * Evaluates every fraction on `workers` threads, each with a private engine,
 * and hands records to `sink` strictly in sweep order.
 */
void run_sweep(const SweepOptions& options, const std::function<void(const SweepRecord&)>& sink);

[[nodiscard]] nlohmann::json to_json(const SweepRecord& r);
[[nodiscard]] std::string summary_csv_header(const SweepOptions& options);
[[nodiscard]] std::string summary_csv_row(const SweepRecord& r, const SweepOptions& options);

}  // namespace markov
