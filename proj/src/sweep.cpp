#include "markov/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <exception>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "markov/analysis.hpp"
#include "markov/sails.hpp"

namespace markov {

namespace {

std::string point_str(const LatticePoint& p)
{
    return "(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
}

CheckResult run_saturation(const MarkovPolynomial& m)
{
    const auto v = saturation_check(m);
    if (v.saturated()) return {};
    return {Status::fail, v.missing.empty() ? "extra " + point_str(v.extra.front())
                                            : "missing " + point_str(v.missing.front())};
}

CheckResult run_logconcave(const MarkovPolynomial& m)
{
    const auto v = log_concavity_check(m);
    if (v.pass()) return {};
    const auto& bad = *v.violation;
    return {Status::fail, std::string(to_string(bad.direction)) + " " + point_str(bad.points[1])};
}

CheckResult run_factor4(const MarkovPolynomial& m)
{
    const auto v = factor4_check(m);
    if (v.vacuous()) return {Status::vacuous, {}};
    if (v.pass()) return {};
    return {Status::fail, point_str(v.offending.front())};
}

CheckResult run_duality(const SailReport& r)
{
    if (r.empty()) return {Status::vacuous, {}};
    if (!r.lengths_ok || !r.angles_ok || !r.hull_ok) return {Status::fail, "sail geometry"};
    for (const auto& s : r.segments) {
        if (s.status == SegmentStatus::not_progression) return {Status::fail, "S_" + std::to_string(s.k) + " not arithmetic"};
    }
    if (r.duality_sign_flipped) return {Status::pass, "global sign flip"};
    if (!r.duality_ok) {
        for (const auto& s : r.segments) {
            if (s.status == SegmentStatus::checked && !s.duality) return {Status::fail, "S_" + std::to_string(s.k)};
        }
    }
    if (r.checked_segments() == 0) return {Status::vacuous, {}};
    return {};
}

CheckResult run_location4(const SailReport& r)
{
    if (r.empty()) return {Status::vacuous, {}};
    if (r.location4.pass()) return {};
    return {Status::fail, point_str(r.location4.point)};
}

CheckResult run_equation(Topograph& engine, const Fraction& rho, const SweepOptions& options)
{
    const auto steps = stern_brocot_descent(rho);
    const auto& parents = steps.at(steps.size() - 2);
    const MarkovTriple t = MarkovTriple::around(engine, parents.left, parents.right);
    const EquationMode mode = rho.height() <= options.exact_equation_limit
                                  ? EquationMode::exact()
                                  : EquationMode::random(options.random_points,
                                                         options.seed ^ (static_cast<std::uint64_t>(rho.num()) << 32 |
                                                                         static_cast<std::uint64_t>(rho.den())));
    const auto v = verify_equation(t, mode);
    if (v.pass) return {};
    std::string where = v.detail;
    if (v.failing_point) {
        where = "(" + (*v.failing_point)[0].get_str() + "," + (*v.failing_point)[1].get_str() + "," +
                (*v.failing_point)[2].get_str() + ")";
    }
    return {Status::fail, where};
}

}  // namespace

const char* to_string(Check c)
{
    switch (c) {
    case Check::saturation: return "saturation";
    case Check::logconcave: return "logconcave";
    case Check::factor4: return "factor4";
    case Check::duality: return "duality";
    case Check::location4: return "location4";
    case Check::equation: return "equation";
    }
    return "?";
}

std::vector<Check> all_checks()
{
    return {Check::saturation, Check::logconcave, Check::factor4, Check::duality, Check::location4, Check::equation};
}

std::set<Check> parse_checks(const std::string& text)
{
    std::set<Check> out;
    std::stringstream ss(text);
    std::string name;
    while (std::getline(ss, name, ',')) {
        if (name == "all") {
            for (const auto c : all_checks()) out.insert(c);
            continue;
        }
        bool found = false;
        for (const auto c : all_checks()) {
            if (name == to_string(c)) {
                out.insert(c);
                found = true;
            }
        }
        if (!found) throw std::invalid_argument("unknown check '" + name + "'");
    }
    if (out.empty()) throw std::invalid_argument("no checks selected");
    return out;
}

const char* to_string(Status s)
{
    switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::vacuous: return "vacuous";
    }
    return "?";
}

bool SweepRecord::failed() const
{
    for (const auto& [c, r] : results) {
        if (r.status == Status::fail) return true;
    }
    return false;
}

std::vector<Fraction> sweep_fractions(std::int64_t max_sum)
{
    std::vector<Fraction> out;
    for (std::int64_t h = 3; h <= max_sum; ++h) {
        for (std::int64_t a = 1; 2 * a < h; ++a) {
            const std::int64_t b = h - a;
            if (std::gcd(a, b) == 1) out.emplace_back(a, b);
        }
    }
    return out;
}

SweepRecord evaluate_fraction(Topograph& engine, const Fraction& rho, const SweepOptions& options)
{
    const auto started = std::chrono::steady_clock::now();
    SweepRecord rec;
    rec.rho = rho;
    const MarkovPolynomial m = engine.markov_polynomial(rho);
    rec.markov_number = eval_ones(m.numerator).get_str();

    std::optional<SailReport> sail;
    const auto need_sail = [&]() -> const SailReport& {
        if (!sail) sail = duality_check(m);
        return *sail;
    };
    for (const Check c : options.checks) {
        switch (c) {
        case Check::saturation: rec.results[c] = run_saturation(m); break;
        case Check::logconcave: rec.results[c] = run_logconcave(m); break;
        case Check::factor4: rec.results[c] = run_factor4(m); break;
        case Check::duality: rec.results[c] = run_duality(need_sail()); break;
        case Check::location4: rec.results[c] = run_location4(need_sail()); break;
        case Check::equation: rec.results[c] = run_equation(engine, rho, options); break;
        }
    }
    if (options.timings) {
        rec.wall_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    }
    return rec;
}

void run_sweep(const SweepOptions& options, const std::function<void(const SweepRecord&)>& sink)
{
    const std::vector<Fraction> fractions = sweep_fractions(options.max_sum);
    const std::size_t total = fractions.size();
    std::vector<std::optional<SweepRecord>> slots(total);
    std::exception_ptr failure;
    std::mutex mu;
    std::condition_variable ready;
    std::atomic<std::size_t> next{0};

    const auto worker = [&] {
        Topograph engine;
        while (true) {
            const std::size_t k = next.fetch_add(1);
            if (k >= total) return;
            try {
                SweepRecord rec = evaluate_fraction(engine, fractions[k], options);
                std::lock_guard lock(mu);
                slots[k] = std::move(rec);
            } catch (...) {
                std::lock_guard lock(mu);
                if (!failure) failure = std::current_exception();
                next.store(total);
            }
            ready.notify_all();
        }
    };

    const int n_workers = std::max(1, options.workers);
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(n_workers));
    for (int w = 0; w < n_workers; ++w) threads.emplace_back(worker);

    std::exception_ptr sink_failure;
    for (std::size_t k = 0; k < total; ++k) {
        std::unique_lock lock(mu);
        ready.wait(lock, [&] { return slots[k].has_value() || failure; });
        if (!slots[k]) break;
        SweepRecord rec = std::move(*slots[k]);
        slots[k].reset();
        lock.unlock();
        try {
            sink(rec);
        } catch (...) {
            sink_failure = std::current_exception();
            next.store(total);
            break;
        }
    }
    for (auto& t : threads) t.join();
    if (failure) std::rethrow_exception(failure);
    if (sink_failure) std::rethrow_exception(sink_failure);
}

nlohmann::json to_json(const SweepRecord& r)
{
    nlohmann::json checks = nlohmann::json::object();
    for (const auto& [c, res] : r.results) {
        nlohmann::json e{{"status", to_string(res.status)}};
        if (!res.counterexample.empty()) e["detail"] = res.counterexample;
        checks[to_string(c)] = e;
    }
    nlohmann::json out{{"rho", r.rho.str()},
                       {"a_plus_b", r.height()},
                       {"markov_number", r.markov_number},
                       {"checks", checks}};
    if (r.wall_ms) out["wall_ms"] = *r.wall_ms;
    return out;
}

std::string summary_csv_header(const SweepOptions& options)
{
    std::string out = "rho,a_plus_b,markov_number";
    for (const auto c : options.checks) {
        out += ',';
        out += to_string(c);
    }
    out += ",first_counterexample";
    if (options.timings) out += ",wall_ms";
    return out + "\n";
}

std::string summary_csv_row(const SweepRecord& r, const SweepOptions& options)
{
    std::string out = r.rho.str() + "," + std::to_string(r.height()) + "," + r.markov_number;
    std::string first;
    for (const auto c : options.checks) {
        const auto it = r.results.find(c);
        out += ',';
        out += it == r.results.end() ? "" : to_string(it->second.status);
        if (first.empty() && it != r.results.end() && it->second.status == Status::fail) {
            first = std::string(to_string(c)) + " " + it->second.counterexample;
        }
    }
    out += ",\"" + first + "\"";
    if (options.timings) out += "," + std::to_string(r.wall_ms.value_or(0.0));
    return out + "\n";
}

}  // namespace markov
