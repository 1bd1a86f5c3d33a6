// markovpoly: compute Markov polynomials, reproduce the printed examples and
// sweep the open conjectures over small fractions.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "markov/selftest.hpp"
#include "markov/serialize.hpp"
#include "markov/sweep.hpp"

namespace {

constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

markov::Fraction parse_rho(const std::string& text)
{
    try {
        return markov::Fraction::parse(text);
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
}

int cmd_compute(const std::string& rho_text, const std::string& format)
{
    const markov::Fraction rho = parse_rho(rho_text);
    if (!(rho == markov::Fraction(1, 0)) && (rho.num() > rho.den())) {
        throw UsageError("rho must lie in [0,1], got " + rho.str());
    }
    const auto m = markov::markov_polynomial(rho);
    if (format == "json") {
        std::cout << markov::to_json(m).dump() << '\n';
    } else if (format == "csv") {
        std::cout << markov::grid_csv(m.numerator);
    } else {
        std::cout << "M_" << rho.str() << " = " << markov::describe(m) << '\n'
                  << "markov number " << markov::eval_ones(m.numerator).get_str() << "\n\n"
                  << markov::render_grid(m.numerator);
    }
    return 0;
}

int cmd_selftest(bool printed_row1, const std::vector<std::string>& skip)
{
    markov::SelftestOptions options;
    options.printed_row1 = printed_row1;
    for (const auto& s : skip) {
        const auto& known = markov::selftest_modules();
        if (std::find(known.begin(), known.end(), s) == known.end()) {
            throw UsageError("unknown module '" + s + "'");
        }
        options.skip.insert(s);
    }
    const auto entries = markov::run_selftest(options);
    std::cout << markov::format_selftest(entries);
    for (const auto& e : entries) {
        if (e.status == markov::SelftestStatus::fail) return exit_failure;
    }
    return 0;
}

std::ofstream open_output(const std::filesystem::path& path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw UsageError("cannot write " + path.string());
    return out;
}

int cmd_sweep(markov::SweepOptions options, const std::string& checks, const std::string& out_dir)
{
    if (options.max_sum < 3) throw UsageError("--max-sum must be at least 3");
    if (options.workers < 1) throw UsageError("--workers must be positive");
    try {
        options.checks = markov::parse_checks(checks);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    const std::filesystem::path dir(out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec || !std::filesystem::is_directory(dir)) throw UsageError("cannot create " + dir.string());
    std::ofstream records = open_output(dir / "records.jsonl");
    std::ofstream summary = open_output(dir / "summary.csv");

    summary << markov::summary_csv_header(options);
    std::size_t count = 0;
    std::size_t failed = 0;
    markov::run_sweep(options, [&](const markov::SweepRecord& r) {
        records << markov::to_json(r).dump() << '\n';
        records.flush();
        summary << markov::summary_csv_row(r, options);
        ++count;
        if (r.failed()) {
            ++failed;
            std::cerr << "counterexample: " << r.rho.str() << '\n';
        }
    });
    if (!records || !summary) throw UsageError("write to " + dir.string() + " failed");
    std::cout << count << " records, " << failed << " with failures\n";
    return failed == 0 ? 0 : exit_failure;
}

int cmd_entropy(const std::string& family, std::int64_t n, int grid)
{
    if (family != "fib") throw UsageError("only --family fib is supported");
    if (n < 2) throw UsageError("--n must be at least 2");
    if (grid < 2) throw UsageError("--grid must be at least 2");
    std::cout << markov::entropy_csv(markov::entropy_surface(n, grid), n);
    return 0;
}

int cmd_sail(const std::string& rho_text)
{
    const markov::Fraction rho = parse_rho(rho_text);
    if (rho.num() <= 0 || rho.num() >= rho.den()) throw UsageError("sail needs 0 < rho < 1, got " + rho.str());
    const auto report = markov::duality_check(markov::markov_polynomial(rho));
    std::cout << markov::to_json(report).dump(2) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Markov polynomials on the Conway topograph"};
    app.require_subcommand(1);

    std::string rho;
    std::string format = "grid";
    auto* compute = app.add_subcommand("compute", "numerator and weighted Newton polygon of M_rho");
    compute->add_option("rho", rho, "fraction a/b in [0,1]")->required();
    compute->add_option("--format", format)->check(CLI::IsMember({"grid", "json", "csv"}));

    bool printed_row1 = false;
    std::vector<std::string> skip;
    auto* selftest = app.add_subcommand("selftest", "reproduce the printed examples");
    selftest->add_flag("--row1-printed", printed_row1, "use the (b-2) row-one factor");
    selftest->add_option("--skip", skip, "module to skip (repeatable)");

    markov::SweepOptions sweep_options;
    std::string checks = "all";
    std::string out_dir = "sweep-out";
    auto* sweep = app.add_subcommand("sweep", "run conjecture checks on every a/b with a+b <= N");
    sweep->add_option("--max-sum", sweep_options.max_sum)->required();
    sweep->add_option("--checks", checks, "comma list or 'all'");
    sweep->add_option("--out", out_dir, "output directory");
    sweep->add_option("--workers", sweep_options.workers);
    sweep->add_option("--seed", sweep_options.seed);
    sweep->add_flag("--timings", sweep_options.timings, "record wall time per fraction");

    std::string family = "fib";
    std::int64_t n = 400;
    int grid = 50;
    auto* entropy = app.add_subcommand("entropy", "CSV surface of the limiting entropy");
    entropy->add_option("--family", family);
    entropy->add_option("--n", n);
    entropy->add_option("--grid", grid);

    std::string sail_rho;
    auto* sail = app.add_subcommand("sail", "sail report as JSON");
    sail->add_option("rho", sail_rho)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        if (*compute) return cmd_compute(rho, format);
        if (*selftest) return cmd_selftest(printed_row1, skip);
        if (*sweep) return cmd_sweep(sweep_options, checks, out_dir);
        if (*entropy) return cmd_entropy(family, n, grid);
        if (*sail) return cmd_sail(sail_rho);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_usage;
}
