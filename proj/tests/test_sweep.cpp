#include <doctest.h>

#include <sstream>

#include "markov/selftest.hpp"
#include "markov/serialize.hpp"
#include "markov/sweep.hpp"
#include "support.hpp"

using markov::Check;
using markov::Fraction;
using markov::Status;

namespace {

std::string sweep_text(markov::SweepOptions options)
{
    std::ostringstream os;
    os << markov::summary_csv_header(options);
    markov::run_sweep(options, [&](const markov::SweepRecord& r) {
        os << markov::to_json(r).dump() << '\n' << markov::summary_csv_row(r, options);
    });
    return os.str();
}

}  // namespace

TEST_SUITE("sweep")
{
    TEST_CASE("fraction enumeration")
    {
        CHECK(markov::sweep_fractions(20).size() == 63);
        CHECK(markov::sweep_fractions(40).size() == 244);
        CHECK(markov::sweep_fractions(20) == testing::proper_fractions(20));
        CHECK(markov::sweep_fractions(5) == std::vector<Fraction>{{1, 2}, {1, 3}, {1, 4}, {2, 3}});
    }

    TEST_CASE("check names")
    {
        CHECK(markov::parse_checks("all").size() == markov::all_checks().size());
        CHECK(markov::parse_checks("factor4,duality") == std::set<Check>{Check::factor4, Check::duality});
        CHECK_THROWS_AS((void)markov::parse_checks("factor5"), std::invalid_argument);
        CHECK_THROWS_AS((void)markov::parse_checks(""), std::invalid_argument);
    }

    TEST_CASE("factor four is vacuous exactly where the triangle is empty")
    {
        markov::SweepOptions options;
        options.max_sum = 7;
        options.checks = {Check::factor4};
        std::vector<std::pair<std::string, Status>> seen;
        markov::run_sweep(options, [&](const markov::SweepRecord& r) {
            seen.emplace_back(r.rho.str(), r.results.at(Check::factor4).status);
        });
        const std::vector<std::pair<std::string, Status>> want{
            {"1/2", Status::vacuous}, {"1/3", Status::vacuous}, {"1/4", Status::vacuous}, {"2/3", Status::pass},
            {"1/5", Status::vacuous}, {"1/6", Status::vacuous}, {"2/5", Status::pass},    {"3/4", Status::pass}};
        CHECK(seen == want);
    }

    TEST_CASE("every check passes up to a+b = 20")
    {
        markov::SweepOptions options;
        options.max_sum = 20;
        options.checks = {markov::parse_checks("all")};
        std::size_t records = 0;
        markov::run_sweep(options, [&](const markov::SweepRecord& r) {
            ++records;
            CAPTURE(r.rho.str());
            CHECK_FALSE(r.failed());
            CHECK(r.results.size() == markov::all_checks().size());
        });
        CHECK(records == 63);
    }

    TEST_CASE("output does not depend on the worker count")
    {
        markov::SweepOptions options;
        options.max_sum = 26;
        options.checks = markov::parse_checks("all");
        options.workers = 1;
        const std::string one = sweep_text(options);
        options.workers = 4;
        CHECK(sweep_text(options) == one);
        options.workers = 7;
        CHECK(sweep_text(options) == one);
    }

    TEST_CASE("records")
    {
        markov::Topograph engine;
        markov::SweepOptions options;
        options.checks = markov::parse_checks("saturation,location4");
        auto r = markov::evaluate_fraction(engine, {2, 3}, options);
        const auto j = markov::to_json(r);
        CHECK(j["rho"] == "2/3");
        CHECK(j["a_plus_b"] == 5);
        CHECK(j["markov_number"] == "29");
        CHECK(j["checks"]["saturation"]["status"] == "pass");
        CHECK_FALSE(j.contains("wall_ms"));
        CHECK(markov::summary_csv_header(options) == "rho,a_plus_b,markov_number,saturation,location4,first_counterexample\n");
        CHECK(markov::summary_csv_row(r, options) == "2/3,5,29,pass,pass,\"\"\n");

        r.results[Check::saturation] = {Status::fail, "missing (1,2)"};
        CHECK(r.failed());
        CHECK(markov::summary_csv_row(r, options) == "2/3,5,29,fail,pass,\"saturation missing (1,2)\"\n");

        options.timings = true;
        const auto timed = markov::evaluate_fraction(engine, {2, 3}, options);
        CHECK(markov::to_json(timed).contains("wall_ms"));
    }

    TEST_CASE("worker exceptions reach the caller")
    {
        markov::SweepOptions options;
        options.max_sum = 12;
        options.checks = {Check::saturation};
        options.workers = 3;
        int calls = 0;
        CHECK_THROWS_AS(markov::run_sweep(options,
                                          [&](const markov::SweepRecord&) {
                                              if (++calls == 5) throw std::runtime_error("sink");
                                          }),
                        std::runtime_error);
    }
}

TEST_SUITE("serialize")
{
    TEST_CASE("polynomial JSON round trip")
    {
        testing::Gen gen(13);
        for (int t = 0; t < 20; ++t) {
            const auto p = gen.homog(static_cast<int>(gen.uniform(0, 9)), 1000000);
            CHECK(markov::homog_from_json(markov::to_json(p)) == p);
        }
        CHECK_THROWS_AS((void)markov::homog_from_json(nlohmann::json{{"degree", 2}}), std::invalid_argument);
        const auto j = markov::to_json(markov::markov_polynomial({1, 5}));
        CHECK(j["coeffs"].size() == 16);
        long total = 0;
        for (const auto& c : j["coeffs"]) total += std::stol(c["c"].get<std::string>());
        CHECK(total == 89);
        CHECK(j["rho"] == "1/5");
        CHECK(j["denom"] == nlohmann::json::array({0, 4, 5}));
    }

    TEST_CASE("grid rendering")
    {
        const auto m = markov::markov_polynomial({2, 3});
        CHECK(markov::render_grid(m.numerator) == "1\n1 4\n. 4 6\n. . 5 4\n. . 1 2 1\n");
        CHECK(markov::render_grid(markov::markov_polynomial({0, 1}).numerator) == "1\n");
        CHECK(markov::describe(markov::markov_polynomial({0, 1})) == "x");
        CHECK(markov::describe(markov::markov_polynomial({1, 1})) == "(u + v)(x^2, y^2, z^2) / z");
        const std::string csv = markov::grid_csv(m.numerator);
        CHECK(csv.rfind("i,j,coeff\n2,0,1\n3,0,2\n", 0) == 0);
    }

    TEST_CASE("sail JSON")
    {
        const auto j = markov::to_json(markov::duality_check(markov::markov_polynomial({13, 18})));
        CHECK(j["empty"] == false);
        CHECK(j["B_lengths"] == nlohmann::json::array({2, 1}));
        CHECK(j["location4"]["M"] == "4");
        CHECK(j["checks"]["duality"] == true);
        const auto e = markov::to_json(markov::duality_check(markov::markov_polynomial({1, 7})));
        CHECK(e["empty"] == true);
        CHECK(e.contains("note"));
    }

    TEST_CASE("entropy CSV")
    {
        const auto csv = markov::entropy_csv(markov::entropy_surface(50, 4), 50);
        CHECK(csv.rfind("xi,eta,F,empirical_n50\n", 0) == 0);
        CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + 6);
    }
}

TEST_SUITE("selftest")
{
    TEST_CASE("a clean build passes everything")
    {
        const auto entries = markov::run_selftest();
        CHECK(entries.size() > 50);
        std::set<std::string> modules;
        for (const auto& e : entries) {
            CAPTURE(e.name);
            CHECK(e.status == markov::SelftestStatus::pass);
            modules.insert(e.module);
        }
        CHECK(modules.size() == markov::selftest_modules().size());
    }

    TEST_CASE("the printed row-one factor fails exactly once")
    {
        markov::SelftestOptions options;
        options.printed_row1 = true;
        std::vector<markov::SelftestEntry> failures;
        for (const auto& e : markov::run_selftest(options)) {
            if (e.status == markov::SelftestStatus::fail) failures.push_back(e);
        }
        REQUIRE(failures.size() == 1);
        CHECK(failures[0].module == "analysis");
        CHECK(failures[0].name.find("A_31") != std::string::npos);
    }

    TEST_CASE("skipped modules are reported")
    {
        markov::SelftestOptions options;
        options.skip = {"sails"};
        std::size_t skipped = 0;
        for (const auto& e : markov::run_selftest(options)) {
            if (e.module == "sails") {
                CHECK(e.status == markov::SelftestStatus::skip);
                ++skipped;
            } else {
                CHECK(e.status == markov::SelftestStatus::pass);
            }
        }
        CHECK(skipped > 0);
        CHECK(markov::format_selftest(markov::run_selftest(options)).find("skipped") != std::string::npos);
    }
}
