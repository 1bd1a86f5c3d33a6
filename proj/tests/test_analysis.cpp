#include <doctest.h>

#include <set>
#include <stdexcept>

#include "markov/analysis.hpp"
#include "markov/binomial.hpp"
#include "markov/golden.hpp"
#include "support.hpp"

using markov::BigInt;
using markov::Fraction;
using markov::LatticePoint;
using markov::Slice;
using markov::SliceFamily;
using markov::SliceFormula;

namespace {

std::vector<BigInt> ints(std::initializer_list<long> xs)
{
    return {xs.begin(), xs.end()};
}

// Exact rational test of i/a + j/b >= 1 and i + j <= a + b - 1.
std::set<LatticePoint> brute_polygon(std::int64_t a, std::int64_t b)
{
    std::set<LatticePoint> out;
    for (std::int64_t i = 0; i <= a + b; ++i) {
        for (std::int64_t j = 0; j <= a + b; ++j) {
            const markov::BigRational s = markov::BigRational(i, a) + markov::BigRational(j, b);
            if (s >= 1 && i + j <= a + b - 1) out.insert({i, j});
        }
    }
    return out;
}

std::vector<BigInt> line_values(const markov::MarkovPolynomial& m, const std::vector<LatticePoint>& pts)
{
    std::vector<BigInt> out;
    for (const auto& p : pts) out.push_back(m.numerator.coeff(static_cast<int>(p.i), static_cast<int>(p.j)));
    return out;
}

}  // namespace

TEST_SUITE("analysis")
{
    TEST_CASE("predicted polygon examples")
    {
        const auto p23 = markov::predicted_polygon({2, 3});
        CHECK(p23.lattice_points == std::vector<LatticePoint>{{2, 0}, {3, 0}, {4, 0}, {2, 1}, {3, 1},
                                                               {1, 2}, {2, 2}, {0, 3}, {1, 3}, {0, 4}});
        CHECK(markov::predicted_polygon({1, 1}).lattice_points == std::vector<LatticePoint>{{1, 0}, {0, 1}});
        const auto p15 = markov::predicted_polygon({1, 5});
        CHECK(p15.lattice_points.size() == 16);
        for (const auto& p : p15.lattice_points) CHECK((p.i >= 1 || p == LatticePoint{0, 5}));
    }

    TEST_CASE("predicted polygon matches rational enumeration and its vertex set")
    {
        for (const auto& rho : testing::proper_fractions(40)) {
            const std::int64_t a = rho.num();
            const std::int64_t b = rho.den();
            const auto poly = markov::predicted_polygon(rho);
            CAPTURE(rho.str());
            const std::set<LatticePoint> pts(poly.lattice_points.begin(), poly.lattice_points.end());
            CHECK(pts == brute_polygon(a, b));
            const std::set<LatticePoint> allowed{{a, 0}, {a + b - 1, 0}, {0, b}, {0, a + b - 1}};
            for (const auto& v : poly.vertices()) CHECK(allowed.count(v) == 1);
        }
    }

    TEST_CASE("saturation examples")
    {
        const auto v23 = markov::saturation_check(markov::markov_polynomial({2, 3}));
        CHECK(v23.saturated());
        CHECK(v23.polygon_points == 10);
        CHECK(v23.support_points == 10);
        const auto v13 = markov::saturation_check(markov::markov_polynomial({1, 3}));
        CHECK(v13.saturated());
        CHECK(v13.polygon_points == 7);
        CHECK(markov::saturation_check(markov::markov_polynomial({1, 1})).saturated());
    }

    TEST_CASE("saturation detects missing and extra points")
    {
        auto m = markov::markov_polynomial({2, 3});
        m.numerator.set_coeff(1, 2, 0);
        auto v = markov::saturation_check(m);
        CHECK(v.missing == std::vector<LatticePoint>{{1, 2}});
        CHECK(v.extra.empty());
        m.numerator.set_coeff(1, 2, 4);
        m.numerator.set_coeff(0, 0, 7);
        v = markov::saturation_check(m);
        CHECK(v.extra == std::vector<LatticePoint>{{0, 0}});
        CHECK_FALSE(markov::support_hull_matches(m));
    }

    TEST_CASE("support hull equals the polygon for a+b <= 40")
    {
        markov::Topograph engine;
        for (const auto& rho : testing::proper_fractions(40)) {
            const auto m = engine.markov_polynomial(rho);
            CAPTURE(rho.str());
            CHECK(markov::support_hull_matches(m));
            CHECK(markov::saturation_check(m).extra.empty());
        }
    }

    TEST_CASE("slice examples")
    {
        const auto m23 = markov::markov_polynomial({2, 3});
        CHECK(markov::slice(m23, SliceFamily::T, 0) == Slice{0, ints({1, 4, 6, 4, 1})});
        CHECK(markov::slice(m23, SliceFamily::R, 1) == Slice{2, ints({5, 4})});
        CHECK(markov::slice(markov::markov_polynomial({1, 5}), SliceFamily::S, 1) ==
              Slice{0, ints({1, 2, 3, 4, 5})});
        CHECK(markov::slice(m23, SliceFamily::R, 9).values.empty());
    }

    TEST_CASE("predicted slice examples")
    {
        CHECK(markov::predicted_slice({2, 3}, SliceFormula::T0) == Slice{0, ints({1, 4, 6, 4, 1})});
        CHECK(markov::predicted_slice({2, 3}, SliceFormula::R1) == Slice{2, ints({5, 4})});
        CHECK(markov::predicted_slice({1, 5}, SliceFormula::S1_special) == Slice{0, ints({1, 2, 3, 4, 5})});
        CHECK_THROWS_AS((void)markov::predicted_slice({3, 5}, SliceFormula::S1_special), std::invalid_argument);
    }

    TEST_CASE("slices agree with their closed forms for a+b <= 30")
    {
        markov::Topograph engine;
        const std::vector<std::pair<SliceFormula, std::pair<SliceFamily, int>>> pairs{
            {SliceFormula::S0, {SliceFamily::S, 0}}, {SliceFormula::R0, {SliceFamily::R, 0}},
            {SliceFormula::R1, {SliceFamily::R, 1}}, {SliceFormula::T0, {SliceFamily::T, 0}},
            {SliceFormula::T1, {SliceFamily::T, 1}}, {SliceFormula::T2, {SliceFamily::T, 2}}};
        int compared = 0;
        for (const auto& rho : testing::proper_fractions(30)) {
            const auto m = engine.markov_polynomial(rho);
            for (const auto& [formula, line] : pairs) {
                CAPTURE(rho.str());
                CAPTURE(static_cast<int>(formula));
                try {
                    const Slice want = markov::predicted_slice(rho, formula);
                    CHECK(markov::slice(m, line.first, line.second) == want);
                    ++compared;
                } catch (const std::domain_error&) {
                }
            }
        }
        CHECK(compared > 6 * 100);
    }

    TEST_CASE("special column for 1/n and 2/(2n-1)")
    {
        for (std::int64_t n = 2; n <= 15; ++n) {
            CAPTURE(n);
            const Fraction f1(1, n);
            CHECK(markov::slice(markov::markov_polynomial(f1), SliceFamily::S, 1) ==
                  markov::predicted_slice(f1, SliceFormula::S1_special));
            const Fraction f2(2, 2 * n - 1);
            CHECK(markov::slice(markov::markov_polynomial(f2), SliceFamily::S, 1) ==
                  markov::predicted_slice(f2, SliceFormula::S1_special));
        }
    }

    TEST_CASE("boundary coefficient examples")
    {
        CHECK(markov::boundary_coefficient({2, 3}, markov::BoundaryLine::row1, 3) == 4);
        CHECK(markov::boundary_coefficient({2, 3}, markov::BoundaryLine::row1, 3, true) == 6);
        CHECK(markov::boundary_coefficient({2, 3}, markov::BoundaryLine::diag2, 2) == 5);
        CHECK(markov::boundary_coefficient({1, 5}, markov::BoundaryLine::row0, 3) == 6);
        CHECK_THROWS_AS((void)markov::boundary_coefficient({2, 3}, markov::BoundaryLine::row0, 1),
                        std::invalid_argument);
    }

    TEST_CASE("boundary coefficients match every computed grid for a+b <= 30")
    {
        markov::Topograph engine;
        const std::vector<markov::BoundaryLine> lines{markov::BoundaryLine::col0,  markov::BoundaryLine::row0,
                                                      markov::BoundaryLine::row1,  markov::BoundaryLine::diag1,
                                                      markov::BoundaryLine::diag2, markov::BoundaryLine::diag3};
        for (const auto& rho : testing::proper_fractions(30)) {
            const auto m = engine.markov_polynomial(rho);
            const auto poly = markov::predicted_polygon(rho);
            const std::int64_t d = poly.degree();
            for (const auto line : lines) {
                for (std::int64_t index = 0; index <= d; ++index) {
                    const LatticePoint p = markov::boundary_point(rho, line, index);
                    if (!poly.contains(p.i, p.j)) continue;
                    CAPTURE(rho.str());
                    CAPTURE(static_cast<int>(line));
                    CAPTURE(index);
                    CHECK(markov::boundary_coefficient(rho, line, index) ==
                          m.numerator.coeff(static_cast<int>(p.i), static_cast<int>(p.j)));
                    if (line == markov::BoundaryLine::diag1) CHECK(m.numerator.coeff(static_cast<int>(p.i), static_cast<int>(p.j)) == markov::binom(d, p.i));
                }
            }
        }
    }

    TEST_CASE("binomial conventions")
    {
        CHECK(markov::binom(-1, 0) == 1);
        CHECK(markov::binom(-3, 0) == 1);
        CHECK(markov::binom(-1, 1) == 0);
        CHECK(markov::binom(4, 5) == 0);
        CHECK(markov::binom(4, -1) == 0);
        CHECK(markov::binom(6, 3) == 20);
    }

    TEST_CASE("log-concavity of sequences")
    {
        CHECK(markov::log_concavity_violation(ints({1, 1, 2})) == std::optional<std::size_t>{1});
        CHECK_FALSE(markov::log_concavity_violation(ints({2, 9, 12, 5})).has_value());
        CHECK_FALSE(markov::log_concavity_violation(ints({1, 6, 15, 20, 15, 6, 1})).has_value());
        CHECK_FALSE(markov::log_concavity_violation(ints({3})).has_value());
        CHECK(markov::log_concavity_violation(ints({4, 5, 5, 7})) == std::optional<std::size_t>{2});
    }

    TEST_CASE("log-concavity examples")
    {
        const auto m15 = markov::markov_polynomial({1, 5});
        const auto row = markov::log_concavity_line(m15, markov::Direction::row, 1);
        CHECK(row.pass());
        CHECK(line_values(m15, markov::polygon_line(markov::predicted_polygon({1, 5}), markov::Direction::row, 1)) ==
              ints({2, 9, 12, 5}));
        auto broken = markov::markov_polynomial({2, 3});
        broken.numerator.set_coeff(3, 1, 40);
        const auto v = markov::log_concavity_check(broken);
        REQUIRE_FALSE(v.pass());
        CHECK(v.violation->points.size() == 3);
    }

    TEST_CASE("log-concavity on the proven lines for a+b <= 40")
    {
        markov::Topograph engine;
        for (const auto& rho : testing::proper_fractions(40)) {
            const auto m = engine.markov_polynomial(rho);
            const std::int64_t d = rho.num() + rho.den() - 1;
            CAPTURE(rho.str());
            CHECK(markov::log_concavity_line(m, markov::Direction::row, 1).pass());
            CHECK(markov::log_concavity_line(m, markov::Direction::diagonal, d - 1).pass());
            if (3 * rho.den() >= 5 * rho.num()) {
                CHECK(markov::log_concavity_line(m, markov::Direction::diagonal, d - 2).pass());
            }
        }
    }

    TEST_CASE("polygon lines are contiguous")
    {
        const auto poly = markov::predicted_polygon({3, 8});
        for (const auto dir : {markov::Direction::row, markov::Direction::column, markov::Direction::diagonal}) {
            for (std::int64_t line = 0; line <= poly.degree(); ++line) {
                const auto pts = markov::polygon_line(poly, dir, line);
                for (std::size_t k = 1; k < pts.size(); ++k) {
                    CHECK(std::abs(pts[k].i - pts[k - 1].i) + std::abs(pts[k].j - pts[k - 1].j) <= 2);
                }
            }
        }
    }

    TEST_CASE("critical triangle and factor four")
    {
        CHECK(markov::critical_triangle({2, 3}) == std::vector<LatticePoint>{{1, 2}});
        const auto v = markov::factor4_check(markov::markov_polynomial({2, 3}));
        CHECK(v.pass());
        CHECK_FALSE(v.vacuous());
        for (std::int64_t n = 2; n <= 20; ++n) {
            const auto f = markov::factor4_check(markov::markov_polynomial({1, n}));
            CHECK(f.vacuous());
            CHECK(f.pass());
        }
        auto broken = markov::markov_polynomial({2, 3});
        broken.numerator.set_coeff(1, 2, 6);
        CHECK(markov::factor4_check(broken).offending == std::vector<LatticePoint>{{1, 2}});

        const auto m = markov::markov_polynomial({13, 18});
        for (const auto& [i, j, c] : std::vector<std::array<int, 3>>{{8, 7, 4}, {3, 14, 8}, {11, 3, 12}, {1, 17, 20}, {12, 2, 32}}) {
            CHECK(m.numerator.coeff(i, j) == c);
        }
        CHECK(markov::factor4_check(m).pass());
    }

    TEST_CASE("critical triangle matches its definition")
    {
        for (const auto& rho : testing::proper_fractions(30)) {
            std::vector<LatticePoint> want;
            for (std::int64_t j = 0; j < rho.den(); ++j) {
                for (std::int64_t i = 0; i < rho.num(); ++i) {
                    if (rho.den() * i + rho.num() * j > rho.num() * rho.den()) want.push_back({i, j});
                }
            }
            CHECK(markov::critical_triangle(rho) == want);
            const auto poly = markov::predicted_polygon(rho);
            for (const auto& p : want) CHECK(poly.contains(p.i, p.j));
        }
    }
}
