#include <doctest.h>

#include "markov/analysis.hpp"
#include "markov/farey.hpp"
#include "markov/sails.hpp"
#include "support.hpp"

using markov::BigInt;
using markov::Fraction;
using markov::LatticePoint;

namespace {

std::int64_t cross(const LatticePoint& o, const LatticePoint& p, const LatticePoint& q)
{
    return (p.i - o.i) * (q.j - o.j) - (p.j - o.j) * (q.i - o.i);
}

/*
 * Klein-coordinate check: the chain starting at `first` convergent index,
 * stepping by two and closed with (a, b), supports every lattice point of
 * the box lying strictly on its side of y = (b/a) x.
 */
bool chain_supports(const markov::ContinuedFraction& cf, std::int64_t a, std::int64_t b, int first, int sign)
{
    std::vector<LatticePoint> chain;
    for (int k = first; k <= cf.length(); k += 2) chain.push_back({cf.convergent(k).q, cf.convergent(k).p});
    if (!(chain.back() == LatticePoint{a, b})) chain.push_back({a, b});
    for (std::size_t e = 1; e < chain.size(); ++e) {
        const auto& p = chain[e - 1];
        const auto& q = chain[e];
        const std::int64_t origin_side = cross(p, q, {0, 0});
        if (origin_side == 0) return false;
        for (std::int64_t x = 0; x <= a; ++x) {
            for (std::int64_t y = 0; y <= b; ++y) {
                const std::int64_t side = a * y - b * x;
                if (side * sign <= 0) continue;
                const std::int64_t s = cross(p, q, {x, y});
                if (s != 0 && (s > 0) == (origin_side > 0)) return false;
            }
        }
    }
    return true;
}

}  // namespace

TEST_SUITE("sails")
{
    TEST_CASE("integer length and lattice index")
    {
        CHECK(markov::integer_length({13, 1}, {11, 3}) == 2);
        CHECK(markov::integer_length({11, 3}, {8, 7}) == 1);
        CHECK(markov::integer_length({0, 0}, {5, 0}) == 5);
        CHECK(markov::lattice_index({0, 0}, {1, 0}, {0, 1}) == 1);
        CHECK(markov::lattice_index({0, 0}, {2, 1}, {1, 2}) == 3);
        CHECK(markov::lattice_index({0, 0}, {4, 2}, {1, 2}) == 3);
        CHECK_THROWS_AS((void)markov::lattice_index({0, 0}, {1, 1}, {3, 3}), std::invalid_argument);
        CHECK(markov::segment_points({0, 0}, {4, 2}) == std::vector<LatticePoint>{{0, 0}, {2, 1}, {4, 2}});
    }

    TEST_CASE("the 13/18 sail")
    {
        const auto s = markov::build_sail({13, 18});
        CHECK(s.quotients == std::vector<std::int64_t>{1, 2, 1, 1, 2});
        CHECK(s.A_vertices[0] == LatticePoint{1, 18});
        CHECK(s.A_vertices[1] == LatticePoint{1, 17});
        CHECK(s.A_vertices[2] == LatticePoint{3, 14});
        CHECK(s.B_vertices == std::vector<LatticePoint>{{13, 1}, {11, 3}, {8, 7}});
        CHECK(markov::integer_length(s.B_vertices[0], s.B_vertices[1]) == 2);
        CHECK(markov::integer_length(s.B_vertices[1], s.B_vertices[2]) == 1);
        CHECK(markov::integer_length(s.A_vertices[1], s.A_vertices[2]) == 1);
        CHECK(markov::integer_length(s.A_vertices[2], s.A_vertices[3]) == 2);
        CHECK(markov::lattice_index(s.A_vertices[1], s.A_vertices[0], s.A_vertices[2]) == 2);
    }

    TEST_CASE("the 13/18 M-values")
    {
        const auto r = markov::duality_check(markov::markov_polynomial({13, 18}));
        const auto at = [&r](std::int64_t i, std::int64_t j) { return r.m_values.at({i, j}); };
        CHECK(at(8, 7) == 4);
        CHECK(at(3, 14) == 8);
        CHECK(at(11, 3) == 12);
        CHECK(at(1, 17) == 20);
        CHECK(at(12, 2) == 32);
        CHECK(r.location4.pass());
        CHECK(r.location4.point == LatticePoint{8, 7});
        CHECK(r.duality_ok);
        CHECK(r.progressions_ok);
        CHECK(r.lengths_ok);
        CHECK(r.angles_ok);
        CHECK(r.hull_ok);
        CHECK_FALSE(r.duality_sign_flipped);
        CHECK(r.checked_segments() > 0);
    }

    TEST_CASE("the 2/3 sail")
    {
        const auto r = markov::duality_check(markov::markov_polynomial({2, 3}));
        CHECK(r.m_values.size() == 1);
        CHECK(r.m_values.at({1, 2}) == 4);
        CHECK(r.location4.pass());
        CHECK(r.location4.point == LatticePoint{1, 2});
    }

    TEST_CASE("sails of 1/n are empty and a = 0 is rejected")
    {
        for (std::int64_t n = 2; n <= 12; ++n) {
            CHECK(markov::build_sail({1, n}).empty());
            const auto r = markov::duality_check(markov::markov_polynomial({1, n}));
            CHECK(r.empty());
            CHECK(r.m_values.empty());
        }
        CHECK_THROWS_AS((void)markov::build_sail({0, 1}), std::invalid_argument);
        CHECK_THROWS_AS((void)markov::build_sail({3, 2}), std::invalid_argument);
    }

    TEST_CASE("sail points are the mapped convergents and support the lattice")
    {
        for (const auto& rho : testing::proper_fractions(40, 2)) {
            const std::int64_t a = rho.num();
            const std::int64_t b = rho.den();
            const auto sail = markov::build_sail(rho);
            const auto cf = markov::continued_fraction({b, a});
            CAPTURE(rho.str());
            for (int k = -1; k <= cf.length(); ++k) {
                const auto& c = cf.convergent(k);
                const LatticePoint want = k % 2 != 0 ? LatticePoint{c.q, b - c.p} : LatticePoint{a - c.q, c.p};
                CHECK(sail.point(k) == want);
                CHECK((want.i >= 0 && want.i <= a && want.j >= 0 && want.j <= b));
            }
            CHECK(chain_supports(cf, a, b, 0, 1));
            CHECK(chain_supports(cf, a, b, -1, -1));
            CHECK(markov::sail_hull_check(rho));
        }
    }

    TEST_CASE("edge-angle duality for a+b <= 60")
    {
        for (const auto& rho : testing::proper_fractions(60, 2)) {
            const auto sail = markov::build_sail(rho);
            CAPTURE(rho.str());
            for (const auto& seg : sail.segments) {
                CHECK(seg.length == sail.quotients[static_cast<std::size_t>(seg.k - 1)]);
                CHECK(static_cast<std::int64_t>(seg.points.size()) == seg.length + 1);
                CHECK(markov::integer_length(seg.from, seg.to) == seg.length);
            }
            for (const auto& a : markov::sail_angles(sail)) CHECK(a.index == a.quotient);
        }
    }

    TEST_CASE("duality and location of four for a+b <= 40")
    {
        markov::Topograph engine;
        for (const auto& rho : testing::proper_fractions(40, 2)) {
            const auto r = markov::duality_check(engine.markov_polynomial(rho));
            CAPTURE(rho.str());
            CHECK(r.progressions_ok);
            CHECK(r.duality_ok);
            CHECK(r.location4.pass());
            for (const auto& s : r.segments) {
                if (s.status == markov::SegmentStatus::checked) CHECK(*s.difference == -*s.dual_value);
            }
        }
    }

    TEST_CASE("reconstruction from the location of four")
    {
        markov::Topograph engine;
        for (const auto& rho : testing::proper_fractions(40, 2)) {
            const auto m = engine.markov_polynomial(rho);
            const auto sail = markov::build_sail(rho);
            const auto rebuilt = markov::reconstruct_m_values(sail);
            CAPTURE(rho.str());
            CHECK_FALSE(rebuilt.empty());
            for (const auto& [p, v] : rebuilt) {
                CHECK(markov::in_critical_triangle(rho, p));
                CHECK(v == m.numerator.coeff(static_cast<int>(p.i), static_cast<int>(p.j)));
            }
            // everything off the first A edge is reached
            const auto r = markov::duality_check(m);
            for (const auto& s : r.segments) {
                if (s.k == 1) continue;
                for (const auto& p : s.interior) CHECK(rebuilt.count(p) == 1);
            }
        }
    }

    TEST_CASE("Pell sails step by four")
    {
        markov::Topograph engine;
        for (std::int64_t n = 2; n <= 15; ++n) {
            const auto r = markov::duality_check(engine.markov_polynomial({n, n + 1}));
            CAPTURE(n);
            CHECK(r.progressions_ok);
            std::vector<BigInt> along;
            for (std::int64_t m = 1; m < n; ++m) along.push_back(r.m_values.at({m, n + 1 - m}));
            for (std::size_t k = 1; k < along.size(); ++k) CHECK(along[k] - along[k - 1] == 4);
        }
    }

    TEST_CASE("the first A edge is reported but not judged")
    {
        const auto r = markov::duality_check(markov::markov_polynomial({4, 13}));
        REQUIRE_FALSE(r.segments.empty());
        CHECK(r.segments.front().k == 1);
        CHECK(r.segments.front().status == markov::SegmentStatus::initial_edge);
        CHECK(r.segments.front().values.size() == 3);
        CHECK(r.progressions_ok);
    }
}
