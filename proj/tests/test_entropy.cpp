#include <doctest.h>

#include <cmath>

#include "markov/entropy.hpp"
#include "markov/special.hpp"
#include "support.hpp"

namespace {

const double golden_value = 2 * std::log((1 + std::sqrt(5.0)) / 2);

}  // namespace

TEST_SUITE("entropy")
{
    TEST_CASE("binary entropy")
    {
        CHECK(markov::shannon_H(0) == 0);
        CHECK(markov::shannon_H(1) == 0);
        CHECK(markov::shannon_H(0.5) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
        CHECK(markov::shannon_H(0.2) == doctest::Approx(0.5004024235).epsilon(1e-9));
        CHECK_THROWS_AS((void)markov::shannon_H(-0.1), std::domain_error);
        CHECK_THROWS_AS((void)markov::shannon_H(1.5), std::domain_error);
    }

    TEST_CASE("entropy surface values and symmetry")
    {
        const auto peak = markov::fib_entropy_peak();
        CHECK(std::abs(markov::fib_entropy(peak.xi, peak.eta) - golden_value) < 1e-12);
        CHECK(golden_value == doctest::Approx(0.9624236501));
        CHECK(std::abs(markov::fib_entropy(0.2, 0.2) - markov::fib_entropy(0.2, 0.6)) < 1e-14);
        testing::Gen gen(1);
        for (int t = 0; t < 1000; ++t) {
            const double xi = gen.real(0.001, 0.998);
            const double eta = gen.real(0.0005, 1 - xi - 0.0005);
            CHECK(std::abs(markov::fib_entropy(xi, eta) - markov::fib_entropy(xi, 1 - xi - eta)) < 1e-13);
        }
        CHECK_THROWS_AS((void)markov::fib_entropy(0.5, 0.5), std::domain_error);
        CHECK_THROWS_AS((void)markov::fib_entropy(0, 0.5), std::domain_error);
    }

    TEST_CASE("scaled polygon membership")
    {
        const markov::ScaledPolygon fib{0.0};
        CHECK(fib.contains(0.2, 0.2));
        CHECK_FALSE(fib.contains(0.7, 0.4));
        const markov::ScaledPolygon half{0.5};
        CHECK(half.contains(0.4, 0.4));
        CHECK_FALSE(half.contains(0.1, 0.1));
    }

    TEST_CASE("gradient and Hessian agree with differences")
    {
        const auto g = markov::fib_entropy_gradient(0.3, 0.25);
        const double h = 1e-6;
        CHECK(g.xi == doctest::Approx((markov::fib_entropy(0.3 + h, 0.25) - markov::fib_entropy(0.3 - h, 0.25)) / (2 * h)).epsilon(1e-7));
        CHECK(g.eta == doctest::Approx((markov::fib_entropy(0.3, 0.25 + h) - markov::fib_entropy(0.3, 0.25 - h)) / (2 * h)).epsilon(1e-7));
        const auto peak = markov::fib_entropy_peak();
        const auto gp = markov::fib_entropy_gradient(peak.xi, peak.eta);
        CHECK(std::abs(gp.xi) < 1e-12);
        CHECK(std::abs(gp.eta) < 1e-12);

        CHECK(markov::fib_entropy_hessian_det(0.2, 0.2) == doctest::Approx(1 / (0.2 * 0.4 * 0.8 * 0.6)));
        CHECK(markov::fib_entropy_hessian_det(0.2, 0.2) == doctest::Approx(26.0417).epsilon(1e-5));
        CHECK(markov::fib_entropy_hessian(0.3, 0.3).xx < 0);
        const auto hs = markov::fib_entropy_hessian(0.2, 0.2);
        CHECK(hs.det() == doctest::Approx(markov::fib_entropy_hessian_det(0.2, 0.2)).epsilon(1e-12));
    }

    TEST_CASE("Hessian report on the interior grid")
    {
        const auto r = markov::hessian_checks(20);
        CHECK(r.points > 100);
        CHECK(r.concave);
        CHECK(r.max_entry_error < 1e-4);
        CHECK(r.max_det_error < 1e-4);
        CHECK(r.argmax_error < 1e-6);
        CHECK(r.value_error < 1e-9);
        CHECK(r.pass());
    }

    TEST_CASE("maximum")
    {
        const auto m = markov::maximize_fib_entropy();
        const auto peak = markov::fib_entropy_peak();
        CHECK(std::hypot(m.xi - peak.xi, m.eta - peak.eta) < 1e-6);
        CHECK(std::abs(m.value - golden_value) < 1e-9);
        CHECK(m.xi == doctest::Approx(0.44721).epsilon(1e-4));
        CHECK(m.eta == doctest::Approx(0.27639).epsilon(1e-4));
    }

    TEST_CASE("empirical entropy uses the exact coefficient")
    {
        for (std::int64_t n = 3; n <= 60; n += 7) {
            for (const auto& [xi, eta] : std::vector<std::pair<double, double>>{{0.2, 0.2}, {0.3, 0.4}, {0.45, 0.27}}) {
                const auto s = markov::empirical_entropy(n, xi, eta);
                const markov::BigInt a = markov::fib_coeff(n - 1, s.i, s.j);
                REQUIRE(a > 0);
                CHECK(s.value == doctest::Approx(markov::log_bigint(a) / static_cast<double>(n)).epsilon(1e-10));
            }
        }
    }

    TEST_CASE("empirical entropy examples")
    {
        CHECK(std::abs(markov::empirical_entropy(100, 0.2, 0.2).value - markov::fib_entropy(0.2, 0.2)) < 0.1);
        CHECK(std::abs(markov::empirical_entropy(10000, 0.4472, 0.2764).value - golden_value) < 0.005);
        CHECK(std::abs(markov::binomial_empirical_entropy(500, 0.3) - markov::shannon_H(0.3)) < 0.05);
    }

    TEST_CASE("empirical entropy converges monotonically")
    {
        for (const auto& [xi, eta] : std::vector<std::pair<double, double>>{{0.2, 0.2}, {0.3, 0.4}}) {
            double last = 1e9;
            for (const std::int64_t n : {50, 100, 200, 400, 800}) {
                const double gap = std::abs(markov::empirical_entropy(n, xi, eta).value - markov::fib_entropy(xi, eta));
                CAPTURE(n);
                CHECK(gap < last);
                last = gap;
            }
            CHECK(last < 0.05);
        }
    }

    TEST_CASE("clamping lands in the polygon")
    {
        testing::Gen gen(4);
        for (int t = 0; t < 300; ++t) {
            const std::int64_t n = gen.uniform(3, 200);
            const double xi = gen.real(0.001, 0.99);
            const double eta = gen.real(0.001, 0.999 - xi);
            const auto [i, j] = markov::clamp_to_fib_polygon(n, xi, eta);
            CHECK(markov::fib_coeff(n - 1, i, j) > 0);
        }
    }

    TEST_CASE("surface grid")
    {
        const auto rows = markov::entropy_surface(400, 50);
        CHECK(rows.size() == 1225);
        for (const auto& r : rows) {
            CHECK(r.xi > 0);
            CHECK(r.eta > 0);
            CHECK(r.xi + r.eta < 1);
            CHECK(r.F <= golden_value + 1e-12);
        }
    }

    TEST_CASE("coefficient growth stays under the sanity bound")
    {
        markov::Topograph engine;
        for (const auto& rho : testing::proper_fractions(40)) {
            const auto b = markov::entropy_bound_check(engine.markov_polynomial(rho));
            CAPTURE(rho.str());
            CHECK(b.pass());
        }
    }
}
