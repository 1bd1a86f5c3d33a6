#include "markov/selftest.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "markov/analysis.hpp"
#include "markov/entropy.hpp"
#include "markov/farey.hpp"
#include "markov/golden.hpp"
#include "markov/sails.hpp"
#include "markov/special.hpp"
#include "markov/topograph.hpp"

namespace markov {

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

Outcome expect(bool ok, std::string detail = {})
{
    return {ok, ok ? std::string{} : std::move(detail)};
}

template <typename T>
std::string join(const std::vector<T>& xs)
{
    std::ostringstream os;
    for (std::size_t k = 0; k < xs.size(); ++k) os << (k ? "," : "") << xs[k];
    return os.str();
}

HomogPoly golden_grid(int degree, const auto& weights)
{
    HomogPoly p(degree);
    for (const auto& w : weights) p.set_coeff(w.i, w.j, w.c);
    return p;
}

std::vector<BigInt> ints(std::initializer_list<long> xs)
{
    return {xs.begin(), xs.end()};
}

}  // namespace

const std::vector<std::string>& selftest_modules()
{
    static const std::vector<std::string> modules{"farey", "polynomial", "topograph", "analysis",
                                                  "special", "sails",     "entropy"};
    return modules;
}

std::vector<SelftestEntry> run_selftest(const SelftestOptions& options)
{
    std::vector<SelftestEntry> out;
    Topograph engine;
    const auto run = [&](const std::string& module, const std::string& name, const std::function<Outcome()>& fn) {
        SelftestEntry e{module, name, SelftestStatus::pass, {}};
        if (options.skip.count(module) != 0) {
            e.status = SelftestStatus::skip;
        } else {
            try {
                const Outcome o = fn();
                e.status = o.pass ? SelftestStatus::pass : SelftestStatus::fail;
                e.detail = o.detail;
            } catch (const std::exception& ex) {
                e.status = SelftestStatus::fail;
                e.detail = ex.what();
            }
        }
        out.push_back(std::move(e));
    };
    const auto P = [&engine](int a, int b) -> const HomogPoly& { return engine.numerator(Fraction(a, b)); };
    const auto M = [&engine](int a, int b) { return engine.markov_polynomial(Fraction(a, b)); };

    // farey
    run("farey", "mediant 1/2 + 1/1 = 2/3", [] { return expect(mediant({1, 2}, {1, 1}) == Fraction(2, 3)); });
    run("farey", "mediant 1/2 + 1/3 = 2/5", [] { return expect(mediant({1, 2}, {1, 3}) == Fraction(2, 5)); });
    run("farey", "5/3 = [1,1,2] with convergents 1/1, 2/1, 5/3", [] {
        const auto cf = continued_fraction({5, 3});
        return expect(cf.quotients() == std::vector<std::int64_t>{1, 1, 2} && cf.convergent(1) == Convergent{1, 1} &&
                          cf.convergent(2) == Convergent{2, 1} && cf.convergent(3) == Convergent{5, 3},
                      join(cf.quotients()));
    });
    run("farey", "18/13 = [1,2,1,1,2] with convergents 1/1, 3/2, 4/3, 7/5, 18/13", [] {
        const auto cf = continued_fraction({18, 13});
        const std::vector<Convergent> want{{1, 1}, {3, 2}, {4, 3}, {7, 5}, {18, 13}};
        bool ok = cf.quotients() == std::vector<std::int64_t>{1, 2, 1, 1, 2};
        for (int k = 1; ok && k <= 5; ++k) ok = cf.convergent(k) == want[static_cast<std::size_t>(k - 1)];
        return expect(ok, join(cf.quotients()));
    });

    // polynomial
    run("polynomial", "P_2/3(1,1,1) = 29", [&] { return expect(eval_ones(P(2, 3)) == 29); });
    run("polynomial", "P_1/5(1,1,1) = 89", [&] { return expect(eval_ones(P(1, 5)) == 89); });
    run("polynomial", "P_1/2 at (1,1,1) = 5", [&] { return expect(eval_rational(P(1, 2), 1, 1, 1) == 5); });
    run("polynomial", "M_1/1 = x^2/z + y^2/z", [&] {
        LaurentPoly3 want;
        want.add_term({2, 0, -1}, 1);
        want.add_term({0, 2, -1}, 1);
        return expect(laurent_from_markov(M(1, 1)) == want);
    });
    run("polynomial", "Vieta step from (x, M_1/1) over y gives M_1/2", [&] {
        const auto x = LaurentPoly3::variable(0);
        const auto m11 = laurent_from_markov(M(1, 1));
        const auto next = exact_div(x * x + m11 * m11, LaurentPoly3::variable(1));
        // ((x^2 + y^2)^2 + x^2 z^2) / (y z^2)
        LaurentPoly3 want;
        for (const auto& [e, c] : std::vector<std::pair<LaurentPoly3::Exponent, long>>{
                 {{4, -1, -2}, 1}, {{2, 1, -2}, 2}, {{0, 3, -2}, 1}, {{2, -1, 0}, 1}}) {
            want.add_term(e, c);
        }
        return expect(next == want && next == laurent_from_markov(M(1, 2)));
    });

    // topograph
    run("topograph", "P_2/3 expansion", [&] {
        return expect(P(2, 3) == golden_grid(4, golden::weights_2_3), to_string(P(2, 3)));
    });
    run("topograph", "P_1/2 = (u+v)^2 + uw", [&] {
        return expect(P(1, 2) == HomogPoly::from_terms(2, {{2, 0, 1}, {1, 1, 2}, {0, 2, 1}, {1, 0, 1}}),
                      to_string(P(1, 2)));
    });
    run("topograph", "M_1/1 denominators (0,0,1)", [&] {
        const auto m = M(1, 1);
        return expect(m.denom == std::array<std::int64_t, 3>{0, 0, 1} && to_string(m.numerator) == "u + v");
    });
    run("topograph", "M_0/1 = x", [&] {
        const auto m = M(0, 1);
        return expect(m.denom == std::array<std::int64_t, 3>{-1, 0, 0} && m.numerator == HomogPoly::one());
    });
    run("topograph", "M_2/3 denominators (1,2,4)",
        [&] { return expect(M(2, 3).denom == std::array<std::int64_t, 3>{1, 2, 4}); });
    for (const auto& g : golden::markov_numbers) {
        const std::string name = "markov number " + std::to_string(g.a) + "/" + std::to_string(g.b) + " = " +
                                 std::string(g.m);
        run("topograph", name, [&engine, g] {
            const BigInt m = engine.markov_number(Fraction(g.a, g.b));
            return expect(m == BigInt(std::string(g.m)), m.get_str());
        });
    }
    run("topograph", "oracle numerator of 2/3", [&] { return expect(oracle_numerator({2, 3}) == P(2, 3)); });

    // analysis
    run("analysis", "polygon of 2/3 has 10 points", [] {
        const auto poly = predicted_polygon({2, 3});
        const std::vector<LatticePoint> want{{2, 0}, {3, 0}, {4, 0}, {2, 1}, {3, 1},
                                             {1, 2}, {2, 2}, {0, 3}, {1, 3}, {0, 4}};
        return expect(poly.lattice_points == want);
    });
    run("analysis", "polygon of 1/5 has 16 points",
        [] { return expect(predicted_polygon({1, 5}).lattice_points.size() == 16); });
    run("analysis", "weighted polygon of 2/3",
        [&] { return expect(P(2, 3) == golden_grid(4, golden::weights_2_3)); });
    run("analysis", "weighted polygon of 1/5",
        [&] { return expect(P(1, 5) == golden_grid(5, golden::weights_1_5)); });
    run("analysis", "2/3 saturated 10/10", [&] {
        const auto v = saturation_check(M(2, 3));
        return expect(v.saturated() && v.polygon_points == 10);
    });
    run("analysis", "T_0 of 2/3 = 1,4,6,4,1", [&] {
        return expect(slice(M(2, 3), SliceFamily::T, 0) == Slice{0, ints({1, 4, 6, 4, 1})} &&
                      predicted_slice({2, 3}, SliceFormula::T0) == Slice{0, ints({1, 4, 6, 4, 1})});
    });
    run("analysis", "R_1 of 2/3 = 5,4 at i = 2,3", [&] {
        return expect(slice(M(2, 3), SliceFamily::R, 1) == Slice{2, ints({5, 4})} &&
                      predicted_slice({2, 3}, SliceFormula::R1) == Slice{2, ints({5, 4})});
    });
    run("analysis", "S_1 of 1/5 = 1,2,3,4,5", [&] {
        return expect(slice(M(1, 5), SliceFamily::S, 1) == Slice{0, ints({1, 2, 3, 4, 5})} &&
                      predicted_slice({1, 5}, SliceFormula::S1_special) == Slice{0, ints({1, 2, 3, 4, 5})});
    });
    run("analysis", "A_31 of 2/3 = 4 (row one)", [&] {
        const BigInt v = boundary_coefficient({2, 3}, BoundaryLine::row1, 3, options.printed_row1);
        return expect(v == 4 && v == P(2, 3).coeff(3, 1), "row-one formula gives " + v.get_str() + ", figure shows 4");
    });
    run("analysis", "A_22 of 2/3 = 5 (second diagonal)",
        [] { return expect(boundary_coefficient({2, 3}, BoundaryLine::diag2, 2) == 5); });
    run("analysis", "A_30 of 1/5 = 6 (row zero)",
        [] { return expect(boundary_coefficient({1, 5}, BoundaryLine::row0, 3) == 6); });
    run("analysis", "row j=1 of 1/5 = 2,9,12,5 is log-concave", [&] {
        const auto m = M(1, 5);
        return expect(slice(m, SliceFamily::R, 1) == Slice{1, ints({2, 9, 12, 5})} &&
                      log_concavity_line(m, Direction::row, 1).pass());
    });
    run("analysis", "factor 4 on the critical triangle of 2/3", [&] {
        const auto v = factor4_check(M(2, 3));
        return expect(v.pass() && critical_triangle({2, 3}) == std::vector<LatticePoint>{{1, 2}} &&
                      P(2, 3).coeff(1, 2) == 4);
    });
    run("analysis", "critical triangle of 1/n is empty", [] {
        for (int n = 2; n <= 12; ++n) {
            if (!critical_triangle({1, n}).empty()) return expect(false, "1/" + std::to_string(n));
        }
        return expect(true);
    });

    // special
    run("special", "fib_coeff(4; 2,1) = 9", [] { return expect(fib_coeff(4, 2, 1) == 9); });
    run("special", "fib_coeff(4; 1,1) = 2", [] { return expect(fib_coeff(4, 1, 1) == 2); });
    run("special", "fib_coeff(1; 0,2) = 1", [] { return expect(fib_coeff(1, 0, 2) == 1); });
    run("special", "f_m(x1,x2) = M_1/(m-2)(1,x2,x1) for m <= 10", [&] {
        for (int m = 2; m <= 10; ++m) {
            if (!(cz_fibonacci(m) == markov_fibonacci_specialised(engine, m - 2))) {
                return expect(false, "m = " + std::to_string(m));
            }
        }
        return expect(true);
    });
    run("special", "R_3 = u^2 + 2uv + v^2 + uw", [&] {
        const auto seq = pell_numerators(engine, 2);
        return expect(seq.R[3] == P(1, 2) && eval_ones(seq.R[5]) == 29);
    });
    run("special", "Pell sail values of 2/3 = 4,4,5",
        [&] { return expect(pell_sail_values(engine, 2) == ints({4, 4, 5})); });
    run("special", "S_1 of 2/(2n-1) for 2/3",
        [&] { return expect(slice(M(2, 3), SliceFamily::S, 1) == predicted_slice({2, 3}, SliceFormula::S1_special)); });

    // sails
    run("sails", "13/18 vertices", [] {
        const Sail s = build_sail({13, 18});
        const std::vector<LatticePoint> A{{1, 18}, {1, 17}, {3, 14}, {13, 0}};
        const std::vector<LatticePoint> B{{13, 1}, {11, 3}, {8, 7}};
        return expect(s.A_vertices == A && s.B_vertices == B);
    });
    run("sails", "13/18 integer lengths 2,1 (B side) and 1,2 (A side)", [] {
        const Sail s = build_sail({13, 18});
        return expect(integer_length(s.B_vertices[0], s.B_vertices[1]) == 2 &&
                      integer_length(s.B_vertices[1], s.B_vertices[2]) == 1 &&
                      integer_length(s.A_vertices[1], s.A_vertices[2]) == 1 &&
                      integer_length(s.A_vertices[2], s.A_vertices[3]) == 2);
    });
    run("sails", "13/18 M-values 4, 8, 12, 20, 32", [&] {
        const auto r = duality_check(M(13, 18));
        const auto at = [&r](std::int64_t i, std::int64_t j) { return r.m_values.at({i, j}); };
        return expect(at(8, 7) == 4 && at(3, 14) == 8 && at(11, 3) == 12 && at(1, 17) == 20 && at(12, 2) == 32 &&
                      r.duality_ok && r.location4.pass());
    });
    run("sails", "2/3 location of 4 at (1,2)", [&] {
        const auto r = duality_check(M(2, 3));
        return expect(r.location4.pass() && r.location4.point == LatticePoint{1, 2});
    });
    run("sails", "1/n sail is empty", [] { return expect(build_sail({1, 7}).empty()); });

    // entropy
    run("entropy", "maximum 2 ln phi at (1/sqrt5, (5-sqrt5)/10)", [] {
        const auto m = maximize_fib_entropy();
        const auto peak = fib_entropy_peak();
        return expect(std::hypot(m.xi - peak.xi, m.eta - peak.eta) < 1e-6 && std::abs(m.value - peak.value) < 1e-9);
    });
    run("entropy", "F(xi, eta) = F(xi, 1 - xi - eta)",
        [] { return expect(std::abs(fib_entropy(0.2, 0.2) - fib_entropy(0.2, 0.6)) < 1e-12); });
    run("entropy", "binomial entropy at n = 500, p = 0.3",
        [] { return expect(std::abs(binomial_empirical_entropy(500, 0.3) - shannon_H(0.3)) < 0.05); });
    return out;
}

std::string format_selftest(const std::vector<SelftestEntry>& entries)
{
    std::ostringstream os;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
    for (const auto& e : entries) {
        const char* tag = "PASS";
        switch (e.status) {
        case SelftestStatus::pass: ++passed; break;
        case SelftestStatus::fail: tag = "FAIL"; ++failed; break;
        case SelftestStatus::skip: tag = "SKIP"; ++skipped; break;
        }
        os << tag << "  " << e.module << std::string(12 - std::min<std::size_t>(e.module.size(), 11), ' ') << e.name;
        if (!e.detail.empty()) os << "  [" << e.detail << "]";
        os << '\n';
    }
    os << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
    return os.str();
}

}  // namespace markov
