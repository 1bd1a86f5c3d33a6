#include "markov/topograph.hpp"

#include <random>
#include <stdexcept>
#include <string>

namespace markov {

namespace {

HomogPoly seed_numerator(const Fraction& rho)
{
    if (rho == Fraction(0, 1) || rho == Fraction(1, 0)) {
        return HomogPoly::one();
    }
    // 1/1: u + v
    return HomogPoly::from_terms(1, {{1, 0, 1}, {0, 1, 1}});
}

bool is_seed(const Fraction& rho)
{
    return rho == Fraction(0, 1) || rho == Fraction(1, 0) || rho == Fraction(1, 1);
}

}  // namespace

std::array<std::int64_t, 3> denominator_exponents(const Fraction& rho)
{
    return {rho.num() - 1, rho.den() - 1, rho.num() + rho.den() - 1};
}

void MarkovPolynomial::check_invariants() const
{
    numerator.check_invariants();
    const std::int64_t expected = std::max<std::int64_t>(a() + b() - 1, 0);
    if (numerator.degree() != expected) {
        throw std::logic_error("numerator of " + rho.str() + " has degree " + std::to_string(numerator.degree()) +
                               ", expected " + std::to_string(expected));
    }
    const auto ts = numerator.terms();
    if (ts.empty()) {
        throw std::logic_error("numerator of " + rho.str() + " is zero");
    }
    bool has_i0 = false;
    bool has_j0 = false;
    bool has_k0 = false;
    for (const auto& t : ts) {
        has_i0 = has_i0 || t.i == 0;
        has_j0 = has_j0 || t.j == 0;
        has_k0 = has_k0 || t.i + t.j == numerator.degree();
    }
    if (!has_i0 || !has_j0 || !has_k0) {
        throw std::logic_error("numerator of " + rho.str() + " has a common monomial factor");
    }
}

LaurentPoly3 laurent_from_markov(const MarkovPolynomial& m)
{
    LaurentPoly3 out;
    const int d = m.numerator.degree();
    for (const auto& t : m.numerator.terms()) {
        const int k = d - t.i - t.j;
        out.add_term({2 * t.i - static_cast<int>(m.denom[0]), 2 * t.j - static_cast<int>(m.denom[1]),
                      2 * k - static_cast<int>(m.denom[2])},
                     t.coeff);
    }
    return out;
}

const HomogPoly& Topograph::numerator(const Fraction& rho)
{
    if (!rho.is_infinite() && rho.num() > rho.den()) {
        throw std::invalid_argument("numerator expects rho in [0,1] or 1/0, got " + rho.str());
    }
    return numerator_extended(rho);
}

const HomogPoly& Topograph::numerator_extended(const Fraction& rho)
{
    if (auto it = cache_.find(rho); it != cache_.end()) {
        return it->second;
    }
    if (is_seed(rho)) {
        return cache_.emplace(rho, seed_numerator(rho)).first->second;
    }
    const auto steps = stern_brocot_descent(rho);
    // steps[0] creates the seed 1/1; step k uses the interval left by step k-1
    for (std::size_t k = 1; k < steps.size(); ++k) {
        const auto& prev = steps[k - 1];
        const auto& step = steps[k];
        const Fraction target = step.newest_endpoint();
        if (cache_.count(target) != 0) continue;

        const Fraction& big = prev.newest_endpoint();
        const Fraction& small = prev.other_endpoint();
        const Fraction& g = prev.replaced;
        const HomogPoly& p_small = numerator_extended(small);
        const HomogPoly& p_big = numerator_extended(big);
        const HomogPoly& p_g = numerator_extended(g);

        const auto c = static_cast<int>(small.num());
        const auto d = static_cast<int>(small.den());
        HomogPoly product = mul_uvw(mul(p_small, p_big));
        HomogPoly correction = mul_monomial(p_g, c, d, c + d);
        try {
            cache_.emplace(target, sub(product, correction));
        } catch (const NegativeCoefficientError& e) {
            throw NegativeCoefficientError(e.i(), e.j(),
                                           "numerator step " + std::to_string(k) + " towards " + rho.str() +
                                               " (S=" + small.str() + ", B=" + big.str() + ", g=" + g.str() +
                                               ", new=" + target.str() + "): " + e.what());
        }
    }
    return cache_.at(rho);
}

MarkovPolynomial Topograph::markov_polynomial(const Fraction& rho)
{
    if (rho.is_infinite() || rho.num() > rho.den()) {
        throw std::invalid_argument("markov_polynomial expects rho in [0,1], got " + rho.str());
    }
    MarkovPolynomial m{rho, numerator(rho), denominator_exponents(rho)};
    m.check_invariants();
    return m;
}

BigInt Topograph::markov_number(const Fraction& rho)
{
    return eval_ones(numerator_extended(rho));
}

HomogPoly numerator(const Fraction& rho)
{
    Topograph engine;
    return engine.numerator(rho);
}

MarkovPolynomial markov_polynomial(const Fraction& rho)
{
    Topograph engine;
    return engine.markov_polynomial(rho);
}

BigInt markov_number(const Fraction& rho)
{
    Topograph engine;
    return engine.markov_number(rho);
}

MarkovTriple MarkovTriple::around(Topograph& engine, const Fraction& p, const Fraction& q)
{
    const Fraction m = mediant(p, q);
    auto build = [&engine](const Fraction& f) {
        MarkovPolynomial mp{f, engine.numerator_extended(f), denominator_exponents(f)};
        return mp;
    };
    return {build(p), build(m), build(q)};
}

namespace {

// k = x/(yz) + y/(xz) + z/(xy)
LaurentPoly3 markov_k()
{
    LaurentPoly3 k;
    k.add_term({1, -1, -1}, 1);
    k.add_term({-1, 1, -1}, 1);
    k.add_term({-1, -1, 1}, 1);
    return k;
}

BigRational eval_markov(const MarkovPolynomial& m, const BigRational& x, const BigRational& y,
                        const BigRational& z)
{
    BigRational value = eval_rational(m.numerator, x * x, y * y, z * z);
    auto divide_pow = [&value](const BigRational& base, std::int64_t e) {
        for (std::int64_t r = 0; r < e; ++r) value /= base;
        for (std::int64_t r = 0; r < -e; ++r) value *= base;
    };
    divide_pow(x, m.denom[0]);
    divide_pow(y, m.denom[1]);
    divide_pow(z, m.denom[2]);
    value.canonicalize();
    return value;
}

}  // namespace

EquationVerdict verify_equation(const MarkovTriple& t, const EquationMode& mode)
{
    EquationVerdict verdict;
    if (mode.kind == EquationMode::Kind::exact) {
        const auto X = laurent_from_markov(t.x);
        const auto Y = laurent_from_markov(t.y);
        const auto Z = laurent_from_markov(t.z);
        const auto lhs = X * X + Y * Y + Z * Z;
        const auto rhs = markov_k() * X * Y * Z;
        verdict.pass = lhs == rhs;
        if (!verdict.pass) {
            verdict.detail = "Laurent forms differ for (" + t.x.rho.str() + ", " + t.y.rho.str() + ", " +
                             t.z.rho.str() + ")";
        }
        return verdict;
    }

    std::mt19937_64 rng(mode.seed);
    std::uniform_int_distribution<long> den_dist(1, 97);
    for (int n = 0; n < mode.count; ++n) {
        std::array<BigRational, 3> pt;
        for (auto& c : pt) {
            const long den = den_dist(rng);
            std::uniform_int_distribution<long> num_dist(den, 1000000L * den);
            c = BigRational(num_dist(rng), den);
            c.canonicalize();
        }
        const auto& [x, y, z] = pt;
        const BigRational X = eval_markov(t.x, x, y, z);
        const BigRational Y = eval_markov(t.y, x, y, z);
        const BigRational Z = eval_markov(t.z, x, y, z);
        const BigRational k = (x * x + y * y + z * z) / (x * y * z);
        BigRational lhs = X * X + Y * Y + Z * Z;
        BigRational rhs = k * X * Y * Z;
        lhs.canonicalize();
        rhs.canonicalize();
        if (lhs != rhs) {
            verdict.pass = false;
            verdict.failing_point = pt;
            verdict.detail = "sides differ at random point " + std::to_string(n);
            return verdict;
        }
    }
    return verdict;
}

HomogPoly oracle_numerator(const Fraction& rho, int max_height)
{
    const std::int64_t a = rho.num();
    const std::int64_t b = rho.den();
    if (rho.is_infinite() || a > b) {
        throw std::invalid_argument("oracle expects rho in [0,1], got " + rho.str());
    }
    if (a + b > max_height) {
        throw std::invalid_argument("oracle bound exceeded for " + rho.str());
    }

    const LaurentPoly3 x = LaurentPoly3::variable(0);
    const LaurentPoly3 y = LaurentPoly3::variable(1);
    const LaurentPoly3 z = LaurentPoly3::variable(2);
    const LaurentPoly3 k = markov_k();

    LaurentPoly3 M;
    if (a == 0) {
        M = x;
    } else {
        // regions 0/1 and 1/0 with the region across their common edge
        std::int64_t ln = 0, ld = 1, rn = 1, rd = 0;
        LaurentPoly3 ML = x;
        LaurentPoly3 MR = y;
        LaurentPoly3 MO = z;
        int step = 0;
        while (true) {
            ++step;
            const std::int64_t mn = ln + rn;
            const std::int64_t md = ld + rd;
            LaurentPoly3 next = k * ML * MR - MO;
            LaurentPoly3 check;
            try {
                check = exact_div(ML * ML + MR * MR, MO);
            } catch (const InexactDivisionError& e) {
                throw std::logic_error("oracle step " + std::to_string(step) + " at " + std::to_string(mn) + "/" +
                                       std::to_string(md) + ": " + e.what());
            }
            if (!(check == next)) {
                throw std::logic_error("oracle step " + std::to_string(step) + ": kXY - Z disagrees with (X^2+Y^2)/Z");
            }
            if (mn == a && md == b) {
                M = std::move(next);
                break;
            }
            if (a * md <= mn * b) {
                MO = std::move(MR);
                MR = std::move(next);
                rn = mn;
                rd = md;
            } else {
                MO = std::move(ML);
                ML = std::move(next);
                ln = mn;
                ld = md;
            }
        }
    }

    const auto denom = denominator_exponents(rho);
    const auto cleared = M.shifted({static_cast<int>(denom[0]), static_cast<int>(denom[1]), static_cast<int>(denom[2])});
    const int degree = static_cast<int>(a + b - 1);
    HomogPoly out(std::max(degree, 0));
    for (const auto& [e, c] : cleared.terms()) {
        for (int v = 0; v < 3; ++v) {
            if (e[v] < 0 || e[v] % 2 != 0) {
                throw std::logic_error("oracle: cleared form of " + rho.str() + " is not a polynomial in squares");
            }
        }
        if (e[0] + e[1] + e[2] != 2 * degree) {
            throw std::logic_error("oracle: cleared form of " + rho.str() + " is not homogeneous");
        }
        if (c < 0) {
            throw std::logic_error("oracle: negative coefficient in " + rho.str());
        }
        out.set_coeff(e[0] / 2, e[1] / 2, c);
    }
    return out;
}

SymmetryVerdict swap_symmetry_check(Topograph& engine, const Fraction& rho)
{
    if (rho.is_infinite() || rho.num() == 0 || rho.num() > rho.den()) {
        throw std::invalid_argument("swap symmetry expects rho in (0,1], got " + rho.str());
    }
    const HomogPoly swapped = swap_uv(engine.numerator(rho));
    const HomogPoly& reciprocal = engine.numerator_extended(rho.reciprocal());
    SymmetryVerdict verdict;
    verdict.pass = swapped == reciprocal;
    if (!verdict.pass) {
        verdict.detail = "P_" + rho.str() + "(v,u,w) differs from P_" + rho.reciprocal().str() + "(u,v,w)";
    }
    return verdict;
}

}  // namespace markov
