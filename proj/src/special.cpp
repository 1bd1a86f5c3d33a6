#include "markov/special.hpp"

#include <cmath>
#include <stdexcept>

#include "markov/binomial.hpp"

namespace markov {

namespace {

IntSequence linear_sequence(std::string name, std::size_t count, int multiplier)
{
    IntSequence seq{std::move(name), {}};
    for (std::size_t n = 0; n < count; ++n) {
        if (n < 2) {
            seq.values.emplace_back(static_cast<long>(n));
        } else {
            seq.values.push_back(multiplier * seq.values[n - 1] + seq.values[n - 2]);
        }
    }
    return seq;
}

const HomogPoly& u_plus_v()
{
    static const HomogPoly p = HomogPoly::from_terms(1, {{1, 0, 1}, {0, 1, 1}});
    return p;
}

}  // namespace

IntSequence fibonacci_sequence(std::size_t count) { return linear_sequence("fibonacci", count, 1); }

IntSequence pell_sequence(std::size_t count) { return linear_sequence("pell", count, 2); }

BigInt fib_coeff(std::int64_t n, std::int64_t i, std::int64_t j)
{
    return binom(n - j, n + 1 - i - j) * binom(i + j, j);
}

HomogPoly fib_grid(std::int64_t n)
{
    HomogPoly out(static_cast<int>(n + 1));
    for (std::int64_t j = 0; j <= n + 1; ++j) {
        for (std::int64_t i = 0; i + j <= n + 1; ++i) {
            out.set_coeff(static_cast<int>(i), static_cast<int>(j), fib_coeff(n, i, j));
        }
    }
    return out;
}

LaurentPoly2 cz_fibonacci(int m)
{
    if (m < 1) throw std::invalid_argument("cz_fibonacci needs m >= 1");
    if (m == 1) return LaurentPoly2::variable(0);
    if (m == 2) return LaurentPoly2::variable(1);
    const int n = m - 3;
    LaurentPoly2 out;
    out.add_term({-(n + 1), n + 2}, 1);
    for (int q = 0; q <= n; ++q) {
        for (int r = 0; q + r <= n; ++r) {
            out.add_term({2 * q - (n + 1), 2 * r - n}, binom(n - r, q) * binom(n + 1 - q, r));
        }
    }
    return out;
}

LaurentPoly2 cz_fibonacci_recurrence(int m)
{
    if (m < 1) throw std::invalid_argument("cz_fibonacci_recurrence needs m >= 1");
    LaurentPoly2 prev = LaurentPoly2::variable(0);
    LaurentPoly2 cur = LaurentPoly2::variable(1);
    if (m == 1) return prev;
    for (int k = 2; k < m; ++k) {
        LaurentPoly2 next = exact_div(cur * cur + LaurentPoly2::constant(1), prev);
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

LaurentPoly2 markov_fibonacci_specialised(Topograph& engine, std::int64_t n)
{
    if (n < 0) throw std::invalid_argument("markov_fibonacci_specialised needs n >= 0");
    const Fraction rho = n == 0 ? Fraction(1, 0) : Fraction(1, n);
    const HomogPoly& p = engine.numerator(rho);
    const auto denom = denominator_exponents(rho);
    LaurentPoly2 out;
    const int d = p.degree();
    // x = 1, y = x2, z = x1
    for (const auto& t : p.terms()) {
        const int k = d - t.i - t.j;
        out.add_term({2 * k - static_cast<int>(denom[2]), 2 * t.j - static_cast<int>(denom[1])}, t.coeff);
    }
    return out;
}

PellPolySequence pell_numerators(Topograph& engine, int k_max)
{
    if (k_max < 1) throw std::invalid_argument("pell_numerators needs k_max >= 1");
    PellPolySequence seq;
    seq.R.emplace_back(0);
    seq.R.push_back(HomogPoly::one());
    for (int m = 2; m <= 2 * k_max + 1; ++m) {
        HomogPoly next = mul(u_plus_v(), seq.R[static_cast<std::size_t>(m - 1)]);
        const HomogPoly& back = seq.R[static_cast<std::size_t>(m - 2)];
        if (!back.is_zero()) {
            next = add(next, m % 2 == 1 ? mul_monomial(back, 1, 0, 1) : mul_monomial(back, 0, 1, 1));
        }
        seq.R.push_back(std::move(next));
    }
    for (int k = 0; k <= k_max; ++k) {
        if (!(seq.R[static_cast<std::size_t>(2 * k + 1)] == engine.numerator(Fraction(k, k + 1)))) {
            throw std::logic_error("R_" + std::to_string(2 * k + 1) + " differs from the numerator of " +
                                   std::to_string(k) + "/" + std::to_string(k + 1));
        }
    }
    return seq;
}

bool mar_pell2_check(const PellPolySequence& seq, int k_max)
{
    const HomogPoly factor = mul_uvw(u_plus_v());
    for (int k = 2; k <= k_max; ++k) {
        const auto idx = [](int m) { return static_cast<std::size_t>(m); };
        if (idx(2 * k + 1) >= seq.R.size()) return false;
        const HomogPoly lhs = add(seq.R[idx(2 * k + 1)], mul_monomial(seq.R[idx(2 * k - 3)], 1, 1, 2));
        const HomogPoly rhs = mul(factor, seq.R[idx(2 * k - 1)]);
        if (!(lhs == rhs)) return false;
    }
    return true;
}

std::optional<LatticePoint> pell_coeff_recurrence_failure(const HomogPoly& next, const HomogPoly& prev,
                                                          const HomogPoly& prev2)
{
    const int d = next.degree();
    for (int j = 0; j <= d; ++j) {
        for (int i = 0; i + j <= d; ++i) {
            const BigInt predicted = prev.coeff(i - 2, j) + 2 * prev.coeff(i - 1, j - 1) + prev.coeff(i, j - 2) +
                                     prev.coeff(i - 1, j) + prev.coeff(i, j - 1) - prev2.coeff(i - 1, j - 1);
            if (predicted != next.coeff(i, j)) return LatticePoint{i, j};
        }
    }
    return std::nullopt;
}

bool pell_coeff_recurrence_check(Topograph& engine, int k_max)
{
    for (int k = 2; k <= k_max; ++k) {
        const HomogPoly& next = engine.numerator(Fraction(k, k + 1));
        const HomogPoly& prev = engine.numerator(Fraction(k - 1, k));
        const HomogPoly& prev2 = engine.numerator(Fraction(k - 2, k - 1));
        if (pell_coeff_recurrence_failure(next, prev, prev2)) return false;
    }
    return true;
}

double binet_eval(int k, double x, double y, double z)
{
    const double x2 = x * x;
    const double y2 = y * y;
    const double z2 = z * z;
    const double s = (x2 + y2) * (x2 + y2 + z2);
    const double disc = std::pow(x2 + y2, 4) + 2 * z2 * std::pow(x2 + y2, 3) + z2 * z2 * (x2 - y2) * (x2 - y2);
    const double root = std::sqrt(disc);
    const double lambda1 = 0.5 * (s + root);
    // product of the roots; avoids cancelling s - root
    const double lambda2 = x2 * y2 * z2 * z2 / lambda1;
    const double p1 = std::pow(lambda1, k);
    const double p2 = std::pow(lambda2, k);
    return (lambda1 - y2 * z2) / root * (p1 - p2) + p2;
}

double pell_exact_eval(Topograph& engine, int k, double x, double y, double z)
{
    const BigRational qx(x), qy(y), qz(z);
    const BigRational v = eval_rational(engine.numerator(Fraction(k, k + 1)), qx * qx, qy * qy, qz * qz);
    return v.get_d();
}

std::vector<BigInt> pell_sail_prediction(std::int64_t n)
{
    std::vector<BigInt> out;
    out.emplace_back(7 * n - 10);
    for (std::int64_t m = 1; m <= n - 1; ++m) out.emplace_back(4 * m);
    out.emplace_back(3 * n - 1);
    return out;
}

std::vector<BigInt> pell_sail_values(Topograph& engine, std::int64_t n)
{
    if (n < 2) throw std::invalid_argument("pell_sail_values needs n >= 2");
    const HomogPoly& p = engine.numerator(Fraction(n, n + 1));
    const auto at = [&p](std::int64_t i, std::int64_t j) { return p.coeff(static_cast<int>(i), static_cast<int>(j)); };
    std::vector<BigInt> out;
    out.push_back(at(1, n + 1));
    for (std::int64_t m = 1; m <= n - 1; ++m) out.push_back(at(m, n + 1 - m));
    out.push_back(at(n, 1));
    if (out != pell_sail_prediction(n)) {
        throw std::logic_error("Pell sail values of " + std::to_string(n) + "/" + std::to_string(n + 1) +
                               " differ from (7n-10, 4, ..., 4n-4, 3n-1)");
    }
    return out;
}

}  // namespace markov
