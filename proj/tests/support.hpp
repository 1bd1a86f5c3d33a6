#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "markov/fraction.hpp"
#include "markov/homog_poly.hpp"

namespace testing {

/// Reduced a/b with 0 < a < b and a + b <= max_sum, ordered by (a + b, a).
inline std::vector<markov::Fraction> proper_fractions(std::int64_t max_sum, std::int64_t min_a = 1)
{
    std::vector<markov::Fraction> out;
    for (std::int64_t h = 3; h <= max_sum; ++h) {
        for (std::int64_t a = min_a; 2 * a < h; ++a) {
            if (std::gcd(a, h - a) == 1) out.emplace_back(a, h - a);
        }
    }
    return out;
}

/// Deterministic generator of random test inputs.
class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    std::int64_t uniform(std::int64_t lo, std::int64_t hi)
    {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
    }

    double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

    /// Reduced a/b in (0, 1) with a + b <= max_sum.
    markov::Fraction proper_fraction(std::int64_t max_sum)
    {
        while (true) {
            const std::int64_t b = uniform(2, max_sum - 1);
            const std::int64_t a = uniform(1, b - 1);
            if (a + b <= max_sum && std::gcd(a, b) == 1) return {a, b};
        }
    }

    markov::BigRational rational(std::int64_t max_num, std::int64_t max_den)
    {
        markov::BigRational q(markov::BigInt(uniform(0, max_num)), markov::BigInt(uniform(1, max_den)));
        q.canonicalize();
        return q;
    }

    /// Homogeneous polynomial of the given degree, coefficients in [0, max_coeff].
    markov::HomogPoly homog(int degree, int max_coeff, int density_percent = 60)
    {
        markov::HomogPoly p(degree);
        for (int j = 0; j <= degree; ++j) {
            for (int i = 0; i + j <= degree; ++i) {
                if (uniform(1, 100) <= density_percent) p.set_coeff(i, j, uniform(1, max_coeff));
            }
        }
        return p;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace testing
