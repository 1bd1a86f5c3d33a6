#pragma once

#include <cstdint>

#include "markov/homog_poly.hpp"

namespace markov {

/*
 * Binomial coefficient with the degenerate conventions used by the closed
 * coefficient formulas: C(m, 0) = 1 for every m (negatives included), and
 * C(m, k) = 0 when k < 0, when 0 <= m < k, and when m < 0 < k.
 */
[[nodiscard]] inline BigInt binom(std::int64_t m, std::int64_t k)
{
    if (k == 0) return 1;
    if (k < 0 || m < 0 || k > m) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k));
    return out;
}

}  // namespace markov
