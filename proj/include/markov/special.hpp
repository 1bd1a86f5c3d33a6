#pragma once

#include <optional>
#include <string>
#include <vector>

#include "markov/homog_poly.hpp"
#include "markov/laurent.hpp"
#include "markov/lattice.hpp"
#include "markov/topograph.hpp"

namespace markov {

struct IntSequence {
    std::string name;
    std::vector<BigInt> values;
};

/// F_0 .. F_{count-1} with F_0 = 0, F_1 = 1.
[[nodiscard]] IntSequence fibonacci_sequence(std::size_t count);
/// P_0 .. P_{count-1} with P_0 = 0, P_1 = 1, P_{n+1} = 2 P_n + P_{n-1}.
[[nodiscard]] IntSequence pell_sequence(std::size_t count);

/// A_ij of M_{1/(n+1)}: C(n-j, n+1-i-j) C(i+j, j).
[[nodiscard]] BigInt fib_coeff(std::int64_t n, std::int64_t i, std::int64_t j);

/// The full closed-form grid for M_{1/(n+1)}, degree n+1.
[[nodiscard]] HomogPoly fib_grid(std::int64_t n);

/*
 * Fibonacci cluster variables f_1 = x1, f_2 = x2, f_{m+1} = (f_m^2 + 1)/f_{m-1}
 * in closed form. Exponents are (x1, x2).
 */
[[nodiscard]] LaurentPoly2 cz_fibonacci(int m);
/// The same sequence by iterating the recurrence with exact division.
[[nodiscard]] LaurentPoly2 cz_fibonacci_recurrence(int m);
/// M_{1/n}(1, x2, x1) as a Laurent polynomial in (x1, x2); n >= 0 with 1/0 read as M = y.
[[nodiscard]] LaurentPoly2 markov_fibonacci_specialised(Topograph& engine, std::int64_t n);

/// R_0 .. R_{2 k_max + 1}; R_m has degree m - 1 (R_0 is stored as the zero constant).
struct PellPolySequence {
    std::vector<HomogPoly> R;
};

/*
 * Builds R_m by R_{2k+1} = (u+v) R_{2k} + uw R_{2k-1} and
 * R_{2k} = (u+v) R_{2k-1} + vw R_{2k-2}, then checks every R_{2k+1} against
 * the engine's numerator of k/(k+1). Throws std::logic_error on mismatch.
 */
[[nodiscard]] PellPolySequence pell_numerators(Topograph& engine, int k_max);

/// R_{2k+1} = (u+v)(u+v+w) R_{2k-1} - uvw^2 R_{2k-3} for 2 <= k <= k_max.
[[nodiscard]] bool mar_pell2_check(const PellPolySequence& seq, int k_max);

/*
 * First (i, j) where
 *   next_ij = prev_{i-2,j} + 2 prev_{i-1,j-1} + prev_{i,j-2} + prev_{i-1,j} + prev_{i,j-1} - prev2_{i-1,j-1}
 * fails, reading out-of-range entries as zero.
 */
[[nodiscard]] std::optional<LatticePoint> pell_coeff_recurrence_failure(const HomogPoly& next, const HomogPoly& prev,
                                                                        const HomogPoly& prev2);

/// The coefficient recurrence for the numerators of k/(k+1), 2 <= k <= k_max.
[[nodiscard]] bool pell_coeff_recurrence_check(Topograph& engine, int k_max);

/// Floating-point Binet form of R_{2k+1}(x^2, y^2, z^2).
[[nodiscard]] double binet_eval(int k, double x, double y, double z);

/// Exact R_{2k+1}(x^2, y^2, z^2) rounded to double; the inputs are read as exact binary rationals.
[[nodiscard]] double pell_exact_eval(Topograph& engine, int k, double x, double y, double z);

/// (7n - 10, 4, 8, ..., 4n - 4, 3n - 1)
[[nodiscard]] std::vector<BigInt> pell_sail_prediction(std::int64_t n);

/*
 * A_{1,n+1}, A_{m,n+1-m} for m = 1..n-1, then A_{n,1}, read from the numerator
 * of n/(n+1). Throws std::logic_error if they differ from the prediction.
 */
[[nodiscard]] std::vector<BigInt> pell_sail_values(Topograph& engine, std::int64_t n);

}  // namespace markov
