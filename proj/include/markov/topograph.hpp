#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>

#include "markov/farey.hpp"
#include "markov/fraction.hpp"
#include "markov/homog_poly.hpp"
#include "markov/laurent.hpp"

namespace markov {

/*
 * M_{a/b}(x, y, z) = P(x^2, y^2, z^2) / (x^(a-1) y^(b-1) z^(a+b-1)).
 * The exponents may be negative for the boundary regions: 0/1 gives M = x.
 */
struct MarkovPolynomial {
    Fraction rho;
    HomogPoly numerator;
    std::array<std::int64_t, 3> denom;

    [[nodiscard]] std::int64_t a() const noexcept { return rho.num(); }
    [[nodiscard]] std::int64_t b() const noexcept { return rho.den(); }

    /// Degree a+b-1, positivity and no common factor u, v or w. Throws std::logic_error.
    void check_invariants() const;
};

[[nodiscard]] std::array<std::int64_t, 3> denominator_exponents(const Fraction& rho);

/// The Laurent form of M in x, y, z.
[[nodiscard]] LaurentPoly3 laurent_from_markov(const MarkovPolynomial& m);

/*
 * Memoizing engine for the numerator recursion
 *   P_new = (u+v+w) P_S P_B - u^c v^d w^(c+d) P_g,   (c, d) = S,
 * along the Stern-Brocot descent, where B is the endpoint created most
 * recently, S the other endpoint and g = B - S the region B displaced.
 *
 * Not thread-safe; give each worker its own instance.
 */
class Topograph {
public:
    /// P_rho for rho in [0, 1] or rho = 1/0.
    const HomogPoly& numerator(const Fraction& rho);
    /// Same recursion for any finite or infinite rho, including rho > 1.
    const HomogPoly& numerator_extended(const Fraction& rho);

    /// rho in [0, 1]; invariants are checked before returning.
    MarkovPolynomial markov_polynomial(const Fraction& rho);
    BigInt markov_number(const Fraction& rho);

    [[nodiscard]] std::size_t cache_size() const noexcept { return cache_.size(); }
    void clear() { cache_.clear(); }

private:
    std::unordered_map<Fraction, HomogPoly, FractionHash> cache_;
};

/// One-shot helpers backed by a fresh engine.
[[nodiscard]] HomogPoly numerator(const Fraction& rho);
[[nodiscard]] MarkovPolynomial markov_polynomial(const Fraction& rho);
[[nodiscard]] BigInt markov_number(const Fraction& rho);

/*
 * Three pairwise Farey-neighbour regions meeting at a topograph vertex,
 * stored so that y is the mediant of x and z.
 */
struct MarkovTriple {
    MarkovPolynomial x;
    MarkovPolynomial y;
    MarkovPolynomial z;

    /// Regions p, p+q (mediant), q. Throws std::invalid_argument for non-neighbours.
    static MarkovTriple around(Topograph& engine, const Fraction& p, const Fraction& q);
};

struct EquationMode {
    enum class Kind { exact, random_points } kind = Kind::exact;
    int count = 5;
    std::uint64_t seed = 1;

    static EquationMode exact() { return {}; }
    static EquationMode random(int count, std::uint64_t seed = 1) { return {Kind::random_points, count, seed}; }
};

struct EquationVerdict {
    bool pass = true;
    /// First point (x, y, z) where the sides disagree, in random mode.
    std::optional<std::array<BigRational, 3>> failing_point;
    std::string detail;
};

/// X^2 + Y^2 + Z^2 == k XYZ with k = (x^2 + y^2 + z^2)/(xyz).
[[nodiscard]] EquationVerdict verify_equation(const MarkovTriple& t, const EquationMode& mode);

/*
 * Independent numerator: Vieta moves Z' = kXY - Z in Laurent arithmetic from
 * (x, y, z), cross-checked against (X^2 + Y^2)/Z by exact division, then the
 * numerator is read off the cleared Laurent form. Throws std::logic_error on
 * any inconsistency.
 */
[[nodiscard]] HomogPoly oracle_numerator(const Fraction& rho, int max_height = 20);

struct SymmetryVerdict {
    bool pass = true;
    std::string detail;
};

/// P_{a/b}(v, u, w) == P_{b/a}(u, v, w), the second built by the same recursion past 1/1.
[[nodiscard]] SymmetryVerdict swap_symmetry_check(Topograph& engine, const Fraction& rho);

}  // namespace markov
