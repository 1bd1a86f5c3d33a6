#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace markov {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Raised by sub() when a coefficient would go negative.
class NegativeCoefficientError : public std::runtime_error {
public:
    NegativeCoefficientError(int i, int j, const std::string& what)
        : std::runtime_error(what), i_(i), j_(j)
    {
    }
    [[nodiscard]] int i() const noexcept { return i_; }
    [[nodiscard]] int j() const noexcept { return j_; }

private:
    int i_;
    int j_;
};

struct Term {
    int i;
    int j;
    BigInt coeff;
};

/*
 * Homogeneous polynomial sum A_ij u^i v^j w^(d-i-j) with nonnegative
 * arbitrary-precision coefficients. Only (i, j) is stored; the w exponent is
 * implied by the degree.
 *
 * Storage is a dense triangle (row j holds i = 0..d-j) since the numerators
 * fill their Newton polygons; terms() gives the sparse view with zero entries
 * omitted.
 */
class HomogPoly {
public:
    explicit HomogPoly(int degree = 0);

    static HomogPoly one() { return monomial(0, 0, 0, 1); }
    /// coeff * u^i v^j w^k of degree i + j + k.
    static HomogPoly monomial(int i, int j, int k, const BigInt& coeff = 1);
    static HomogPoly from_terms(int degree, const std::vector<Term>& terms);

    [[nodiscard]] int degree() const noexcept { return degree_; }
    /// Zero outside the exponent triangle.
    [[nodiscard]] const BigInt& coeff(int i, int j) const;
    void set_coeff(int i, int j, const BigInt& value);

    /// Nonzero terms sorted by (i, j) ascending.
    [[nodiscard]] std::vector<Term> terms() const;
    [[nodiscard]] std::size_t term_count() const;
    [[nodiscard]] bool is_zero() const;

    /// Throws std::logic_error if any stored entry is negative.
    void check_invariants() const;

    friend bool operator==(const HomogPoly& lhs, const HomogPoly& rhs);

private:
    friend HomogPoly mul(const HomogPoly&, const HomogPoly&);
    friend HomogPoly sub(const HomogPoly&, const HomogPoly&);
    friend HomogPoly add(const HomogPoly&, const HomogPoly&);
    friend HomogPoly mul_monomial(const HomogPoly&, int, int, int);

    [[nodiscard]] std::size_t index(int i, int j) const noexcept
    {
        const auto jj = static_cast<std::size_t>(j);
        const auto d = static_cast<std::size_t>(degree_);
        return jj * (d + 1) - (jj * (jj - 1)) / 2 + static_cast<std::size_t>(i);
    }
    [[nodiscard]] bool in_range(int i, int j) const noexcept
    {
        return i >= 0 && j >= 0 && i + j <= degree_;
    }

    int degree_;
    std::vector<BigInt> coeffs_;
};

[[nodiscard]] HomogPoly add(const HomogPoly& p, const HomogPoly& q);
/// Exact difference; throws NegativeCoefficientError if p - q has a negative entry.
[[nodiscard]] HomogPoly sub(const HomogPoly& p, const HomogPoly& q);
[[nodiscard]] HomogPoly mul(const HomogPoly& p, const HomogPoly& q);
/// p * u^c v^d w^e
[[nodiscard]] HomogPoly mul_monomial(const HomogPoly& p, int c, int d, int e);
/// p * (u + v + w)
[[nodiscard]] HomogPoly mul_uvw(const HomogPoly& p);
/// p(v, u, w)
[[nodiscard]] HomogPoly swap_uv(const HomogPoly& p);

/// Sum of the coefficients, i.e. p(1, 1, 1).
[[nodiscard]] BigInt eval_ones(const HomogPoly& p);
[[nodiscard]] BigRational eval_rational(const HomogPoly& p, const BigRational& u, const BigRational& v,
                                        const BigRational& w);

inline HomogPoly operator+(const HomogPoly& p, const HomogPoly& q) { return add(p, q); }
inline HomogPoly operator-(const HomogPoly& p, const HomogPoly& q) { return sub(p, q); }
inline HomogPoly operator*(const HomogPoly& p, const HomogPoly& q) { return mul(p, q); }

/// Human-readable form such as "u^2 + 2*u*v + v^2 + u*w".
[[nodiscard]] std::string to_string(const HomogPoly& p);

}  // namespace markov
