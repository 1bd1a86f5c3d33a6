#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace markov {

/// Thrown by exact_div when the divisor does not divide the dividend.
class InexactDivisionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/*
 * Laurent polynomial in N variables with signed integer coefficients. Only
 * nonzero coefficients are stored; exponents may be negative.
 *
 * This is deliberately a plain ordered map with naive arithmetic. It backs the
 * independent oracle, so it shares no code with HomogPoly.
 */
template <std::size_t N>
class LaurentPoly {
public:
    using Exponent = std::array<int, N>;
    using Map = std::map<Exponent, mpz_class>;

    LaurentPoly() = default;

    static LaurentPoly constant(const mpz_class& c)
    {
        return monomial(Exponent{}, c);
    }
    static LaurentPoly monomial(const Exponent& e, const mpz_class& c = 1)
    {
        LaurentPoly p;
        p.add_term(e, c);
        return p;
    }
    /// The k-th variable itself.
    static LaurentPoly variable(std::size_t k)
    {
        Exponent e{};
        e.at(k) = 1;
        return monomial(e);
    }

    [[nodiscard]] const Map& terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }

    [[nodiscard]] mpz_class coeff(const Exponent& e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? mpz_class(0) : it->second;
    }

    void add_term(const Exponent& e, const mpz_class& c)
    {
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentPoly& operator+=(const LaurentPoly& rhs)
    {
        for (const auto& [e, c] : rhs.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& rhs)
    {
        for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
        return *this;
    }

    friend LaurentPoly operator+(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs += rhs; }
    friend LaurentPoly operator-(LaurentPoly lhs, const LaurentPoly& rhs) { return lhs -= rhs; }
    friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs)
    {
        LaurentPoly out;
        for (const auto& [e1, c1] : lhs.terms_) {
            for (const auto& [e2, c2] : rhs.terms_) {
                Exponent e;
                for (std::size_t k = 0; k < N; ++k) e[k] = e1[k] + e2[k];
                out.add_term(e, c1 * c2);
            }
        }
        return out;
    }
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    /// Multiplies every exponent by the monomial with exponent `shift`.
    [[nodiscard]] LaurentPoly shifted(const Exponent& shift) const
    {
        LaurentPoly out;
        for (const auto& [e, c] : terms_) {
            Exponent f;
            for (std::size_t k = 0; k < N; ++k) f[k] = e[k] + shift[k];
            out.terms_.emplace(f, c);
        }
        return out;
    }

    /// Componentwise minimum and maximum exponents; both zero for the zero polynomial.
    [[nodiscard]] Exponent min_exponents() const
    {
        Exponent m{};
        bool first = true;
        for (const auto& [e, c] : terms_) {
            for (std::size_t k = 0; k < N; ++k) m[k] = first ? e[k] : std::min(m[k], e[k]);
            first = false;
        }
        return m;
    }
    [[nodiscard]] Exponent max_exponents() const
    {
        Exponent m{};
        bool first = true;
        for (const auto& [e, c] : terms_) {
            for (std::size_t k = 0; k < N; ++k) m[k] = first ? e[k] : std::max(m[k], e[k]);
            first = false;
        }
        return m;
    }

    [[nodiscard]] mpq_class evaluate(const std::array<mpq_class, N>& point) const
    {
        mpq_class sum = 0;
        for (const auto& [e, c] : terms_) {
            mpq_class t = c;
            for (std::size_t k = 0; k < N; ++k) {
                if (e[k] == 0) continue;
                if (point[k] == 0) throw std::domain_error("Laurent evaluation at a zero coordinate");
                mpq_class base = e[k] > 0 ? point[k] : mpq_class(1) / point[k];
                for (int r = 0; r < std::abs(e[k]); ++r) t *= base;
            }
            sum += t;
        }
        sum.canonicalize();
        return sum;
    }

private:
    Map terms_;
};

template <std::size_t N>
LaurentPoly<N> pow(const LaurentPoly<N>& p, unsigned n)
{
    LaurentPoly<N> out = LaurentPoly<N>::constant(1);
    for (unsigned k = 0; k < n; ++k) out = out * p;
    return out;
}

/*
 * Exact quotient a / b by repeated cancellation of the lexicographically
 * leading term. Any candidate quotient term outside the exponent box allowed
 * by a and b, or with a non-integral coefficient, proves b does not divide a.
 */
template <std::size_t N>
LaurentPoly<N> exact_div(const LaurentPoly<N>& a, const LaurentPoly<N>& b)
{
    if (b.is_zero()) throw std::domain_error("exact_div by zero");
    using Exponent = typename LaurentPoly<N>::Exponent;
    LaurentPoly<N> quotient;
    if (a.is_zero()) return quotient;

    const Exponent amin = a.min_exponents();
    const Exponent amax = a.max_exponents();
    const Exponent bmin = b.min_exponents();
    const Exponent bmax = b.max_exponents();
    const auto& [blead_e, blead_c] = *b.terms().rbegin();

    LaurentPoly<N> rem = a;
    while (!rem.is_zero()) {
        const auto& [lead_e, lead_c] = *rem.terms().rbegin();
        if (!mpz_divisible_p(lead_c.get_mpz_t(), blead_c.get_mpz_t())) {
            throw InexactDivisionError("exact_div: leading coefficient does not divide");
        }
        Exponent e;
        for (std::size_t k = 0; k < N; ++k) {
            e[k] = lead_e[k] - blead_e[k];
            if (e[k] < amin[k] - bmin[k] || e[k] > amax[k] - bmax[k]) {
                throw InexactDivisionError("exact_div: quotient term leaves the exponent box");
            }
        }
        mpz_class c;
        mpz_divexact(c.get_mpz_t(), lead_c.get_mpz_t(), blead_c.get_mpz_t());
        const auto term = LaurentPoly<N>::monomial(e, c);
        quotient += term;
        rem -= term * b;
    }
    return quotient;
}

using LaurentPoly3 = LaurentPoly<3>;
using LaurentPoly2 = LaurentPoly<2>;

}  // namespace markov
