#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace markov {

/*
 * A reduced nonnegative rational num/den. The formal fraction 1/0 is a
 * legal value (it labels the topograph region carrying y), so den == 0 is
 * accepted only together with num == 1.
 */
class Fraction {
public:
    /// Builds num/den, rejecting non-reduced input and 0/0.
    Fraction(std::int64_t num, std::int64_t den);

    /// Reduces num/den by their gcd before storing.
    static Fraction reduced(std::int64_t num, std::int64_t den);

    /// Parses "a/b" (ASCII, no spaces). Throws std::invalid_argument.
    static Fraction parse(std::string_view text);

    [[nodiscard]] std::int64_t num() const noexcept { return num_; }
    [[nodiscard]] std::int64_t den() const noexcept { return den_; }

    [[nodiscard]] bool is_infinite() const noexcept { return den_ == 0; }
    [[nodiscard]] std::int64_t height() const noexcept { return num_ + den_; }
    [[nodiscard]] Fraction reciprocal() const { return Fraction(den_, num_); }

    [[nodiscard]] std::string str() const;

    /// Componentwise equality, which is value equality for reduced fractions.
    friend bool operator==(const Fraction&, const Fraction&) = default;

private:
    std::int64_t num_;
    std::int64_t den_;
};

/// Value ordering with 1/0 treated as +infinity.
[[nodiscard]] std::strong_ordering compare_value(const Fraction& lhs, const Fraction& rhs);
[[nodiscard]] inline bool value_less(const Fraction& lhs, const Fraction& rhs)
{
    return compare_value(lhs, rhs) < 0;
}

/// |p.num * q.den - q.num * p.den| == 1
[[nodiscard]] bool farey_neighbours(const Fraction& p, const Fraction& q);

std::ostream& operator<<(std::ostream& os, const Fraction& f);

struct FractionHash {
    std::size_t operator()(const Fraction& f) const noexcept
    {
        return std::hash<std::int64_t>{}(f.num()) * 1000003u ^ std::hash<std::int64_t>{}(f.den());
    }
};

}  // namespace markov
