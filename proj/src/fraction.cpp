#include "markov/fraction.hpp"

#include <charconv>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace markov {

Fraction::Fraction(std::int64_t num, std::int64_t den) : num_(num), den_(den)
{
    if (num < 0 || den < 0) {
        throw std::invalid_argument("fraction must be nonnegative: " + std::to_string(num) + "/" +
                                    std::to_string(den));
    }
    if (num == 0 && den == 0) {
        throw std::invalid_argument("0/0 is not a fraction");
    }
    if (std::gcd(num, den) != 1) {
        throw std::invalid_argument("fraction is not reduced: " + std::to_string(num) + "/" +
                                    std::to_string(den));
    }
}

Fraction Fraction::reduced(std::int64_t num, std::int64_t den)
{
    const std::int64_t g = std::gcd(num, den);
    if (g == 0) {
        throw std::invalid_argument("0/0 is not a fraction");
    }
    return Fraction(num / g, den / g);
}

Fraction Fraction::parse(std::string_view text)
{
    const auto slash = text.find('/');
    if (slash == std::string_view::npos || slash == 0 || slash + 1 == text.size()) {
        throw std::invalid_argument("expected a/b, got '" + std::string(text) + "'");
    }
    auto read = [&](std::string_view part) {
        std::int64_t value = 0;
        const auto* first = part.data();
        const auto* last = part.data() + part.size();
        auto [ptr, ec] = std::from_chars(first, last, value);
        if (ec != std::errc{} || ptr != last || part.front() == '+' || part.front() == '-') {
            throw std::invalid_argument("expected a/b, got '" + std::string(text) + "'");
        }
        return value;
    };
    return Fraction(read(text.substr(0, slash)), read(text.substr(slash + 1)));
}

std::string Fraction::str() const
{
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering compare_value(const Fraction& lhs, const Fraction& rhs)
{
    // cross multiplication also orders 1/0 above every finite value
    const __int128 l = static_cast<__int128>(lhs.num()) * rhs.den();
    const __int128 r = static_cast<__int128>(rhs.num()) * lhs.den();
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

bool farey_neighbours(const Fraction& p, const Fraction& q)
{
    const __int128 det = static_cast<__int128>(p.num()) * q.den() - static_cast<__int128>(q.num()) * p.den();
    return det == 1 || det == -1;
}

std::ostream& operator<<(std::ostream& os, const Fraction& f)
{
    return os << f.num() << '/' << f.den();
}

}  // namespace markov
