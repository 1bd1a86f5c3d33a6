#include "markov/farey.hpp"

#include <stdexcept>
#include <string>

namespace markov {

Fraction mediant(const Fraction& p, const Fraction& q)
{
    if (!farey_neighbours(p, q)) {
        throw std::invalid_argument("mediant of non-neighbours " + p.str() + " and " + q.str());
    }
    return Fraction(p.num() + q.num(), p.den() + q.den());
}

ContinuedFraction::ContinuedFraction(std::vector<std::int64_t> quotients) : quotients_(std::move(quotients))
{
    if (quotients_.empty()) {
        throw std::invalid_argument("continued fraction needs at least one quotient");
    }
    convergents_.reserve(quotients_.size() + 2);
    convergents_.push_back({0, 1});
    convergents_.push_back({1, 0});
    for (const auto a : quotients_) {
        if (a < 1) {
            throw std::invalid_argument("partial quotients must be positive");
        }
        const auto& prev = convergents_[convergents_.size() - 1];
        const auto& prev2 = convergents_[convergents_.size() - 2];
        convergents_.push_back({a * prev.p + prev2.p, a * prev.q + prev2.q});
    }
}

std::int64_t ContinuedFraction::quotient(int k) const
{
    if (k < 1 || k > length()) {
        throw std::out_of_range("partial quotient index " + std::to_string(k));
    }
    return quotients_[static_cast<std::size_t>(k - 1)];
}

const Convergent& ContinuedFraction::convergent(int k) const
{
    if (k < -1 || k > length()) {
        throw std::out_of_range("convergent index " + std::to_string(k));
    }
    return convergents_[static_cast<std::size_t>(k + 1)];
}

Fraction ContinuedFraction::value() const
{
    const auto& last = convergents_.back();
    return Fraction(last.p, last.q);
}

ContinuedFraction continued_fraction(const Fraction& f)
{
    if (f.den() == 0) {
        throw std::invalid_argument("continued fraction of 1/0");
    }
    if (f.num() < f.den()) {
        throw std::invalid_argument("continued fraction expects a value >= 1, got " + f.str());
    }
    std::vector<std::int64_t> quotients;
    std::int64_t b = f.num();
    std::int64_t a = f.den();
    while (a != 0) {
        quotients.push_back(b / a);
        const std::int64_t r = b % a;
        b = a;
        a = r;
    }
    // Euclid always ends with a quotient >= 2 unless the value is 1
    return ContinuedFraction(std::move(quotients));
}

std::vector<DescentStep> stern_brocot_descent(const Fraction& target)
{
    if (target.is_infinite() || target.num() == 0) {
        throw std::invalid_argument("no descent to the seed " + target.str());
    }
    std::vector<DescentStep> steps;
    Fraction left(0, 1);
    Fraction right(1, 0);
    while (true) {
        const Fraction m(left.num() + right.num(), left.den() + right.den());
        if (compare_value(target, m) <= 0) {
            steps.push_back({left, m, Side::right, right});
            right = m;
        } else {
            steps.push_back({m, right, Side::left, left});
            left = m;
        }
        if (m == target) {
            return steps;
        }
    }
}

std::vector<DescentStep> descent_path(const Fraction& target)
{
    if (target.is_infinite() || target.num() == 0 || target.num() >= target.den()) {
        throw std::invalid_argument("descent target must lie in (0,1), got " + target.str());
    }
    return stern_brocot_descent(target);
}

}  // namespace markov
