#pragma once

#include <cstdint>
#include <vector>

#include "markov/fraction.hpp"

namespace markov {

/// Farey mediant of two neighbours. Throws std::invalid_argument otherwise.
[[nodiscard]] Fraction mediant(const Fraction& p, const Fraction& q);

struct Convergent {
    std::int64_t p;
    std::int64_t q;
    friend bool operator==(const Convergent&, const Convergent&) = default;
};

/*
 * Regular continued fraction [a_1, ..., a_n] of a value >= 1 together with
 * its convergent table. convergents[0] and convergents[1] are the seeds
 * p_{-1}/q_{-1} = 0/1 and p_0/q_0 = 1/0, so the k-th convergent p_k/q_k
 * lives at convergents[k + 1].
 *
 * Canonical form: the last quotient is >= 2 whenever n > 1.
 */
class ContinuedFraction {
public:
    explicit ContinuedFraction(std::vector<std::int64_t> quotients);

    [[nodiscard]] const std::vector<std::int64_t>& quotients() const noexcept { return quotients_; }
    [[nodiscard]] const std::vector<Convergent>& convergents() const noexcept { return convergents_; }
    [[nodiscard]] int length() const noexcept { return static_cast<int>(quotients_.size()); }

    /// a_k for 1 <= k <= n.
    [[nodiscard]] std::int64_t quotient(int k) const;
    /// p_k/q_k for -1 <= k <= n.
    [[nodiscard]] const Convergent& convergent(int k) const;
    /// p_n/q_n as a reduced fraction.
    [[nodiscard]] Fraction value() const;

private:
    std::vector<std::int64_t> quotients_;
    std::vector<Convergent> convergents_;
};

/// Expands f = b/a (with a, b >= 1 and b >= a). Throws std::invalid_argument.
[[nodiscard]] ContinuedFraction continued_fraction(const Fraction& f);

enum class Side { left, right };

/*
 * One mediant step of a Stern-Brocot descent. After the step the interval is
 * [left, right]; the endpoint on side `newest` is the mediant just created and
 * `replaced` is the endpoint it displaced, so that
 *   replaced == newest - other   (componentwise, nonnegative).
 */
struct DescentStep {
    Fraction left;
    Fraction right;
    Side newest;
    Fraction replaced;

    [[nodiscard]] const Fraction& newest_endpoint() const { return newest == Side::left ? left : right; }
    [[nodiscard]] const Fraction& other_endpoint() const { return newest == Side::left ? right : left; }
};

/*
 * Stern-Brocot descent from [0/1, 1/0] to `target`, one step per mediant. The
 * final step's newest endpoint is the target itself; a mediant replaces the
 * right endpoint when target <= mediant and the left one otherwise.
 *
 * Accepts any finite positive target other than the seeds; descent_path
 * below is the restricted form for targets in (0, 1).
 */
[[nodiscard]] std::vector<DescentStep> stern_brocot_descent(const Fraction& target);

/// Descent for a target strictly inside (0, 1). Throws std::invalid_argument.
[[nodiscard]] std::vector<DescentStep> descent_path(const Fraction& target);

}  // namespace markov
