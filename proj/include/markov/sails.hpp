#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "markov/farey.hpp"
#include "markov/lattice.hpp"
#include "markov/topograph.hpp"

namespace markov {

/// Segment S_k from C_{k-2} to C_k with every lattice point on it.
struct SailSegment {
    int k = 0;
    LatticePoint from;
    LatticePoint to;
    std::vector<LatticePoint> points;
    std::int64_t length = 0;
};

/*
 * Klein sails of b/a moved into the exponent plane. With p_k/q_k the
 * convergents of b/a (k = -1..n), the points are
 *   C_k = (q_k, b - p_k)  for odd k   (A_i = C_{2i-1}),
 *   C_k = (a - q_k, p_k)  for even k  (B_i = C_{2i}).
 * The sail is empty when a = 1.
 */
struct Sail {
    Fraction rho{0, 1};
    std::vector<std::int64_t> quotients;
    /// C_{-1} .. C_n; use point(k).
    std::vector<LatticePoint> convergent_points;
    std::vector<LatticePoint> A_vertices;
    std::vector<LatticePoint> B_vertices;
    /// S_1 .. S_n.
    std::vector<SailSegment> segments;

    [[nodiscard]] bool empty() const noexcept { return convergent_points.empty(); }
    [[nodiscard]] int length() const noexcept { return static_cast<int>(quotients.size()); }
    [[nodiscard]] const LatticePoint& point(int k) const { return convergent_points.at(static_cast<std::size_t>(k + 1)); }
};

/// Requires 1 <= a < b. Throws std::invalid_argument otherwise.
[[nodiscard]] Sail build_sail(const Fraction& rho);

struct AngleCheck {
    int apex = 0;
    std::int64_t index = 0;
    std::int64_t quotient = 0;
};

/// Lattice index of the angle at C_j between C_{j-2} and C_{j+2}, paired with a_{j+1}.
[[nodiscard]] std::vector<AngleCheck> sail_angles(const Sail& sail);

/*
 * initial_edge marks S_1 = A_0 A_1: no duality equation constrains it, and its
 * values are reported but never judged.
 */
enum class SegmentStatus { checked, too_few_points, dual_outside, not_progression, initial_edge };

[[nodiscard]] const char* to_string(SegmentStatus s);

struct SegmentReport {
    int k = 0;
    std::int64_t length = 0;
    std::int64_t quotient = 0;
    /// Points of the segment in the open critical triangle, from C_{k-2} towards C_k.
    std::vector<LatticePoint> interior;
    std::vector<BigInt> values;
    SegmentStatus status = SegmentStatus::too_few_points;
    std::optional<BigInt> difference;
    LatticePoint dual;
    std::optional<BigInt> dual_value;
    /// Set for checked segments: difference == -M(dual).
    bool duality = false;
    /// Set for checked segments: difference == +M(dual).
    bool flipped = false;
};

struct Location4Report {
    int index = 0;
    LatticePoint point;
    bool interior = false;
    std::optional<BigInt> value;
    [[nodiscard]] bool pass() const { return interior && value && *value == 4; }
};

struct SailReport {
    Sail sail;
    std::vector<SegmentReport> segments;
    std::vector<AngleCheck> angles;
    /// M-values at every sail lattice point inside the open critical triangle.
    std::map<LatticePoint, BigInt> m_values;
    Location4Report location4;

    bool lengths_ok = true;
    bool angles_ok = true;
    bool progressions_ok = true;
    /// Every checked segment satisfies d = -M(dual).
    bool duality_ok = true;
    /// Every checked segment satisfies d = +M(dual) instead; a consistent global sign flip.
    bool duality_sign_flipped = false;
    bool hull_ok = true;

    [[nodiscard]] bool empty() const noexcept { return sail.empty(); }
    [[nodiscard]] std::size_t checked_segments() const;
};

/// All sail checks against the numerator of m. An empty sail gives a passing empty report.
[[nodiscard]] SailReport duality_check(const MarkovPolynomial& m);

/*
 * Walks the duality equations backwards from M(C_{n-1}) = 4 through
 * S_n, S_{n-1}, ..., S_2 and returns every M-value reachable that way.
 */
[[nodiscard]] std::map<LatticePoint, BigInt> reconstruct_m_values(const Sail& sail, const BigInt& seed = 4);

/*
 * Independent check: the convex hulls of the lattice points above and below
 * the line a*y = b*x in [0,a] x [0,b], each together with (a, b), have the
 * convergents (q_k, p_k) of even and odd index as their facing chains.
 */
[[nodiscard]] bool sail_hull_check(const Fraction& rho);

}  // namespace markov
