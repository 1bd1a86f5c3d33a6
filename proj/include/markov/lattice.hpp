#pragma once

#include <cstdint>
#include <vector>

namespace markov {

/// Integer point (i, j) of the exponent plane.
struct LatticePoint {
    std::int64_t i = 0;
    std::int64_t j = 0;
    friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// Cross product of (b - a) and (c - a); positive for a left turn.
[[nodiscard]] std::int64_t orientation(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c);

/// Convex hull vertices in counter-clockwise order, collinear points dropped.
[[nodiscard]] std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> points);

/// Lower and upper monotone chains, each ordered by increasing (i, j), collinear points dropped.
[[nodiscard]] std::vector<LatticePoint> lower_hull(std::vector<LatticePoint> points);
[[nodiscard]] std::vector<LatticePoint> upper_hull(std::vector<LatticePoint> points);

/// gcd(|dI|, |dJ|): interior lattice points plus one.
[[nodiscard]] std::int64_t integer_length(const LatticePoint& p, const LatticePoint& q);

/// All lattice points of the segment pq from p to q inclusive.
[[nodiscard]] std::vector<LatticePoint> segment_points(const LatticePoint& p, const LatticePoint& q);

/*
 * Index of the sublattice spanned by the primitive vectors along the two arms
 * of the angle at `apex`. Throws std::invalid_argument for collinear arms.
 */
[[nodiscard]] std::int64_t lattice_index(const LatticePoint& apex, const LatticePoint& arm1, const LatticePoint& arm2);

}  // namespace markov
