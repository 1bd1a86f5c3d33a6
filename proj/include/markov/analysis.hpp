#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "markov/fraction.hpp"
#include "markov/homog_poly.hpp"
#include "markov/lattice.hpp"
#include "markov/topograph.hpp"

namespace markov {

/// Lattice points with b*i + a*j >= a*b and i + j <= a+b-1, sorted by (j, i).
struct NewtonPolygon {
    std::int64_t a = 0;
    std::int64_t b = 0;
    std::vector<LatticePoint> lattice_points;

    [[nodiscard]] std::int64_t degree() const noexcept { return a + b - 1; }
    [[nodiscard]] bool contains(std::int64_t i, std::int64_t j) const noexcept
    {
        return i >= 0 && j >= 0 && b * i + a * j >= a * b && i + j <= a + b - 1;
    }
    /// Hull vertices, counter-clockwise.
    [[nodiscard]] std::vector<LatticePoint> vertices() const { return convex_hull(lattice_points); }
};

/// Requires a, b >= 1.
[[nodiscard]] NewtonPolygon predicted_polygon(const Fraction& rho);

struct SaturationVerdict {
    std::size_t polygon_points = 0;
    std::size_t support_points = 0;
    /// Polygon points carrying a zero coefficient.
    std::vector<LatticePoint> missing;
    /// Support points outside the polygon.
    std::vector<LatticePoint> extra;

    [[nodiscard]] bool saturated() const noexcept { return missing.empty() && extra.empty(); }
};

[[nodiscard]] SaturationVerdict saturation_check(const MarkovPolynomial& m);

/// Convex hull of the support equals the hull of the predicted polygon.
[[nodiscard]] bool support_hull_matches(const MarkovPolynomial& m);

enum class SliceFamily { T, R, S };

/*
 * Coefficients along one line of the exponent triangle, trimmed to the first
 * and last nonzero entries. `start` is the i coordinate of values[0] for the
 * T and R families and the j coordinate for S.
 */
struct Slice {
    std::int64_t start = 0;
    std::vector<BigInt> values;
    friend bool operator==(const Slice&, const Slice&) = default;
};

/// T_k: diagonal i+j = a+b-1-k; R_k: row j = k; S_k: column i = k.
[[nodiscard]] Slice slice(const MarkovPolynomial& m, SliceFamily family, std::int64_t k);

enum class SliceFormula { S0, R0, R1, T0, T1, T2, S1_special };

/*
 * Expands a closed slice formula into a Slice aligned with slice(). Throws
 * std::domain_error when the formula needs a nonzero multiple of a negative
 * power (it does not apply to this rho), and std::invalid_argument for
 * S1_special outside 1/n and 2/(2n-1).
 */
[[nodiscard]] Slice predicted_slice(const Fraction& rho, SliceFormula which);

enum class BoundaryLine { col0, row0, row1, diag1, diag2, diag3 };

/*
 * Closed form for A_ij on a boundary line. `index` is j for col0 and i for
 * every other line. printed_row1 switches row1 to the factor (b - 2) instead
 * of (b - 2a). Throws std::invalid_argument if the point is not in the polygon.
 */
[[nodiscard]] BigInt boundary_coefficient(const Fraction& rho, BoundaryLine which, std::int64_t index,
                                          bool printed_row1 = false);

/// Point of the polygon on `which` at `index`.
[[nodiscard]] LatticePoint boundary_point(const Fraction& rho, BoundaryLine which, std::int64_t index);

/// First k with x_k^2 < x_{k-1} x_{k+1}, if any.
[[nodiscard]] std::optional<std::size_t> log_concavity_violation(const std::vector<BigInt>& xs);

enum class Direction { row, column, diagonal };

[[nodiscard]] const char* to_string(Direction d);

struct LogConcavityViolation {
    Direction direction;
    std::int64_t line;
    /// The three consecutive points, middle one violating.
    std::vector<LatticePoint> points;
    std::vector<BigInt> values;
};

struct LogConcavityVerdict {
    std::size_t lines_checked = 0;
    std::optional<LogConcavityViolation> violation;

    [[nodiscard]] bool pass() const noexcept { return !violation.has_value(); }
};

/// Polygon points on one line, in increasing i (rows, diagonals) or j (columns).
[[nodiscard]] std::vector<LatticePoint> polygon_line(const NewtonPolygon& poly, Direction dir, std::int64_t line);

/// One line: row j = line, column i = line or diagonal i + j = line.
[[nodiscard]] LogConcavityVerdict log_concavity_line(const MarkovPolynomial& m, Direction dir, std::int64_t line);

/// Every row, column and i+j diagonal of the polygon.
[[nodiscard]] LogConcavityVerdict log_concavity_check(const MarkovPolynomial& m);

/// i < a, j < b, b*i + a*j > a*b; sorted by (j, i).
[[nodiscard]] std::vector<LatticePoint> critical_triangle(const Fraction& rho);

[[nodiscard]] inline bool in_critical_triangle(const Fraction& rho, const LatticePoint& p)
{
    const std::int64_t a = rho.num();
    const std::int64_t b = rho.den();
    return p.i < a && p.j < b && b * p.i + a * p.j > a * b;
}

struct Factor4Verdict {
    std::size_t triangle_points = 0;
    std::vector<LatticePoint> offending;

    [[nodiscard]] bool pass() const noexcept { return offending.empty(); }
    [[nodiscard]] bool vacuous() const noexcept { return triangle_points == 0; }
};

[[nodiscard]] Factor4Verdict factor4_check(const MarkovPolynomial& m);

}  // namespace markov
