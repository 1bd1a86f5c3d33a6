#include "markov/analysis.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "markov/binomial.hpp"

namespace markov {

namespace {

void require_positive(const Fraction& rho, const char* what)
{
    if (rho.is_infinite() || rho.num() < 1) {
        throw std::invalid_argument(std::string(what) + " needs a, b >= 1, got " + rho.str());
    }
}

// scalar * x^shift * (x + y)^power, read as a sequence in the x exponent
struct ClosedTerm {
    BigRational scalar;
    std::int64_t shift;
    std::int64_t power;
};

Slice expand(const std::vector<ClosedTerm>& terms, std::int64_t line_length, const char* name)
{
    std::vector<BigRational> raw(static_cast<std::size_t>(std::max<std::int64_t>(line_length, 0)));
    for (const auto& t : terms) {
        if (t.scalar == 0) continue;
        if (t.power < 0) {
            throw std::domain_error(std::string(name) + " does not apply: nonzero multiple of a negative power");
        }
        for (std::int64_t x = 0; x < line_length; ++x) {
            raw[static_cast<std::size_t>(x)] += t.scalar * BigRational(binom(t.power, x - t.shift));
        }
    }
    Slice out;
    std::int64_t first = -1;
    std::int64_t last = -1;
    for (std::int64_t x = 0; x < line_length; ++x) {
        auto& v = raw[static_cast<std::size_t>(x)];
        v.canonicalize();
        if (v.get_den() != 1) {
            throw std::logic_error(std::string(name) + " expanded to a non-integer coefficient");
        }
        if (v != 0) {
            if (first < 0) first = x;
            last = x;
        }
    }
    if (first < 0) return out;
    out.start = first;
    for (std::int64_t x = first; x <= last; ++x) {
        out.values.push_back(raw[static_cast<std::size_t>(x)].get_num());
    }
    return out;
}

Slice trimmed(const std::vector<BigInt>& line)
{
    Slice out;
    std::int64_t first = -1;
    std::int64_t last = -1;
    for (std::size_t x = 0; x < line.size(); ++x) {
        if (sgn(line[x]) != 0) {
            if (first < 0) first = static_cast<std::int64_t>(x);
            last = static_cast<std::int64_t>(x);
        }
    }
    if (first < 0) return out;
    out.start = first;
    out.values.assign(line.begin() + first, line.begin() + last + 1);
    return out;
}

}  // namespace

NewtonPolygon predicted_polygon(const Fraction& rho)
{
    require_positive(rho, "predicted_polygon");
    NewtonPolygon poly;
    poly.a = rho.num();
    poly.b = rho.den();
    const std::int64_t d = poly.degree();
    for (std::int64_t j = 0; j <= d; ++j) {
        for (std::int64_t i = 0; i + j <= d; ++i) {
            if (poly.contains(i, j)) poly.lattice_points.push_back({i, j});
        }
    }
    return poly;
}

SaturationVerdict saturation_check(const MarkovPolynomial& m)
{
    const NewtonPolygon poly = predicted_polygon(m.rho);
    SaturationVerdict v;
    v.polygon_points = poly.lattice_points.size();
    for (const auto& p : poly.lattice_points) {
        if (sgn(m.numerator.coeff(static_cast<int>(p.i), static_cast<int>(p.j))) == 0) v.missing.push_back(p);
    }
    for (const auto& t : m.numerator.terms()) {
        ++v.support_points;
        if (!poly.contains(t.i, t.j)) v.extra.push_back({t.i, t.j});
    }
    return v;
}

bool support_hull_matches(const MarkovPolynomial& m)
{
    std::vector<LatticePoint> support;
    for (const auto& t : m.numerator.terms()) support.push_back({t.i, t.j});
    const NewtonPolygon poly = predicted_polygon(m.rho);
    const auto predicted = poly.vertices();
    const std::int64_t a = poly.a;
    const std::int64_t b = poly.b;
    const std::set<LatticePoint> allowed{{a, 0}, {a + b - 1, 0}, {0, b}, {0, a + b - 1}};
    for (const auto& v : predicted) {
        if (allowed.count(v) == 0) return false;
    }
    return convex_hull(support) == predicted;
}

Slice slice(const MarkovPolynomial& m, SliceFamily family, std::int64_t k)
{
    const int d = m.numerator.degree();
    if (k < 0 || k > d) return {};
    const auto n = static_cast<std::size_t>(d - k + 1);
    std::vector<BigInt> line(n);
    for (std::size_t x = 0; x < n; ++x) {
        const int xi = static_cast<int>(x);
        const int ki = static_cast<int>(k);
        switch (family) {
        case SliceFamily::T: line[x] = m.numerator.coeff(xi, d - ki - xi); break;
        case SliceFamily::R: line[x] = m.numerator.coeff(xi, ki); break;
        case SliceFamily::S: line[x] = m.numerator.coeff(ki, xi); break;
        }
    }
    return trimmed(line);
}

Slice predicted_slice(const Fraction& rho, SliceFormula which)
{
    require_positive(rho, "predicted_slice");
    const std::int64_t a = rho.num();
    const std::int64_t b = rho.den();
    const std::int64_t d = a + b - 1;
    const BigRational half(1, 2);
    switch (which) {
    case SliceFormula::T0:
        return expand({{1, 0, d}}, d + 1, "T0");
    case SliceFormula::T1:
        return expand({{a - 1, 0, d - 1}, {b - a, 1, d - 2}}, d, "T1");
    case SliceFormula::T2:
        return expand({{BigRational((a - 1) * (a - 2)) * half, 0, d - 2},
                       {a * (b - a) - a, 1, d - 3},
                       {BigRational((b - a) * (b - a) + 5 * a - 3 * b) * half, 2, d - 4}},
                      d - 1, "T2");
    case SliceFormula::R0:
        return expand({{1, a, b - 1}}, d + 1, "R0");
    case SliceFormula::R1:
        return expand({{3 * a - 1, a, b - 2}, {b - 2 * a, a + 1, b - 3}}, d, "R1");
    case SliceFormula::S0:
        return expand({{1, b, a - 1}}, d + 1, "S0");
    case SliceFormula::S1_special: {
        Slice out;
        if (a == 1) {
            for (std::int64_t j = 0; j < b; ++j) out.values.emplace_back(j + 1);
            return out;
        }
        if (a == 2 && b % 2 == 1 && b >= 3) {
            const std::int64_t n = (b + 1) / 2;
            out.start = n;
            for (std::int64_t j = n; j <= 2 * n - 2; ++j) out.values.emplace_back(4 * (j - n + 1));
            out.values.emplace_back(2 * n);
            return out;
        }
        throw std::invalid_argument("S1_special applies only to 1/n and 2/(2n-1), got " + rho.str());
    }
    }
    throw std::invalid_argument("unknown slice formula");
}

LatticePoint boundary_point(const Fraction& rho, BoundaryLine which, std::int64_t index)
{
    const std::int64_t d = rho.num() + rho.den() - 1;
    switch (which) {
    case BoundaryLine::col0: return {0, index};
    case BoundaryLine::row0: return {index, 0};
    case BoundaryLine::row1: return {index, 1};
    case BoundaryLine::diag1: return {index, d - index};
    case BoundaryLine::diag2: return {index, d - 1 - index};
    case BoundaryLine::diag3: return {index, d - 2 - index};
    }
    throw std::invalid_argument("unknown boundary line");
}

BigInt boundary_coefficient(const Fraction& rho, BoundaryLine which, std::int64_t index, bool printed_row1)
{
    require_positive(rho, "boundary_coefficient");
    const std::int64_t a = rho.num();
    const std::int64_t b = rho.den();
    const std::int64_t d = a + b - 1;
    const LatticePoint p = boundary_point(rho, which, index);
    const NewtonPolygon poly{a, b, {}};
    if (!poly.contains(p.i, p.j)) {
        throw std::invalid_argument("point (" + std::to_string(p.i) + "," + std::to_string(p.j) +
                                    ") is not in the polygon of " + rho.str());
    }
    const std::int64_t i = p.i;
    switch (which) {
    case BoundaryLine::col0: return binom(a - 1, p.j - b);
    case BoundaryLine::row0: return binom(b - 1, i - a);
    case BoundaryLine::row1:
        return BigInt(3 * a - 1) * binom(b - 2, i - a) +
               BigInt(printed_row1 ? b - 2 : b - 2 * a) * binom(b - 3, i - a - 1);
    case BoundaryLine::diag1: return binom(d, i);
    case BoundaryLine::diag2: return BigInt(a - 1) * binom(d - 1, i) + BigInt(b - a) * binom(d - 2, i - 1);
    case BoundaryLine::diag3: {
        const BigInt twice = BigInt((a - 1) * (a - 2)) * binom(d - 2, i) +
                             BigInt(2 * (a * (b - a) - a)) * binom(d - 3, i - 1) +
                             BigInt((b - a) * (b - a) + 5 * a - 3 * b) * binom(d - 4, i - 2);
        return twice / 2;
    }
    }
    throw std::invalid_argument("unknown boundary line");
}

std::optional<std::size_t> log_concavity_violation(const std::vector<BigInt>& xs)
{
    for (std::size_t k = 1; k + 1 < xs.size(); ++k) {
        if (xs[k] * xs[k] < xs[k - 1] * xs[k + 1]) return k;
    }
    return std::nullopt;
}

const char* to_string(Direction d)
{
    switch (d) {
    case Direction::row: return "row";
    case Direction::column: return "column";
    case Direction::diagonal: return "diagonal";
    }
    return "?";
}

std::vector<LatticePoint> polygon_line(const NewtonPolygon& poly, Direction dir, std::int64_t line)
{
    std::vector<LatticePoint> out;
    const std::int64_t d = poly.degree();
    for (std::int64_t t = 0; t <= d; ++t) {
        LatticePoint p{};
        switch (dir) {
        case Direction::row: p = {t, line}; break;
        case Direction::column: p = {line, t}; break;
        case Direction::diagonal: p = {t, line - t}; break;
        }
        if (poly.contains(p.i, p.j)) out.push_back(p);
    }
    for (std::size_t k = 1; k < out.size(); ++k) {
        const std::int64_t step = dir == Direction::column ? out[k].j - out[k - 1].j : out[k].i - out[k - 1].i;
        if (step != 1) {
            throw std::logic_error("polygon line is not contiguous");
        }
    }
    return out;
}

LogConcavityVerdict log_concavity_line(const MarkovPolynomial& m, Direction dir, std::int64_t line)
{
    const NewtonPolygon poly = predicted_polygon(m.rho);
    const auto pts = polygon_line(poly, dir, line);
    std::vector<BigInt> xs;
    xs.reserve(pts.size());
    for (const auto& p : pts) xs.push_back(m.numerator.coeff(static_cast<int>(p.i), static_cast<int>(p.j)));
    LogConcavityVerdict v;
    v.lines_checked = 1;
    if (auto k = log_concavity_violation(xs)) {
        v.violation = LogConcavityViolation{dir, line, {pts[*k - 1], pts[*k], pts[*k + 1]},
                                            {xs[*k - 1], xs[*k], xs[*k + 1]}};
    }
    return v;
}

LogConcavityVerdict log_concavity_check(const MarkovPolynomial& m)
{
    LogConcavityVerdict total;
    const std::int64_t d = m.a() + m.b() - 1;
    for (const Direction dir : {Direction::row, Direction::column, Direction::diagonal}) {
        for (std::int64_t line = 0; line <= d; ++line) {
            auto v = log_concavity_line(m, dir, line);
            total.lines_checked += v.lines_checked;
            if (!v.pass()) {
                total.violation = std::move(v.violation);
                return total;
            }
        }
    }
    return total;
}

std::vector<LatticePoint> critical_triangle(const Fraction& rho)
{
    require_positive(rho, "critical_triangle");
    std::vector<LatticePoint> out;
    for (std::int64_t j = 0; j < rho.den(); ++j) {
        for (std::int64_t i = 0; i < rho.num(); ++i) {
            if (in_critical_triangle(rho, {i, j})) out.push_back({i, j});
        }
    }
    return out;
}

Factor4Verdict factor4_check(const MarkovPolynomial& m)
{
    Factor4Verdict v;
    for (const auto& p : critical_triangle(m.rho)) {
        ++v.triangle_points;
        const BigInt& c = m.numerator.coeff(static_cast<int>(p.i), static_cast<int>(p.j));
        if (!mpz_divisible_ui_p(c.get_mpz_t(), 4)) v.offending.push_back(p);
    }
    return v;
}

}  // namespace markov
