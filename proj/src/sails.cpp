#include "markov/sails.hpp"

#include <stdexcept>

#include "markov/analysis.hpp"

namespace markov {

Sail build_sail(const Fraction& rho)
{
    if (rho.is_infinite() || rho.num() < 1 || rho.num() >= rho.den()) {
        throw std::invalid_argument("sail needs 1 <= a < b, got " + rho.str());
    }
    Sail sail;
    sail.rho = rho;
    if (rho.num() == 1) return sail;

    const std::int64_t a = rho.num();
    const std::int64_t b = rho.den();
    const ContinuedFraction cf = continued_fraction(Fraction(b, a));
    sail.quotients = cf.quotients();
    const int n = cf.length();
    for (int k = -1; k <= n; ++k) {
        const auto& c = cf.convergent(k);
        const LatticePoint p = (k % 2 != 0) ? LatticePoint{c.q, b - c.p} : LatticePoint{a - c.q, c.p};
        sail.convergent_points.push_back(p);
        ((k % 2 != 0) ? sail.A_vertices : sail.B_vertices).push_back(p);
    }
    for (int k = 1; k <= n; ++k) {
        SailSegment s;
        s.k = k;
        s.from = sail.point(k - 2);
        s.to = sail.point(k);
        s.points = segment_points(s.from, s.to);
        s.length = integer_length(s.from, s.to);
        sail.segments.push_back(std::move(s));
    }
    return sail;
}

std::vector<AngleCheck> sail_angles(const Sail& sail)
{
    std::vector<AngleCheck> out;
    const int n = sail.length();
    for (int j = 1; j + 2 <= n; ++j) {
        out.push_back({j, lattice_index(sail.point(j), sail.point(j - 2), sail.point(j + 2)),
                       sail.quotients[static_cast<std::size_t>(j)]});
    }
    return out;
}

const char* to_string(SegmentStatus s)
{
    switch (s) {
    case SegmentStatus::checked: return "checked";
    case SegmentStatus::too_few_points: return "too_few_points";
    case SegmentStatus::dual_outside: return "dual_outside";
    case SegmentStatus::not_progression: return "not_progression";
    case SegmentStatus::initial_edge: return "initial_edge";
    }
    return "?";
}

std::size_t SailReport::checked_segments() const
{
    std::size_t n = 0;
    for (const auto& s : segments) n += s.status == SegmentStatus::checked ? 1 : 0;
    return n;
}

SailReport duality_check(const MarkovPolynomial& m)
{
    SailReport report;
    report.sail = build_sail(m.rho);
    const Sail& sail = report.sail;
    if (sail.empty()) return report;

    const auto M = [&m](const LatticePoint& p) {
        return m.numerator.coeff(static_cast<int>(p.i), static_cast<int>(p.j));
    };
    const auto interior = [&m](const LatticePoint& p) { return in_critical_triangle(m.rho, p); };

    for (const auto& seg : sail.segments) {
        for (const auto& p : seg.points) {
            if (interior(p)) report.m_values.emplace(p, M(p));
        }
    }

    bool any_checked = false;
    bool all_minus = true;
    bool all_plus = true;
    for (const auto& seg : sail.segments) {
        SegmentReport r;
        r.k = seg.k;
        r.length = seg.length;
        r.quotient = sail.quotients[static_cast<std::size_t>(seg.k - 1)];
        report.lengths_ok = report.lengths_ok && r.length == r.quotient;
        for (const auto& p : seg.points) {
            if (interior(p)) {
                r.interior.push_back(p);
                r.values.push_back(M(p));
            }
        }
        r.dual = sail.point(seg.k - 1);
        if (interior(r.dual)) r.dual_value = M(r.dual);

        if (seg.k == 1) {
            r.status = SegmentStatus::initial_edge;
        } else if (r.values.size() >= 2) {
            const BigInt d = r.values[1] - r.values[0];
            bool progression = true;
            for (std::size_t t = 2; t < r.values.size(); ++t) {
                progression = progression && r.values[t] - r.values[t - 1] == d;
            }
            if (!progression) {
                r.status = SegmentStatus::not_progression;
                report.progressions_ok = false;
            } else {
                r.difference = d;
                if (!r.dual_value) {
                    r.status = SegmentStatus::dual_outside;
                } else {
                    r.status = SegmentStatus::checked;
                    r.duality = d == -*r.dual_value;
                    r.flipped = d == *r.dual_value;
                    any_checked = true;
                    all_minus = all_minus && r.duality;
                    all_plus = all_plus && r.flipped;
                }
            }
        }
        report.segments.push_back(std::move(r));
    }
    report.duality_ok = report.progressions_ok && all_minus;
    report.duality_sign_flipped = any_checked && all_plus && !all_minus;

    report.angles = sail_angles(sail);
    for (const auto& a : report.angles) {
        report.angles_ok = report.angles_ok && a.index == a.quotient;
    }

    const int n = sail.length();
    report.location4.index = n - 1;
    report.location4.point = sail.point(n - 1);
    report.location4.interior = interior(report.location4.point);
    if (report.location4.interior) report.location4.value = M(report.location4.point);

    report.hull_ok = sail_hull_check(m.rho);
    return report;
}

std::map<LatticePoint, BigInt> reconstruct_m_values(const Sail& sail, const BigInt& seed)
{
    std::map<LatticePoint, BigInt> known;
    if (sail.empty()) return known;
    const Fraction& rho = sail.rho;
    const int n = sail.length();
    const LatticePoint start = sail.point(n - 1);
    if (!in_critical_triangle(rho, start)) return known;
    known.emplace(start, seed);

    for (int k = n; k >= 2; --k) {
        const SailSegment& seg = sail.segments[static_cast<std::size_t>(k - 1)];
        const auto dual = known.find(sail.point(k - 1));
        if (dual == known.end()) continue;
        const BigInt d = -dual->second;
        // anchor on any point of the segment whose value is already known
        std::optional<std::size_t> anchor;
        for (std::size_t t = 0; t < seg.points.size(); ++t) {
            if (known.count(seg.points[t]) != 0 && in_critical_triangle(rho, seg.points[t])) {
                anchor = t;
                break;
            }
        }
        if (!anchor) continue;
        const BigInt base = known.at(seg.points[*anchor]);
        for (std::size_t t = 0; t < seg.points.size(); ++t) {
            const LatticePoint& p = seg.points[t];
            if (!in_critical_triangle(rho, p)) continue;
            const auto offset = static_cast<long>(t) - static_cast<long>(*anchor);
            known.emplace(p, base + d * offset);
        }
    }
    return known;
}

bool sail_hull_check(const Fraction& rho)
{
    const std::int64_t a = rho.num();
    const std::int64_t b = rho.den();
    const ContinuedFraction cf = continued_fraction(Fraction(b, a));
    const int n = cf.length();

    std::vector<LatticePoint> above{{a, b}};
    std::vector<LatticePoint> below{{a, b}};
    for (std::int64_t x = 0; x <= a; ++x) {
        for (std::int64_t y = 0; y <= b; ++y) {
            if (a * y > b * x) above.push_back({x, y});
            if (a * y < b * x) below.push_back({x, y});
        }
    }
    std::vector<LatticePoint> even;
    std::vector<LatticePoint> odd;
    for (int k = -1; k <= n; ++k) {
        const auto& c = cf.convergent(k);
        ((k % 2 != 0) ? odd : even).push_back({c.q, c.p});
    }
    const LatticePoint end{a, b};
    if (even.back() != end) even.push_back(end);
    if (odd.back() != end) odd.push_back(end);
    return lower_hull(above) == even && upper_hull(below) == odd;
}

}  // namespace markov
