#include "markov/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace markov {

std::int64_t orientation(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c)
{
    return (b.i - a.i) * (c.j - a.j) - (b.j - a.j) * (c.i - a.i);
}

std::vector<LatticePoint> convex_hull(std::vector<LatticePoint> points)
{
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() < 3) return points;

    // Andrew's monotone chain
    std::vector<LatticePoint> hull(2 * points.size());
    std::size_t k = 0;
    for (const auto& p : points) {
        while (k >= 2 && orientation(hull[k - 2], hull[k - 1], p) <= 0) --k;
        hull[k++] = p;
    }
    const std::size_t lower = k + 1;
    for (auto it = points.rbegin() + 1; it != points.rend(); ++it) {
        while (k >= lower && orientation(hull[k - 2], hull[k - 1], *it) <= 0) --k;
        hull[k++] = *it;
    }
    hull.resize(k - 1);
    return hull;
}

std::vector<LatticePoint> lower_hull(std::vector<LatticePoint> points)
{
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    std::vector<LatticePoint> chain;
    for (const auto& p : points) {
        while (chain.size() >= 2 && orientation(chain[chain.size() - 2], chain.back(), p) <= 0) chain.pop_back();
        chain.push_back(p);
    }
    return chain;
}

std::vector<LatticePoint> upper_hull(std::vector<LatticePoint> points)
{
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    std::vector<LatticePoint> chain;
    for (auto it = points.rbegin(); it != points.rend(); ++it) {
        while (chain.size() >= 2 && orientation(chain[chain.size() - 2], chain.back(), *it) <= 0) chain.pop_back();
        chain.push_back(*it);
    }
    std::reverse(chain.begin(), chain.end());
    return chain;
}

std::int64_t integer_length(const LatticePoint& p, const LatticePoint& q)
{
    return std::gcd(std::llabs(q.i - p.i), std::llabs(q.j - p.j));
}

std::vector<LatticePoint> segment_points(const LatticePoint& p, const LatticePoint& q)
{
    const std::int64_t g = integer_length(p, q);
    if (g == 0) return {p};
    const std::int64_t di = (q.i - p.i) / g;
    const std::int64_t dj = (q.j - p.j) / g;
    std::vector<LatticePoint> out;
    out.reserve(static_cast<std::size_t>(g) + 1);
    for (std::int64_t t = 0; t <= g; ++t) {
        out.push_back({p.i + t * di, p.j + t * dj});
    }
    return out;
}

std::int64_t lattice_index(const LatticePoint& apex, const LatticePoint& arm1, const LatticePoint& arm2)
{
    const std::int64_t g1 = integer_length(apex, arm1);
    const std::int64_t g2 = integer_length(apex, arm2);
    if (g1 == 0 || g2 == 0) {
        throw std::invalid_argument("lattice_index: arm ends at the apex");
    }
    const std::int64_t ui = (arm1.i - apex.i) / g1;
    const std::int64_t uj = (arm1.j - apex.j) / g1;
    const std::int64_t vi = (arm2.i - apex.i) / g2;
    const std::int64_t vj = (arm2.j - apex.j) / g2;
    const std::int64_t det = ui * vj - uj * vi;
    if (det == 0) {
        throw std::invalid_argument("lattice_index: collinear arms");
    }
    return std::llabs(det);
}

}  // namespace markov
