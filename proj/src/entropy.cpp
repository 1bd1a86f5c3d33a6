#include "markov/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace markov {

namespace {

void require_triangle(double xi, double eta)
{
    if (!(xi > 0 && eta > 0 && xi + eta < 1)) {
        throw std::domain_error("(xi, eta) outside the open triangle");
    }
}

bool in_fib_polygon(std::int64_t n, std::int64_t i, std::int64_t j)
{
    // polygon of 1/n: n*i + j >= n and i + j <= n
    return i >= 0 && j >= 0 && n * i + j >= n && i + j <= n;
}

}  // namespace

double shannon_H(double p)
{
    if (!(p >= 0 && p <= 1)) throw std::domain_error("shannon_H needs p in [0,1]");
    const auto term = [](double x) { return x > 0 ? -x * std::log(x) : 0.0; };
    return term(p) + term(1 - p);
}

double fib_entropy(double xi, double eta)
{
    require_triangle(xi, eta);
    return (1 - eta) * shannon_H(xi / (1 - eta)) + (xi + eta) * shannon_H(xi / (xi + eta));
}

double Hessian::norm() const noexcept
{
    return std::sqrt(xx * xx + 2 * xy * xy + yy * yy);
}

Gradient fib_entropy_gradient(double xi, double eta)
{
    require_triangle(xi, eta);
    const double rest = std::log(1 - xi - eta);
    const double sum = std::log(xi + eta);
    return {-2 * std::log(xi) + rest + sum, rest - std::log(1 - eta) - std::log(eta) + sum};
}

Hessian fib_entropy_hessian(double xi, double eta)
{
    require_triangle(xi, eta);
    const double r = 1 / (1 - xi - eta);
    const double s = 1 / (xi + eta);
    return {-2 / xi - r + s, -r + s, -r + 1 / (1 - eta) - 1 / eta + s};
}

double fib_entropy_hessian_det(double xi, double eta)
{
    return 1 / (eta * (xi + eta) * (1 - eta) * (1 - xi - eta));
}

Hessian numeric_hessian(double xi, double eta, double h)
{
    const auto F = fib_entropy;
    const double f0 = F(xi, eta);
    const double xx = (F(xi + h, eta) - 2 * f0 + F(xi - h, eta)) / (h * h);
    const double yy = (F(xi, eta + h) - 2 * f0 + F(xi, eta - h)) / (h * h);
    const double xy = (F(xi + h, eta + h) - F(xi + h, eta - h) - F(xi - h, eta + h) + F(xi - h, eta - h)) / (4 * h * h);
    return {xx, xy, yy};
}

double log_binom(std::int64_t m, std::int64_t k)
{
    if (k == 0) return 0.0;
    if (k < 0 || m < 0 || k > m) return -std::numeric_limits<double>::infinity();
    const auto lg = [](std::int64_t x) { return std::lgamma(static_cast<double>(x) + 1.0); };
    return lg(m) - lg(k) - lg(m - k);
}

std::pair<std::int64_t, std::int64_t> clamp_to_fib_polygon(std::int64_t n, double xi, double eta)
{
    const auto i0 = static_cast<std::int64_t>(std::llround(static_cast<double>(n) * xi));
    const auto j0 = static_cast<std::int64_t>(std::llround(static_cast<double>(n) * eta));
    if (in_fib_polygon(n, i0, j0)) return {i0, j0};
    // scan L1 shells in increasing radius; within a shell, (i, j) ascending
    for (std::int64_t r = 1; r <= 4 * n + 4; ++r) {
        for (std::int64_t di = -r; di <= r; ++di) {
            const std::int64_t rest = r - std::llabs(di);
            for (const std::int64_t dj : {-rest, rest}) {
                if (in_fib_polygon(n, i0 + di, j0 + dj)) return {i0 + di, j0 + dj};
                if (rest == 0) break;
            }
        }
    }
    throw std::logic_error("no polygon point found");
}

EntropySample empirical_entropy(std::int64_t n, double xi, double eta)
{
    if (n < 3) throw std::invalid_argument("empirical_entropy needs n >= 3");
    require_triangle(xi, eta);
    const auto [i, j] = clamp_to_fib_polygon(n, xi, eta);
    const std::int64_t N = n - 1;
    const double log_a = log_binom(N - j, N + 1 - i - j) + log_binom(i + j, j);
    return {"fib", n, xi, eta, i, j, log_a / static_cast<double>(n)};
}

double binomial_empirical_entropy(std::int64_t n, double p)
{
    const auto k = static_cast<std::int64_t>(std::llround(p * static_cast<double>(n)));
    return log_binom(n, k) / static_cast<double>(n);
}

EntropyMaximum fib_entropy_peak()
{
    const double s5 = std::sqrt(5.0);
    return {1 / s5, (5 - s5) / 10, 2 * std::log((1 + s5) / 2)};
}

EntropyMaximum maximize_fib_entropy(int grid)
{
    EntropyMaximum best{0, 0, -std::numeric_limits<double>::infinity()};
    for (int k = 1; k < grid; ++k) {
        for (int l = 1; k + l < grid; ++l) {
            const double xi = static_cast<double>(k) / grid;
            const double eta = static_cast<double>(l) / grid;
            const double v = fib_entropy(xi, eta);
            if (v > best.value) best = {xi, eta, v};
        }
    }
    double xi = best.xi;
    double eta = best.eta;
    for (int iter = 0; iter < 50; ++iter) {
        const Gradient g = fib_entropy_gradient(xi, eta);
        const Hessian H = fib_entropy_hessian(xi, eta);
        const double det = H.det();
        const double dx = (H.yy * g.xi - H.xy * g.eta) / det;
        const double dy = (H.xx * g.eta - H.xy * g.xi) / det;
        xi -= dx;
        eta -= dy;
        if (std::abs(dx) + std::abs(dy) < 1e-16) break;
    }
    return {xi, eta, fib_entropy(xi, eta)};
}

HessianReport hessian_checks(int resolution, double h)
{
    HessianReport report;
    for (int k = 0; k < resolution; ++k) {
        for (int l = 0; l < resolution; ++l) {
            const double xi = 0.05 + 0.9 * k / (resolution - 1);
            const double eta = 0.05 + 0.9 * l / (resolution - 1);
            if (xi + eta > 0.95 + 1e-12) continue;
            ++report.points;
            const Hessian exact = fib_entropy_hessian(xi, eta);
            const Hessian numeric = numeric_hessian(xi, eta, h);
            const double scale = exact.norm();
            const double entry = std::max({std::abs(numeric.xx - exact.xx), std::abs(numeric.xy - exact.xy),
                                           std::abs(numeric.yy - exact.yy)}) /
                                 scale;
            const double det_closed = fib_entropy_hessian_det(xi, eta);
            report.max_entry_error = std::max(report.max_entry_error, entry);
            report.max_det_error =
                std::max(report.max_det_error, std::abs(numeric.det() - det_closed) / std::abs(det_closed));
            report.max_det_error =
                std::max(report.max_det_error, std::abs(exact.det() - det_closed) / std::abs(det_closed));
            report.concave = report.concave && exact.xx < 0 && exact.det() > 0;
        }
    }
    report.maximum = maximize_fib_entropy();
    const EntropyMaximum peak = fib_entropy_peak();
    report.argmax_error = std::hypot(report.maximum.xi - peak.xi, report.maximum.eta - peak.eta);
    report.value_error = std::abs(report.maximum.value - peak.value);
    return report;
}

std::vector<SurfaceRow> entropy_surface(std::int64_t n, int grid)
{
    std::vector<SurfaceRow> rows;
    for (int k = 0; k < grid; ++k) {
        for (int l = 0; k + l + 1 < grid; ++l) {
            const double xi = (k + 0.5) / grid;
            const double eta = (l + 0.5) / grid;
            rows.push_back({xi, eta, fib_entropy(xi, eta), empirical_entropy(n, xi, eta).value});
        }
    }
    return rows;
}

double log_bigint(const BigInt& x)
{
    if (sgn(x) <= 0) throw std::domain_error("log of a nonpositive integer");
    long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

EntropyBound entropy_bound_check(const MarkovPolynomial& m)
{
    EntropyBound out;
    const auto b = static_cast<double>(m.b());
    out.bound = std::log(3.0) * static_cast<double>(m.a() + m.b() - 1) / b;
    out.max_value = -std::numeric_limits<double>::infinity();
    for (const auto& t : m.numerator.terms()) {
        out.max_value = std::max(out.max_value, log_bigint(t.coeff) / b);
    }
    return out;
}

}  // namespace markov
