#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "markov/topograph.hpp"

namespace markov {

/// Membership in the scaled polygon: xi > 0, eta > 0, xi + alpha*eta > alpha, xi + eta < alpha + 1.
struct ScaledPolygon {
    double alpha = 0.0;
    [[nodiscard]] bool contains(double xi, double eta) const noexcept
    {
        return xi > 0 && eta > 0 && xi + alpha * eta > alpha && xi + eta < alpha + 1;
    }
};

/// -p ln p - (1-p) ln(1-p) with 0 ln 0 = 0. Throws std::domain_error outside [0, 1].
[[nodiscard]] double shannon_H(double p);

/// (1-eta) H(xi/(1-eta)) + (xi+eta) H(xi/(xi+eta)) on the open triangle xi, eta > 0, xi + eta < 1.
[[nodiscard]] double fib_entropy(double xi, double eta);

struct Gradient {
    double xi;
    double eta;
};

struct Hessian {
    double xx;
    double xy;
    double yy;
    [[nodiscard]] double det() const noexcept { return xx * yy - xy * xy; }
    [[nodiscard]] double norm() const noexcept;
};

[[nodiscard]] Gradient fib_entropy_gradient(double xi, double eta);
[[nodiscard]] Hessian fib_entropy_hessian(double xi, double eta);
/// 1 / (eta (xi+eta) (1-eta) (1-xi-eta))
[[nodiscard]] double fib_entropy_hessian_det(double xi, double eta);
/// Central second differences with step h.
[[nodiscard]] Hessian numeric_hessian(double xi, double eta, double h);

struct EntropySample {
    std::string family;
    std::int64_t n = 0;
    double xi = 0;
    double eta = 0;
    std::int64_t i = 0;
    std::int64_t j = 0;
    double value = 0;
};

/// ln C(m, k) by log-gamma, with the same degenerate conventions as binom().
[[nodiscard]] double log_binom(std::int64_t m, std::int64_t k);

/*
 * Nearest lattice point of the polygon of 1/n to (round(n xi), round(n eta))
 * under L1 distance, ties towards smaller i and then smaller j.
 */
[[nodiscard]] std::pair<std::int64_t, std::int64_t> clamp_to_fib_polygon(std::int64_t n, double xi, double eta);

/// (1/n) ln A_{i,j}(1/n) from the closed binomial form. Requires n >= 3.
[[nodiscard]] EntropySample empirical_entropy(std::int64_t n, double xi, double eta);

/// (1/n) ln C(n, round(p n)).
[[nodiscard]] double binomial_empirical_entropy(std::int64_t n, double p);

struct EntropyMaximum {
    double xi;
    double eta;
    double value;
};

/// Grid search followed by Newton refinement on the gradient.
[[nodiscard]] EntropyMaximum maximize_fib_entropy(int grid = 200);

struct HessianReport {
    int points = 0;
    /// Largest |numeric - closed| entry difference over the closed Hessian's norm.
    double max_entry_error = 0;
    double max_det_error = 0;
    bool concave = true;
    EntropyMaximum maximum{};
    double argmax_error = 0;
    double value_error = 0;

    [[nodiscard]] bool pass(double entry_tol = 1e-4, double argmax_tol = 1e-6, double value_tol = 1e-9) const
    {
        return concave && max_entry_error <= entry_tol && max_det_error <= entry_tol && argmax_error <= argmax_tol &&
               value_error <= value_tol;
    }
};

/*
 * On a resolution x resolution grid over [0.05, 0.95]^2 restricted to
 * xi + eta <= 0.95: numeric vs closed Hessian, strict concavity, and the
 * location and value of the maximum.
 */
[[nodiscard]] HessianReport hessian_checks(int resolution = 20, double h = 1e-4);

/// Location of the maximum, (1/sqrt 5, (5 - sqrt 5)/10), and its value 2 ln phi.
[[nodiscard]] EntropyMaximum fib_entropy_peak();

struct SurfaceRow {
    double xi;
    double eta;
    double F;
    double empirical;
};

/// Cell-centred samples ((k + 1/2)/grid, (l + 1/2)/grid) with xi + eta < 1.
[[nodiscard]] std::vector<SurfaceRow> entropy_surface(std::int64_t n, int grid);

struct EntropyBound {
    double max_value = 0;
    double bound = 0;
    [[nodiscard]] bool pass() const noexcept { return max_value < bound; }
};

/// max (1/b) ln A_ij against ln(3) (a+b-1)/b, from A_ij < m_rho <= 3^(a+b-1).
[[nodiscard]] EntropyBound entropy_bound_check(const MarkovPolynomial& m);

/// Natural log of a positive big integer.
[[nodiscard]] double log_bigint(const BigInt& x);

}  // namespace markov
