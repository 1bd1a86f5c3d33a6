#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "markov/entropy.hpp"
#include "markov/homog_poly.hpp"
#include "markov/sails.hpp"
#include "markov/topograph.hpp"

namespace markov {

/// {"degree": d, "coeffs": [{"i": i, "j": j, "c": "<decimal>"}, ...]} sorted by (i, j).
[[nodiscard]] nlohmann::json to_json(const HomogPoly& p);
/// Throws std::invalid_argument on malformed input.
[[nodiscard]] HomogPoly homog_from_json(const nlohmann::json& j);

/// The HomogPoly object plus "rho" and "denom".
[[nodiscard]] nlohmann::json to_json(const MarkovPolynomial& m);

/// Header `i,j,coeff`, nonzero entries sorted by (j, i).
[[nodiscard]] std::string grid_csv(const HomogPoly& p);

/// Weighted polygon as text, rows j descending, '.' for a zero entry.
[[nodiscard]] std::string render_grid(const HomogPoly& p);

/// Human-readable M = P(x^2, y^2, z^2) / x^.. y^.. z^..
[[nodiscard]] std::string describe(const MarkovPolynomial& m);

[[nodiscard]] nlohmann::json to_json(const SailReport& r);

/// Header `xi,eta,F,empirical_n<N>`.
[[nodiscard]] std::string entropy_csv(const std::vector<SurfaceRow>& rows, std::int64_t n);

[[nodiscard]] nlohmann::json to_json(const LatticePoint& p);

}  // namespace markov
