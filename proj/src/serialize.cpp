#include "markov/serialize.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace markov {

using nlohmann::json;

json to_json(const HomogPoly& p)
{
    json coeffs = json::array();
    for (const auto& t : p.terms()) {
        coeffs.push_back({{"i", t.i}, {"j", t.j}, {"c", t.coeff.get_str()}});
    }
    return {{"degree", p.degree()}, {"coeffs", std::move(coeffs)}};
}

HomogPoly homog_from_json(const json& j)
{
    try {
        HomogPoly p(j.at("degree").get<int>());
        for (const auto& e : j.at("coeffs")) {
            p.set_coeff(e.at("i").get<int>(), e.at("j").get<int>(), BigInt(e.at("c").get<std::string>()));
        }
        return p;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed polynomial JSON: ") + e.what());
    }
}

json to_json(const MarkovPolynomial& m)
{
    json out = to_json(m.numerator);
    out["rho"] = m.rho.str();
    out["denom"] = {m.denom[0], m.denom[1], m.denom[2]};
    return out;
}

std::string grid_csv(const HomogPoly& p)
{
    auto ts = p.terms();
    std::stable_sort(ts.begin(), ts.end(), [](const Term& x, const Term& y) {
        return x.j != y.j ? x.j < y.j : x.i < y.i;
    });
    std::ostringstream os;
    os << "i,j,coeff\n";
    for (const auto& t : ts) os << t.i << ',' << t.j << ',' << t.coeff.get_str() << '\n';
    return os.str();
}

std::string render_grid(const HomogPoly& p)
{
    const int d = p.degree();
    std::size_t width = 1;
    for (const auto& t : p.terms()) width = std::max(width, t.coeff.get_str().size());
    std::ostringstream os;
    for (int j = d; j >= 0; --j) {
        std::string line;
        for (int i = 0; i + j <= d; ++i) {
            const BigInt& c = p.coeff(i, j);
            std::string cell = sgn(c) == 0 ? "." : c.get_str();
            if (i > 0) line += ' ';
            line += std::string(width - cell.size(), ' ') + cell;
        }
        os << line << '\n';
    }
    return os.str();
}

std::string describe(const MarkovPolynomial& m)
{
    if (m.numerator == HomogPoly::one()) {
        // Seeds of the topograph: a bare variable.
        for (int k = 0; k < 3; ++k) {
            if (m.denom[static_cast<std::size_t>(k)] == -1) return std::string(1, "xyz"[k]);
        }
    }
    std::string out = "(" + to_string(m.numerator) + ")(x^2, y^2, z^2)";
    const char* names[] = {"x", "y", "z"};
    std::string den;
    for (int k = 0; k < 3; ++k) {
        const auto e = m.denom[static_cast<std::size_t>(k)];
        if (e == 0) continue;
        if (!den.empty()) den += ' ';
        den += names[k];
        if (e != 1) den += "^" + std::to_string(e);
    }
    if (!den.empty()) out += " / " + den;
    return out;
}

json to_json(const LatticePoint& p)
{
    return json::array({p.i, p.j});
}

json to_json(const SailReport& r)
{
    const Sail& s = r.sail;
    json out;
    out["rho"] = s.rho.str();
    out["empty"] = s.empty();
    out["quotients"] = s.quotients;
    json pts = json::array();
    for (const auto& p : s.A_vertices) pts.push_back(to_json(p));
    out["A"] = pts;
    pts = json::array();
    for (const auto& p : s.B_vertices) pts.push_back(to_json(p));
    out["B"] = pts;
    if (s.empty()) out["note"] = "empty sail: a = 1 gives no interior convergent points";
    const auto edge_lengths = [](const std::vector<LatticePoint>& vs) {
        json ls = json::array();
        for (std::size_t k = 1; k < vs.size(); ++k) ls.push_back(integer_length(vs[k - 1], vs[k]));
        return ls;
    };
    out["A_lengths"] = edge_lengths(s.A_vertices);
    out["B_lengths"] = edge_lengths(s.B_vertices);

    json segments = json::array();
    for (const auto& seg : r.segments) {
        const SailSegment& geom = s.segments[static_cast<std::size_t>(seg.k - 1)];
        json e;
        e["k"] = seg.k;
        e["from"] = to_json(geom.from);
        e["to"] = to_json(geom.to);
        e["length"] = seg.length;
        e["quotient"] = seg.quotient;
        json interior = json::array();
        for (std::size_t t = 0; t < seg.interior.size(); ++t) {
            interior.push_back({{"point", to_json(seg.interior[t])}, {"M", seg.values[t].get_str()}});
        }
        e["interior"] = interior;
        e["status"] = to_string(seg.status);
        e["difference"] = seg.difference ? json(seg.difference->get_str()) : json(nullptr);
        e["dual"] = to_json(seg.dual);
        e["dual_M"] = seg.dual_value ? json(seg.dual_value->get_str()) : json(nullptr);
        if (seg.status == SegmentStatus::checked) {
            e["duality"] = seg.duality;
        }
        segments.push_back(std::move(e));
    }
    out["segments"] = segments;

    json angles = json::array();
    for (const auto& a : r.angles) {
        angles.push_back({{"apex", a.apex}, {"index", a.index}, {"quotient", a.quotient}});
    }
    out["angles"] = angles;

    json mvals = json::array();
    for (const auto& [p, v] : r.m_values) mvals.push_back({{"point", to_json(p)}, {"M", v.get_str()}});
    out["m_values"] = mvals;

    if (!s.empty()) {
        out["location4"] = {{"convergent", r.location4.index},
                            {"point", to_json(r.location4.point)},
                            {"M", r.location4.value ? json(r.location4.value->get_str()) : json(nullptr)},
                            {"pass", r.location4.pass()}};
    }
    out["checks"] = {{"lengths", r.lengths_ok},        {"angles", r.angles_ok},
                     {"progressions", r.progressions_ok}, {"duality", r.duality_ok},
                     {"duality_sign_flipped", r.duality_sign_flipped}, {"hull", r.hull_ok}};
    return out;
}

std::string entropy_csv(const std::vector<SurfaceRow>& rows, std::int64_t n)
{
    std::ostringstream os;
    os << "xi,eta,F,empirical_n" << n << '\n';
    char buf[128];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%.6f,%.6f,%.12g,%.12g\n", r.xi, r.eta, r.F, r.empirical);
        os << buf;
    }
    return os.str();
}

}  // namespace markov
