#include "markov/homog_poly.hpp"

#include <sstream>

namespace markov {

namespace {

const BigInt& zero_coeff()
{
    static const BigInt zero = 0;
    return zero;
}

void require_same_degree(const HomogPoly& p, const HomogPoly& q, const char* op)
{
    if (p.degree() != q.degree()) {
        throw std::invalid_argument(std::string(op) + ": degree mismatch " + std::to_string(p.degree()) + " vs " +
                                    std::to_string(q.degree()));
    }
}

}  // namespace

HomogPoly::HomogPoly(int degree) : degree_(degree)
{
    if (degree < 0) {
        throw std::invalid_argument("negative degree");
    }
    const auto d = static_cast<std::size_t>(degree);
    coeffs_.resize((d + 1) * (d + 2) / 2);
}

HomogPoly HomogPoly::monomial(int i, int j, int k, const BigInt& coeff)
{
    if (i < 0 || j < 0 || k < 0) {
        throw std::invalid_argument("negative exponent in monomial");
    }
    HomogPoly p(i + j + k);
    p.set_coeff(i, j, coeff);
    return p;
}

HomogPoly HomogPoly::from_terms(int degree, const std::vector<Term>& terms)
{
    HomogPoly p(degree);
    for (const auto& t : terms) {
        p.set_coeff(t.i, t.j, p.coeff(t.i, t.j) + t.coeff);
    }
    return p;
}

const BigInt& HomogPoly::coeff(int i, int j) const
{
    if (!in_range(i, j)) {
        return zero_coeff();
    }
    return coeffs_[index(i, j)];
}

void HomogPoly::set_coeff(int i, int j, const BigInt& value)
{
    if (!in_range(i, j)) {
        throw std::out_of_range("exponent (" + std::to_string(i) + "," + std::to_string(j) +
                                ") outside degree " + std::to_string(degree_));
    }
    if (sgn(value) < 0) {
        throw std::invalid_argument("negative coefficient");
    }
    coeffs_[index(i, j)] = value;
}

std::vector<Term> HomogPoly::terms() const
{
    std::vector<Term> out;
    for (int i = 0; i <= degree_; ++i) {
        for (int j = 0; i + j <= degree_; ++j) {
            const auto& c = coeffs_[index(i, j)];
            if (sgn(c) != 0) {
                out.push_back({i, j, c});
            }
        }
    }
    return out;
}

std::size_t HomogPoly::term_count() const
{
    std::size_t n = 0;
    for (const auto& c : coeffs_) {
        n += sgn(c) != 0 ? 1 : 0;
    }
    return n;
}

bool HomogPoly::is_zero() const
{
    for (const auto& c : coeffs_) {
        if (sgn(c) != 0) return false;
    }
    return true;
}

void HomogPoly::check_invariants() const
{
    const auto d = static_cast<std::size_t>(degree_);
    if (coeffs_.size() != (d + 1) * (d + 2) / 2) {
        throw std::logic_error("HomogPoly storage does not match its degree");
    }
    for (int j = 0; j <= degree_; ++j) {
        for (int i = 0; i + j <= degree_; ++i) {
            if (sgn(coeffs_[index(i, j)]) < 0) {
                throw std::logic_error("HomogPoly has a negative coefficient at (" + std::to_string(i) + "," +
                                       std::to_string(j) + ")");
            }
        }
    }
}

bool operator==(const HomogPoly& lhs, const HomogPoly& rhs)
{
    return lhs.degree_ == rhs.degree_ && lhs.coeffs_ == rhs.coeffs_;
}

HomogPoly add(const HomogPoly& p, const HomogPoly& q)
{
    require_same_degree(p, q, "add");
    HomogPoly r = p;
    for (std::size_t k = 0; k < r.coeffs_.size(); ++k) {
        r.coeffs_[k] += q.coeffs_[k];
    }
    return r;
}

HomogPoly sub(const HomogPoly& p, const HomogPoly& q)
{
    require_same_degree(p, q, "sub");
    HomogPoly r = p;
    for (int j = 0; j <= r.degree_; ++j) {
        for (int i = 0; i + j <= r.degree_; ++i) {
            auto& c = r.coeffs_[r.index(i, j)];
            c -= q.coeffs_[q.index(i, j)];
            if (sgn(c) < 0) {
                throw NegativeCoefficientError(i, j,
                                               "subtraction produced a negative coefficient at (" +
                                                   std::to_string(i) + "," + std::to_string(j) + ")");
            }
        }
    }
    return r;
}

HomogPoly mul(const HomogPoly& p, const HomogPoly& q)
{
    HomogPoly r(p.degree_ + q.degree_);
    // collect q's support once; the inner loop is a row-wise convolution
    struct Entry {
        int i;
        int j;
        const BigInt* c;
    };
    std::vector<Entry> support;
    for (int j = 0; j <= q.degree_; ++j) {
        for (int i = 0; i + j <= q.degree_; ++i) {
            const auto& c = q.coeffs_[q.index(i, j)];
            if (sgn(c) != 0) support.push_back({i, j, &c});
        }
    }
    for (int j1 = 0; j1 <= p.degree_; ++j1) {
        for (int i1 = 0; i1 + j1 <= p.degree_; ++i1) {
            const auto& c1 = p.coeffs_[p.index(i1, j1)];
            if (sgn(c1) == 0) continue;
            for (const auto& e : support) {
                auto& target = r.coeffs_[r.index(i1 + e.i, j1 + e.j)];
                mpz_addmul(target.get_mpz_t(), c1.get_mpz_t(), e.c->get_mpz_t());
            }
        }
    }
    return r;
}

HomogPoly mul_monomial(const HomogPoly& p, int c, int d, int e)
{
    if (c < 0 || d < 0 || e < 0) {
        throw std::invalid_argument("mul_monomial: negative exponent");
    }
    HomogPoly r(p.degree_ + c + d + e);
    for (int j = 0; j <= p.degree_; ++j) {
        for (int i = 0; i + j <= p.degree_; ++i) {
            r.coeffs_[r.index(i + c, j + d)] = p.coeffs_[p.index(i, j)];
        }
    }
    return r;
}

HomogPoly mul_uvw(const HomogPoly& p)
{
    // u*p shifts i, v*p shifts j, w*p keeps (i, j) and raises the degree
    HomogPoly r = mul_monomial(p, 0, 0, 1);
    const HomogPoly pu = mul_monomial(p, 1, 0, 0);
    const HomogPoly pv = mul_monomial(p, 0, 1, 0);
    return add(add(r, pu), pv);
}

HomogPoly swap_uv(const HomogPoly& p)
{
    HomogPoly r(p.degree());
    for (const auto& t : p.terms()) {
        r.set_coeff(t.j, t.i, t.coeff);
    }
    return r;
}

BigInt eval_ones(const HomogPoly& p)
{
    BigInt sum = 0;
    for (const auto& t : p.terms()) {
        sum += t.coeff;
    }
    return sum;
}

BigRational eval_rational(const HomogPoly& p, const BigRational& u, const BigRational& v, const BigRational& w)
{
    const int d = p.degree();
    auto powers = [d](const BigRational& x) {
        std::vector<BigRational> out(static_cast<std::size_t>(d) + 1);
        out[0] = 1;
        for (int k = 1; k <= d; ++k) out[static_cast<std::size_t>(k)] = out[static_cast<std::size_t>(k - 1)] * x;
        return out;
    };
    const auto up = powers(u);
    const auto vp = powers(v);
    const auto wp = powers(w);
    BigRational sum = 0;
    for (const auto& t : p.terms()) {
        sum += BigRational(t.coeff) * up[static_cast<std::size_t>(t.i)] * vp[static_cast<std::size_t>(t.j)] *
               wp[static_cast<std::size_t>(d - t.i - t.j)];
    }
    sum.canonicalize();
    return sum;
}

std::string to_string(const HomogPoly& p)
{
    const auto ts = p.terms();
    if (ts.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    auto factor = [&os](const char* var, int e, bool& need_star) {
        if (e == 0) return;
        if (need_star) os << '*';
        os << var;
        if (e > 1) os << '^' << e;
        need_star = true;
    };
    // descending in u then v reads like the usual expansion
    for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        const int k = p.degree() - it->i - it->j;
        bool need_star = false;
        if (it->coeff != 1 || p.degree() == 0) {
            os << it->coeff.get_str();
            need_star = true;
        }
        factor("u", it->i, need_star);
        factor("v", it->j, need_star);
        factor("w", k, need_star);
    }
    return os.str();
}

}  // namespace markov
