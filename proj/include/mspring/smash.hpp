#pragma once

// The smash product S # Q[W] of the polynomial ring in n variables with the
// symmetric group, acting by permutation of variables.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "poly.hpp"

namespace mspring {

/// w as the image list (w(0), ..., w(n-1)).
using Perm = std::vector<int>;

inline Perm identity_perm(int n)
{
    Perm w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 0);
    return w;
}

inline Perm transposition(int n, int r)
{
    auto w = identity_perm(n);
    std::swap(w.at(static_cast<std::size_t>(r)), w.at(static_cast<std::size_t>(r + 1)));
    return w;
}

/// (w v)(k) = w(v(k))
inline Perm compose(const Perm& w, const Perm& v)
{
    if (w.size() != v.size())
        throw std::invalid_argument("permutations of different sizes");
    Perm out(w.size());
    for (std::size_t k = 0; k < v.size(); ++k)
        out[k] = w[static_cast<std::size_t>(v[k])];
    return out;
}

inline Perm inverse_perm(const Perm& w)
{
    Perm out(w.size());
    for (std::size_t k = 0; k < w.size(); ++k)
        out[static_cast<std::size_t>(w[k])] = static_cast<int>(k);
    return out;
}

inline int perm_length(const Perm& w)
{
    int len = 0;
    for (std::size_t a = 0; a < w.size(); ++a)
        for (std::size_t b = a + 1; b < w.size(); ++b)
            len += w[a] > w[b];
    return len;
}

inline std::vector<Perm> all_perms(int n)
{
    std::vector<Perm> out;
    auto w = identity_perm(n);
    do
        out.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    return out;
}

inline std::string perm_str(const Perm& w)
{
    std::string s = "[";
    for (std::size_t k = 0; k < w.size(); ++k)
        s += (k ? "," : "") + std::to_string(w[k] + 1);
    return s + "]";
}

/// Finite sum of f_w * w.
class SmashElement {
public:
    SmashElement() = default;
    explicit SmashElement(int n) : n_(n) {}

    static SmashElement term(const Poly& f, const Perm& w)
    {
        if (static_cast<int>(w.size()) != f.nvars())
            throw std::invalid_argument("permutation size does not match polynomial ring");
        SmashElement s(f.nvars());
        s.add(w, f);
        return s;
    }
    static SmashElement one(int n) { return term(Poly::constant(n, 1), identity_perm(n)); }
    static SmashElement poly(const Poly& f) { return term(f, identity_perm(f.nvars())); }
    static SmashElement group(const Perm& w) { return term(Poly::constant(static_cast<int>(w.size()), 1), w); }

    int n() const noexcept { return n_; }
    bool is_zero() const noexcept { return parts_.empty(); }
    const std::map<Perm, Poly>& parts() const noexcept { return parts_; }

    Poly at(const Perm& w) const
    {
        auto it = parts_.find(w);
        return it == parts_.end() ? Poly(n_) : it->second;
    }

    void add(const Perm& w, const Poly& f)
    {
        if (f.nvars() != n_ || static_cast<int>(w.size()) != n_)
            throw std::invalid_argument("smash element size mismatch");
        if (f.is_zero())
            return;
        auto [it, fresh] = parts_.emplace(w, f);
        if (!fresh) {
            it->second += f;
            if (it->second.is_zero())
                parts_.erase(it);
        }
    }

    SmashElement& operator+=(const SmashElement& o)
    {
        check(o);
        for (const auto& [w, f] : o.parts_)
            add(w, f);
        return *this;
    }
    SmashElement& operator-=(const SmashElement& o) { return *this += o.scaled(-1); }
    friend SmashElement operator+(SmashElement a, const SmashElement& b) { return a += b; }
    friend SmashElement operator-(SmashElement a, const SmashElement& b) { return a -= b; }

    SmashElement scaled(const Rational& k) const
    {
        SmashElement s(n_);
        for (const auto& [w, f] : parts_)
            s.add(w, f.scaled(k));
        return s;
    }

    friend bool operator==(const SmashElement&, const SmashElement&) = default;

    /// Polynomial degree if every term is homogeneous of one degree.
    std::optional<int> homogeneous_degree() const
    {
        std::optional<int> deg;
        for (const auto& [w, f] : parts_) {
            if (!f.is_homogeneous())
                return std::nullopt;
            if (deg && *deg != f.degree())
                return std::nullopt;
            deg = f.degree();
        }
        return deg;
    }

    std::string str() const
    {
        if (parts_.empty())
            return "0";
        std::string out;
        for (const auto& [w, f] : parts_) {
            if (!out.empty())
                out += " + ";
            out += "(" + f.str() + ")*" + perm_str(w);
        }
        return out;
    }

    void check(const SmashElement& o) const
    {
        if (o.n_ != n_)
            throw std::invalid_argument("smash elements over different n");
    }

private:
    int n_ = 0;
    std::map<Perm, Poly> parts_;
};

/// (f w)(g v) = f w(g) (w v)
inline SmashElement smash_mul(const SmashElement& a, const SmashElement& b)
{
    a.check(b);
    SmashElement out(a.n());
    for (const auto& [w, f] : a.parts())
        for (const auto& [v, g] : b.parts())
            out.add(compose(w, v), f * g.permuted(w));
    return out;
}

inline SmashElement operator*(const SmashElement& a, const SmashElement& b) { return smash_mul(a, b); }

/// Inverse of an element of Q[W] (constant coefficients), by solving on the
/// regular representation. Empty when not invertible.
inline std::optional<SmashElement> group_algebra_inverse(const SmashElement& a)
{
    const int n = a.n();
    auto perms = all_perms(n);
    std::map<Perm, int> index;
    for (std::size_t k = 0; k < perms.size(); ++k)
        index[perms[k]] = static_cast<int>(k);
    const int size = static_cast<int>(perms.size());
    // unknown b = sum b_v v with a b = 1
    linalg::Matrix m(size, size);
    for (const auto& [w, f] : a.parts()) {
        if (f.degree() > 0)
            throw std::invalid_argument("group algebra inverse needs constant coefficients");
        Rational c = f.terms().begin()->second;
        for (int col = 0; col < size; ++col)
            m(index.at(compose(w, perms[static_cast<std::size_t>(col)])), col) += c;
    }
    std::vector<Rational> rhs(static_cast<std::size_t>(size));
    rhs[static_cast<std::size_t>(index.at(identity_perm(n)))] = 1;
    auto x = linalg::solve(m, rhs);
    if (!x)
        return std::nullopt;
    SmashElement out(n);
    for (int col = 0; col < size; ++col)
        out.add(perms[static_cast<std::size_t>(col)], Poly::constant(n, (*x)[static_cast<std::size_t>(col)]));
    // a b = 1 in a finite-dimensional algebra forces b a = 1.
    return out;
}

/// Dimension of the degree-deg slice: n! times the monomial count.
inline long smash_slice_dim(int n, int deg)
{
    return static_cast<long>(all_perms(n).size()) * static_cast<long>(monomials_of_degree(n, deg).size());
}

/// For each degree 0..maxdeg, the dimension of the elements of that degree
/// commuting with x_1 and all simple transpositions.
inline std::vector<int> smash_center_dims(int n, int maxdeg)
{
    if (n < 1)
        throw std::invalid_argument("smash product needs n >= 1");
    auto perms = all_perms(n);
    std::vector<int> out;
    for (int deg = 0; deg <= maxdeg; ++deg) {
        auto monos = monomials_of_degree(n, deg);
        std::vector<SmashElement> basis;
        for (const auto& w : perms)
            for (const auto& e : monos)
                basis.push_back(SmashElement::term(Poly::monomial(e), w));
        std::vector<SmashElement> tests{SmashElement::poly(Poly::variable(n, 0))};
        for (int r = 0; r + 1 < n; ++r)
            tests.push_back(SmashElement::group(transposition(n, r)));
        // columns: basis elements; rows: coordinates of [t, b] for each test t
        std::map<std::pair<int, std::pair<Perm, Exponent>>, int> rows;
        std::vector<std::vector<std::pair<int, Rational>>> cols(basis.size());
        for (std::size_t c = 0; c < basis.size(); ++c)
            for (std::size_t t = 0; t < tests.size(); ++t) {
                auto comm = tests[t] * basis[c] - basis[c] * tests[t];
                for (const auto& [w, f] : comm.parts())
                    for (const auto& [e, coef] : f.terms()) {
                        auto key = std::make_pair(static_cast<int>(t), std::make_pair(w, e));
                        auto it = rows.try_emplace(key, static_cast<int>(rows.size())).first;
                        cols[c].emplace_back(it->second, coef);
                    }
            }
        linalg::Matrix m(static_cast<int>(rows.size()), static_cast<int>(basis.size()));
        for (std::size_t c = 0; c < cols.size(); ++c)
            for (const auto& [r, coef] : cols[c])
                m(r, static_cast<int>(c)) = coef;
        out.push_back(static_cast<int>(basis.size()) - linalg::rank(m));
    }
    return out;
}

} // namespace mspring
