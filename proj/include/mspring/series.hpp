#pragma once

// Truncated Laurent series in the half-twist variable u, with q = u^2.
//
// A series stores exact integer coefficients for exponents in
// [min_exp, trunc]; everything above trunc is unknown.

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace mspring {

inline constexpr int default_truncation = 24;

class HalfLaurentSeries {
public:
    using Coef = mpz_class;

    /// The zero series known through exponent trunc.
    explicit HalfLaurentSeries(int trunc = default_truncation) : trunc_(trunc) {}

    static HalfLaurentSeries monomial(int exp, Coef c = 1, int trunc = default_truncation)
    {
        HalfLaurentSeries s(trunc);
        s.add_term(exp, std::move(c));
        return s;
    }
    static HalfLaurentSeries one(int trunc = default_truncation) { return monomial(0, 1, trunc); }

    /// Series from a finite polynomial in u (exponent -> coefficient).
    static HalfLaurentSeries polynomial(const std::map<int, Coef>& coef, int trunc = default_truncation)
    {
        HalfLaurentSeries s(trunc);
        for (const auto& [e, c] : coef)
            s.add_term(e, c);
        return s;
    }

    int trunc() const noexcept { return trunc_; }
    bool is_zero() const noexcept { return c_.empty(); }

    /// Lowest exponent with a nonzero coefficient; throws on the zero series.
    int min_exp() const
    {
        if (c_.empty())
            throw std::logic_error("min_exp of the zero series");
        return c_.begin()->first;
    }

    Coef operator[](int e) const
    {
        if (e > trunc_)
            throw std::out_of_range("coefficient above truncation order");
        auto it = c_.find(e);
        return it == c_.end() ? Coef(0) : it->second;
    }

    const std::map<int, Coef>& terms() const noexcept { return c_; }

    void add_term(int e, Coef c)
    {
        if (e > trunc_ || c == 0)
            return;
        auto& slot = c_[e];
        slot += c;
        if (slot == 0)
            c_.erase(e);
    }

    HalfLaurentSeries truncated(int n) const
    {
        HalfLaurentSeries s(std::min(n, trunc_));
        for (const auto& [e, c] : c_)
            s.add_term(e, c);
        return s;
    }

    HalfLaurentSeries& operator+=(const HalfLaurentSeries& o)
    {
        int t = std::min(trunc_, o.trunc_);
        drop_above(t);
        for (const auto& [e, c] : o.c_)
            add_term(e, c);
        return *this;
    }
    HalfLaurentSeries operator-() const
    {
        HalfLaurentSeries s(trunc_);
        for (const auto& [e, c] : c_)
            s.c_[e] = -c;
        return s;
    }
    HalfLaurentSeries& operator-=(const HalfLaurentSeries& o) { return *this += -o; }
    friend HalfLaurentSeries operator+(HalfLaurentSeries a, const HalfLaurentSeries& b) { return a += b; }
    friend HalfLaurentSeries operator-(HalfLaurentSeries a, const HalfLaurentSeries& b) { return a -= b; }

    /// Known range of a product: a is exact through trunc_a, so a*b is exact
    /// through trunc_a + min_exp(b), and symmetrically.
    friend HalfLaurentSeries operator*(const HalfLaurentSeries& a, const HalfLaurentSeries& b)
    {
        if (a.is_zero() || b.is_zero())
            return HalfLaurentSeries(std::min(a.trunc_ + (b.is_zero() ? 0 : b.min_exp()),
                b.trunc_ + (a.is_zero() ? 0 : a.min_exp())));
        int t = std::min(a.trunc_ + b.min_exp(), b.trunc_ + a.min_exp());
        HalfLaurentSeries s(t);
        for (const auto& [ea, ca] : a.c_)
            for (const auto& [eb, cb] : b.c_)
                if (ea + eb <= t)
                    s.add_term(ea + eb, ca * cb);
        return s;
    }
    HalfLaurentSeries& operator*=(const HalfLaurentSeries& o) { return *this = *this * o; }

    HalfLaurentSeries scaled(const Coef& k) const
    {
        HalfLaurentSeries s(trunc_);
        for (const auto& [e, c] : c_)
            s.add_term(e, c * k);
        return s;
    }

    /// Multiplication by u^k.
    HalfLaurentSeries shifted(int k) const
    {
        HalfLaurentSeries s(trunc_ + k);
        for (const auto& [e, c] : c_)
            s.c_[e + k] = c;
        return s;
    }

    /// Inverse of a series whose lowest coefficient is a unit (+1 or -1).
    HalfLaurentSeries inverse() const
    {
        if (is_zero())
            throw std::domain_error("cannot invert the zero series");
        int v = min_exp();
        Coef lead = c_.begin()->second;
        if (lead != 1 && lead != -1)
            throw std::domain_error("lowest coefficient is not a unit");
        // s = u^v * lead * (1 + r); the result is exact through trunc - 2v.
        int t = trunc_ - 2 * v;
        int span = t + v; // exponents of (1 + r)^{-1} needed: 0 .. span
        HalfLaurentSeries out(t);
        if (span < 0)
            return out;
        std::vector<Coef> a(static_cast<std::size_t>(span + 1)), b(static_cast<std::size_t>(span + 1));
        for (const auto& [e, c] : c_)
            if (e - v <= span)
                a[static_cast<std::size_t>(e - v)] = c * lead;
        b[0] = 1;
        for (int k = 1; k <= span; ++k) {
            Coef acc = 0;
            for (int j = 1; j <= k; ++j)
                acc += a[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(k - j)];
            b[static_cast<std::size_t>(k)] = -acc;
        }
        for (int k = 0; k <= span; ++k)
            out.add_term(k - v, b[static_cast<std::size_t>(k)] * lead);
        return out;
    }

    /// Substitution q -> u^2 applied to a series written in q.
    static HalfLaurentSeries from_q(const std::map<int, Coef>& q_coef, int trunc = default_truncation)
    {
        HalfLaurentSeries s(trunc);
        for (const auto& [e, c] : q_coef)
            s.add_term(2 * e, c);
        return s;
    }

    /// Exact agreement through the smaller of the two truncation orders.
    bool agrees_with(const HalfLaurentSeries& o, int* first_discrepancy = nullptr) const
    {
        int t = std::min(trunc_, o.trunc_);
        std::vector<int> exps;
        for (const auto& [e, c] : c_)
            exps.push_back(e);
        for (const auto& [e, c] : o.c_)
            exps.push_back(e);
        std::sort(exps.begin(), exps.end());
        for (int e : exps) {
            if (e > t)
                break;
            if ((*this)[e] != o[e]) {
                if (first_discrepancy)
                    *first_discrepancy = e;
                return false;
            }
        }
        return true;
    }

    friend bool operator==(const HalfLaurentSeries& a, const HalfLaurentSeries& b)
    {
        return a.trunc_ == b.trunc_ && a.c_ == b.c_;
    }

    /// "c*u^k + ..." rendering, lowest exponent first.
    std::string str() const
    {
        if (c_.empty())
            return "0 + O(u^" + std::to_string(trunc_ + 1) + ")";
        std::string out;
        for (const auto& [e, c] : c_) {
            if (!out.empty())
                out += c < 0 ? " - " : " + ";
            else if (c < 0)
                out += "-";
            mpz_class mag = abs(c);
            if (e == 0)
                out += mag.get_str();
            else {
                if (mag != 1)
                    out += mag.get_str() + "*";
                out += "u^" + std::to_string(e);
            }
        }
        return out + " + O(u^" + std::to_string(trunc_ + 1) + ")";
    }

private:
    void drop_above(int t)
    {
        trunc_ = t;
        c_.erase(c_.upper_bound(t), c_.end());
    }

    int trunc_;
    std::map<int, Coef> c_;
};

/// (1 - u^{2k})^{-1} products: Poincare series of the Chow ring of BGL_m.
inline HalfLaurentSeries bgl(int m, int trunc = default_truncation)
{
    if (m < 0)
        throw std::invalid_argument("bgl of a negative rank");
    auto out = HalfLaurentSeries::one(trunc);
    for (int k = 1; k <= m; ++k)
        out *= HalfLaurentSeries::polynomial({{0, 1}, {2 * k, -1}}, trunc).inverse();
    return out;
}

/// (1 - u^2)^{-n}
inline HalfLaurentSeries free_polynomial_series(int n, int trunc = default_truncation)
{
    auto factor = HalfLaurentSeries::polynomial({{0, 1}, {2, -1}}, trunc).inverse();
    auto out = HalfLaurentSeries::one(trunc);
    for (int k = 0; k < n; ++k)
        out *= factor;
    return out;
}

} // namespace mspring
