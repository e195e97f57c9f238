#pragma once

// Sparse multivariate polynomials in x_1..x_n with exact rational coefficients.
// Variables are 0-indexed internally (x_1 is variable 0).

#include <algorithm>
#include <cstdlib>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace mspring {

using Rational = mpq_class;
using Exponent = std::vector<int>;

class Poly {
public:
    Poly() = default;
    explicit Poly(int nvars) : n_(nvars) {}

    static Poly constant(int nvars, const Rational& c)
    {
        Poly p(nvars);
        p.add_term(Exponent(static_cast<std::size_t>(nvars), 0), c);
        return p;
    }
    static Poly variable(int nvars, int k)
    {
        Exponent e(static_cast<std::size_t>(nvars), 0);
        e.at(static_cast<std::size_t>(k)) = 1;
        Poly p(nvars);
        p.add_term(e, 1);
        return p;
    }
    static Poly monomial(const Exponent& e, const Rational& c = 1)
    {
        Poly p(static_cast<int>(e.size()));
        p.add_term(e, c);
        return p;
    }

    int nvars() const noexcept { return n_; }
    bool is_zero() const noexcept { return t_.empty(); }
    const std::map<Exponent, Rational>& terms() const noexcept { return t_; }

    void add_term(const Exponent& e, const Rational& c)
    {
        if (static_cast<int>(e.size()) != n_)
            throw std::invalid_argument("monomial has wrong number of variables");
        if (c == 0)
            return;
        auto& slot = t_[e];
        slot += c;
        if (slot == 0)
            t_.erase(e);
    }

    /// Total degree of the highest term, -1 for zero.
    int degree() const
    {
        int d = -1;
        for (const auto& [e, c] : t_)
            d = std::max(d, total(e));
        return d;
    }
    bool is_homogeneous() const
    {
        if (t_.empty())
            return true;
        int d = total(t_.begin()->first);
        return std::all_of(t_.begin(), t_.end(), [&](const auto& kv) { return total(kv.first) == d; });
    }

    Poly& operator+=(const Poly& o)
    {
        check(o);
        for (const auto& [e, c] : o.t_)
            add_term(e, c);
        return *this;
    }
    Poly& operator-=(const Poly& o)
    {
        check(o);
        for (const auto& [e, c] : o.t_)
            add_term(e, -c);
        return *this;
    }
    Poly operator-() const { return scaled(-1); }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    Poly scaled(const Rational& k) const
    {
        Poly p(n_);
        if (k == 0)
            return p;
        for (const auto& [e, c] : t_)
            p.t_.emplace(e, c * k);
        return p;
    }

    friend Poly operator*(const Poly& a, const Poly& b)
    {
        a.check(b);
        Poly p(a.n_);
        for (const auto& [ea, ca] : a.t_)
            for (const auto& [eb, cb] : b.t_) {
                Exponent e(ea);
                for (std::size_t k = 0; k < e.size(); ++k)
                    e[k] += eb[k];
                p.add_term(e, ca * cb);
            }
        return p;
    }

    Poly times_variable(int k) const
    {
        Poly p(n_);
        for (const auto& [e, c] : t_) {
            Exponent f(e);
            ++f.at(static_cast<std::size_t>(k));
            p.t_.emplace(std::move(f), c);
        }
        return p;
    }

    /// Exchange of variables a and b.
    Poly swapped(int a, int b) const
    {
        Poly p(n_);
        for (const auto& [e, c] : t_) {
            Exponent f(e);
            std::swap(f.at(static_cast<std::size_t>(a)), f.at(static_cast<std::size_t>(b)));
            p.t_.emplace(std::move(f), c);
        }
        return p;
    }

    /// Apply a permutation of variables: x_k -> x_{w[k]}.
    Poly permuted(const std::vector<int>& w) const
    {
        Poly p(n_);
        for (const auto& [e, c] : t_) {
            Exponent f(e.size(), 0);
            for (std::size_t k = 0; k < e.size(); ++k)
                f[static_cast<std::size_t>(w[k])] = e[k];
            p.t_.emplace(std::move(f), c);
        }
        return p;
    }

    /// (f - s_{ab} f) / (x_a - x_b), computed monomialwise.
    Poly divided_difference(int a, int b) const
    {
        Poly p(n_);
        auto ia = static_cast<std::size_t>(a), ib = static_cast<std::size_t>(b);
        for (const auto& [e, c] : t_) {
            int ea = e[ia], eb = e[ib];
            if (ea == eb)
                continue;
            int lo = std::min(ea, eb), gap = std::abs(ea - eb);
            Rational sign = ea > eb ? 1 : -1;
            for (int k = 0; k < gap; ++k) {
                Exponent f(e);
                f[ia] = lo + gap - 1 - k;
                f[ib] = lo + k;
                p.add_term(f, c * sign);
            }
        }
        return p;
    }

    friend bool operator==(const Poly&, const Poly&) = default;

    std::string str() const
    {
        if (t_.empty())
            return "0";
        std::string out;
        bool first = true;
        for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
            const auto& [e, c] = *it;
            std::string mono;
            for (std::size_t k = 0; k < e.size(); ++k) {
                if (e[k] == 0)
                    continue;
                if (!mono.empty())
                    mono += "*";
                mono += "x" + std::to_string(k + 1);
                if (e[k] > 1)
                    mono += "^" + std::to_string(e[k]);
            }
            Rational mag = abs(c);
            if (!first)
                out += c < 0 ? " - " : " + ";
            else if (c < 0)
                out += "-";
            if (mono.empty())
                out += mag.get_str();
            else if (mag == 1)
                out += mono;
            else
                out += mag.get_str() + "*" + mono;
            first = false;
        }
        return out;
    }

    static int total(const Exponent& e)
    {
        int s = 0;
        for (int x : e)
            s += x;
        return s;
    }

private:
    void check(const Poly& o) const
    {
        if (o.n_ != n_)
            throw std::invalid_argument("polynomials in different numbers of variables");
    }

    int n_ = 0;
    std::map<Exponent, Rational> t_;
};

/// Exponent vectors of total degree exactly deg in n variables, ascending.
inline std::vector<Exponent> monomials_of_degree(int n, int deg)
{
    std::vector<Exponent> out;
    Exponent e(static_cast<std::size_t>(n), 0);
    auto rec = [&](auto& self, int k, int left) -> void {
        if (k == n - 1) {
            e[static_cast<std::size_t>(k)] = left;
            out.push_back(e);
            return;
        }
        for (int x = left; x >= 0; --x) {
            e[static_cast<std::size_t>(k)] = x;
            self(self, k + 1, left - x);
        }
    };
    if (n == 0) {
        if (deg == 0)
            out.push_back(e);
        return out;
    }
    rec(rec, 0, deg);
    std::sort(out.begin(), out.end());
    return out;
}

/// Random polynomial with small integer coefficients and degree at most maxdeg.
template <typename Rng>
Poly random_poly(Rng& rng, int n, int maxdeg, int terms)
{
    std::uniform_int_distribution<int> coef(-5, 5);
    std::uniform_int_distribution<int> pick_deg(0, maxdeg);
    Poly p(n);
    for (int t = 0; t < terms; ++t) {
        auto monos = monomials_of_degree(n, pick_deg(rng));
        std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
        p.add_term(monos[pick(rng)], coef(rng));
    }
    return p;
}

template <typename Rng>
Poly random_homogeneous_poly(Rng& rng, int n, int deg, int terms)
{
    std::uniform_int_distribution<int> coef(-5, 5);
    auto monos = monomials_of_degree(n, deg);
    std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
    Poly p(n);
    for (int t = 0; t < terms; ++t)
        p.add_term(monos[pick(rng)], coef(rng));
    return p;
}

} // namespace mspring
