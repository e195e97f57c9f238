#pragma once

// The KLR algebra R_d through its polynomial representation on
//   (+)_i Q[x_1..x_n] 1_i,  i ranging over words of content d.
//
//   e(j)  projects onto the summand of j;
//   x_k   multiplies by x_k;
//   psi_r on f 1_i:  if i_r = i_{r+1}:  (f - s_r f)/(x_r - x_{r+1}) 1_i
//                    otherwise:         (s_r f) * prod_{arrows i_r -> i_{r+1}} (x_r - x_{r+1}) 1_{s_r i}
//
// With this action psi_r^2 e(i) = Q_{i_r,i_{r+1}}(x_r, x_{r+1}) e(i) where
//   Q_{vw}(u,t) = prod_{v->w} (t - u) * prod_{w->v} (u - t),  Q_{vv} = 0.
// The summand 1_i sits in degree sum_{k<l} #arrows(i_k -> i_l) and x_k has
// degree 2, so psi_r e(i) is homogeneous of degree -cartan(i_r, i_{r+1}).

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <iterator>
#include <optional>
#include <tuple>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mspring/linalg.hpp"
#include "mspring/parallel.hpp"
#include "mspring/poly.hpp"
#include "mspring/quiver.hpp"

namespace mspring {

using Word = std::vector<int>;

inline std::string word_str(const Word& w)
{
    std::string s;
    for (std::size_t k = 0; k < w.size(); ++k)
        s += (k ? "," : "") + std::to_string(w[k]);
    return s;
}

class KlrAlgebra {
public:
    KlrAlgebra(Quiver q, DimVector d) : q_(std::move(q)), d_(std::move(d))
    {
        if (d_.size() != q_.vertices())
            throw std::invalid_argument("dimension vector does not match quiver");
        for (const auto& c : enumerate_complete_comps(d_))
            words_.push_back(c.word());
    }

    const Quiver& quiver() const noexcept { return q_; }
    const DimVector& dim() const noexcept { return d_; }
    int strands() const noexcept { return d_.total(); }
    const std::vector<Word>& words() const noexcept { return words_; }

    bool has_word(const Word& w) const { return std::binary_search(words_.begin(), words_.end(), w); }

    int label_degree(const Word& w) const
    {
        int deg = 0;
        for (std::size_t k = 0; k < w.size(); ++k)
            for (std::size_t l = k + 1; l < w.size(); ++l)
                deg += q_.arrows_between(w[k], w[l]);
        return deg;
    }

    /// Q_{vw}(x_a, x_b).
    Poly q_poly(int v, int w, int a, int b) const
    {
        int n = strands();
        if (v == w)
            return Poly(n);
        auto xa = Poly::variable(n, a), xb = Poly::variable(n, b);
        auto out = Poly::constant(n, 1);
        for (int k = 0; k < q_.arrows_between(v, w); ++k)
            out = out * (xb - xa);
        for (int k = 0; k < q_.arrows_between(w, v); ++k)
            out = out * (xa - xb);
        return out;
    }

    /// prod over arrows v -> w of (x_a - x_b).
    Poly crossing_factor(int v, int w, int a, int b) const
    {
        int n = strands();
        auto out = Poly::constant(n, 1);
        for (int k = 0; k < q_.arrows_between(v, w); ++k)
            out = out * (Poly::variable(n, a) - Poly::variable(n, b));
        return out;
    }

    friend bool operator==(const KlrAlgebra& a, const KlrAlgebra& b) { return a.q_ == b.q_ && a.d_ == b.d_; }

private:
    Quiver q_;
    DimVector d_;
    std::vector<Word> words_;
};

/// Element of the polynomial representation: one polynomial per word.
class LabeledPoly {
public:
    LabeledPoly() = default;
    explicit LabeledPoly(int nvars) : n_(nvars) {}
    static LabeledPoly single(const Word& w, Poly p)
    {
        LabeledPoly m(p.nvars());
        m.add(w, p);
        return m;
    }

    int nvars() const noexcept { return n_; }
    bool is_zero() const noexcept { return parts_.empty(); }
    const std::map<Word, Poly>& parts() const noexcept { return parts_; }

    Poly at(const Word& w) const
    {
        auto it = parts_.find(w);
        return it == parts_.end() ? Poly(n_) : it->second;
    }

    void add(const Word& w, const Poly& p)
    {
        if (p.is_zero())
            return;
        auto [it, fresh] = parts_.emplace(w, p);
        if (!fresh) {
            it->second += p;
            if (it->second.is_zero())
                parts_.erase(it);
        }
    }

    LabeledPoly& operator+=(const LabeledPoly& o)
    {
        for (const auto& [w, p] : o.parts_)
            add(w, p);
        return *this;
    }
    LabeledPoly& operator-=(const LabeledPoly& o)
    {
        for (const auto& [w, p] : o.parts_)
            add(w, -p);
        return *this;
    }
    friend LabeledPoly operator+(LabeledPoly a, const LabeledPoly& b) { return a += b; }
    friend LabeledPoly operator-(LabeledPoly a, const LabeledPoly& b) { return a -= b; }
    LabeledPoly scaled(const Rational& c) const
    {
        LabeledPoly m(n_);
        for (const auto& [w, p] : parts_)
            m.add(w, p.scaled(c));
        return m;
    }

    friend bool operator==(const LabeledPoly&, const LabeledPoly&) = default;

    std::string str() const
    {
        if (parts_.empty())
            return "0";
        std::string s;
        for (const auto& [w, p] : parts_)
            s += (s.empty() ? "" : " + ") + ("(" + p.str() + ")*1_(" + word_str(w) + ")");
        return s;
    }

private:
    int n_ = 0;
    std::map<Word, Poly> parts_;
};

struct KlrGen {
    enum class Kind { idempotent, x, psi };
    Kind kind;
    int index = 0; // 0-based strand for x, 0-based crossing position for psi
    Word word;     // idempotent label

    static KlrGen e(Word w) { return {Kind::idempotent, 0, std::move(w)}; }
    static KlrGen x(int k) { return {Kind::x, k, {}}; }
    static KlrGen psi(int r) { return {Kind::psi, r, {}}; }

    friend auto operator<=>(const KlrGen&, const KlrGen&) = default;

    std::string str() const
    {
        switch (kind) {
        case Kind::idempotent: return "e(" + word_str(word) + ")";
        case Kind::x: return "x" + std::to_string(index + 1);
        case Kind::psi: return "psi" + std::to_string(index + 1);
        }
        return {};
    }
};

inline void check_gen(const KlrAlgebra& alg, const KlrGen& g)
{
    int n = alg.strands();
    switch (g.kind) {
    case KlrGen::Kind::idempotent:
        if (!alg.has_word(g.word))
            throw std::invalid_argument("e(" + word_str(g.word) + ") is not a word of the algebra");
        break;
    case KlrGen::Kind::x:
        if (g.index < 0 || g.index >= n)
            throw std::out_of_range("x index out of range");
        break;
    case KlrGen::Kind::psi:
        if (g.index < 0 || g.index + 1 >= n)
            throw std::out_of_range("psi index out of range");
        break;
    }
}

inline LabeledPoly act(const KlrAlgebra& alg, const KlrGen& g, const LabeledPoly& m)
{
    check_gen(alg, g);
    if (m.nvars() != alg.strands() && !m.is_zero())
        throw std::invalid_argument("labeled polynomial has the wrong number of strands");
    LabeledPoly out(alg.strands());
    for (const auto& [w, p] : m.parts()) {
        switch (g.kind) {
        case KlrGen::Kind::idempotent:
            if (w == g.word)
                out.add(w, p);
            break;
        case KlrGen::Kind::x:
            out.add(w, p.times_variable(g.index));
            break;
        case KlrGen::Kind::psi: {
            int r = g.index;
            auto a = static_cast<std::size_t>(r), b = a + 1;
            if (w[a] == w[b]) {
                out.add(w, p.divided_difference(r, r + 1));
            } else {
                Word sw = w;
                std::swap(sw[a], sw[b]);
                out.add(sw, p.swapped(r, r + 1) * alg.crossing_factor(w[a], w[b], r, r + 1));
            }
            break;
        }
        }
    }
    return out;
}

/// Formal linear combination of products of generators. A product is written
/// left to right and acts right to left.
class KlrOperator {
public:
    using Monomial = std::vector<KlrGen>;

    KlrOperator() = default;
    static KlrOperator gen(KlrGen g)
    {
        KlrOperator o;
        o.terms_[{std::move(g)}] = 1;
        return o;
    }
    static KlrOperator product(Monomial gens, const Rational& c = 1)
    {
        KlrOperator o;
        if (c != 0)
            o.terms_[std::move(gens)] = c;
        return o;
    }
    static KlrOperator identity() { return product({}); }

    const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }
    bool formally_zero() const noexcept { return terms_.empty(); }

    KlrOperator& operator+=(const KlrOperator& o)
    {
        for (const auto& [m, c] : o.terms_)
            add(m, c);
        return *this;
    }
    KlrOperator& operator-=(const KlrOperator& o)
    {
        for (const auto& [m, c] : o.terms_)
            add(m, -c);
        return *this;
    }
    friend KlrOperator operator+(KlrOperator a, const KlrOperator& b) { return a += b; }
    friend KlrOperator operator-(KlrOperator a, const KlrOperator& b) { return a -= b; }
    KlrOperator scaled(const Rational& k) const
    {
        KlrOperator o;
        for (const auto& [m, c] : terms_)
            o.add(m, c * k);
        return o;
    }
    friend KlrOperator operator*(const KlrOperator& a, const KlrOperator& b)
    {
        KlrOperator o;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m(ma);
                m.insert(m.end(), mb.begin(), mb.end());
                o.add(m, ca * cb);
            }
        return o;
    }

    friend bool operator==(const KlrOperator&, const KlrOperator&) = default;

    std::string str() const
    {
        if (terms_.empty())
            return "0";
        std::string s;
        for (const auto& [m, c] : terms_) {
            std::string mono;
            for (const auto& g : m)
                mono += (mono.empty() ? "" : "*") + g.str();
            if (mono.empty())
                mono = "1";
            if (!s.empty())
                s += c < 0 ? " - " : " + ";
            else if (c < 0)
                s += "-";
            Rational mag = abs(c);
            s += mag == 1 ? mono : mag.get_str() + "*" + mono;
        }
        return s;
    }

private:
    void add(const Monomial& m, const Rational& c)
    {
        if (c == 0)
            return;
        auto& slot = terms_[m];
        slot += c;
        if (slot == 0)
            terms_.erase(m);
    }
    std::map<Monomial, Rational> terms_;
};

inline LabeledPoly act(const KlrAlgebra& alg, const KlrOperator& op, const LabeledPoly& m)
{
    LabeledPoly out(alg.strands());
    for (const auto& [mono, c] : op.terms()) {
        LabeledPoly cur = m;
        for (auto it = mono.rbegin(); it != mono.rend() && !cur.is_zero(); ++it)
            cur = act(alg, *it, cur);
        out += cur.scaled(c);
    }
    return out;
}

/// Degree of a nonzero homogeneous labeled polynomial (2 * polynomial degree
/// + label degree), or nothing if it is not homogeneous.
inline std::optional<int> homogeneous_degree(const KlrAlgebra& alg, const LabeledPoly& m)
{
    std::optional<int> deg;
    for (const auto& [w, p] : m.parts()) {
        if (!p.is_homogeneous())
            return std::nullopt;
        int d = 2 * p.degree() + alg.label_degree(w);
        if (deg && *deg != d)
            return std::nullopt;
        deg = d;
    }
    return deg;
}

/// Degree of the generator g acting on the summand of word w.
inline int generator_degree(const KlrAlgebra& alg, const KlrGen& g, const Word& w)
{
    switch (g.kind) {
    case KlrGen::Kind::idempotent: return 0;
    case KlrGen::Kind::x: return 2;
    case KlrGen::Kind::psi:
        return -cartan(alg.quiver(), w[static_cast<std::size_t>(g.index)], w[static_cast<std::size_t>(g.index + 1)]);
    }
    return 0;
}

// Relation suite.

struct RelationVerdict {
    std::string name;
    int trials = 0;
    long checks = 0;
    long failures = 0;
    std::string witness;
};

struct RelationReport {
    std::string quiver;
    std::string dim;
    int trials = 0;
    std::uint64_t seed = 0;
    int max_degree = 6;
    std::vector<RelationVerdict> relations;

    bool passed() const
    {
        for (const auto& r : relations)
            if (r.failures)
                return false;
        return true;
    }
};

inline constexpr const char* relation_names[] = {
    "idempotents", "x_commute", "psi_label_exchange", "psi_x_mixed", "psi_squared", "braid", "distant", "degree_homogeneity"};

namespace detail {

template <typename Rng>
LabeledPoly random_labeled(const KlrAlgebra& alg, Rng& rng, int maxdeg)
{
    LabeledPoly m(alg.strands());
    for (const auto& w : alg.words())
        m.add(w, random_poly(rng, alg.strands(), maxdeg, 4));
    return m;
}

inline Word swap_at(Word w, int r)
{
    std::swap(w[static_cast<std::size_t>(r)], w[static_cast<std::size_t>(r + 1)]);
    return w;
}

struct TrialOutcome {
    std::vector<long> checks;
    std::vector<long> failures;
    std::vector<std::string> witness;
};

inline TrialOutcome run_relation_trial(const KlrAlgebra& alg, std::uint64_t seed, int trial, int maxdeg)
{
    constexpr std::size_t nrel = std::size(relation_names);
    TrialOutcome out{std::vector<long>(nrel, 0), std::vector<long>(nrel, 0), std::vector<std::string>(nrel)};
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), static_cast<std::uint32_t>(trial)};
    std::mt19937_64 rng(seq);
    const int n = alg.strands();
    auto f = random_labeled(alg, rng, maxdeg);
    using Op = KlrOperator;
    auto E = [](const Word& w) { return Op::gen(KlrGen::e(w)); };
    auto X = [](int k) { return Op::gen(KlrGen::x(k)); };
    auto P = [](int r) { return Op::gen(KlrGen::psi(r)); };
    auto record = [&](std::size_t rel, const LabeledPoly& lhs, const LabeledPoly& rhs, const std::string& what) {
        ++out.checks[rel];
        if (!(lhs == rhs)) {
            ++out.failures[rel];
            if (out.witness[rel].empty())
                out.witness[rel] = what + " on f = " + f.str() + ": " + lhs.str() + " != " + rhs.str();
        }
    };
    auto eq = [&](std::size_t rel, const Op& a, const Op& b, const std::string& what) {
        record(rel, act(alg, a, f), act(alg, b, f), what);
    };

    // idempotents
    LabeledPoly sum(n);
    for (const auto& i : alg.words()) {
        sum += act(alg, E(i), f);
        for (const auto& j : alg.words())
            eq(0, E(i) * E(j), i == j ? E(i) : Op(), "e(" + word_str(i) + ")e(" + word_str(j) + ")");
    }
    record(0, sum, f, "sum of idempotents");

    for (int k = 0; k < n; ++k)
        for (int l = k + 1; l < n; ++l)
            eq(1, X(k) * X(l), X(l) * X(k), "x" + std::to_string(k + 1) + " x" + std::to_string(l + 1));

    for (int r = 0; r + 1 < n; ++r)
        for (const auto& i : alg.words()) {
            auto ri = std::to_string(r + 1) + " e(" + word_str(i) + ")";
            auto delta = i[static_cast<std::size_t>(r)] == i[static_cast<std::size_t>(r + 1)] ? E(i) : Op();
            eq(2, P(r) * E(i), E(swap_at(i, r)) * P(r), "psi" + ri);
            eq(3, P(r) * X(r) * E(i) - X(r + 1) * P(r) * E(i), delta, "psi x_r - x_{r+1} psi at " + ri);
            eq(3, X(r) * P(r) * E(i) - P(r) * X(r + 1) * E(i), delta, "x_r psi - psi x_{r+1} at " + ri);
            auto q = alg.q_poly(i[static_cast<std::size_t>(r)], i[static_cast<std::size_t>(r + 1)], r, r + 1);
            LabeledPoly rhs(n);
            rhs.add(i, q * f.at(i));
            record(4, act(alg, P(r) * P(r) * E(i), f), rhs, "psi^2 at " + ri);
        }

    for (int r = 0; r + 2 < n; ++r)
        for (const auto& i : alg.words()) {
            auto lhs = act(alg, P(r + 1) * P(r) * P(r + 1) * E(i) - P(r) * P(r + 1) * P(r) * E(i), f);
            LabeledPoly rhs(n);
            auto a = static_cast<std::size_t>(r);
            if (i[a] == i[a + 2]) {
                auto q = alg.q_poly(i[a], i[a + 1], r, r + 1);
                rhs.add(i, -(q.divided_difference(r, r + 2) * f.at(i)));
            }
            record(5, lhs, rhs, "braid at " + std::to_string(r + 1) + " e(" + word_str(i) + ")");
        }

    for (int r = 0; r + 1 < n; ++r) {
        for (int s = r + 2; s + 1 < n; ++s)
            eq(6, P(r) * P(s), P(s) * P(r), "psi" + std::to_string(r + 1) + " psi" + std::to_string(s + 1));
        for (int k = 0; k < n; ++k)
            if (k != r && k != r + 1)
                eq(6, P(r) * X(k), X(k) * P(r), "psi" + std::to_string(r + 1) + " x" + std::to_string(k + 1));
    }

    // homogeneity on homogeneous inputs, one per word
    for (const auto& i : alg.words()) {
        std::uniform_int_distribution<int> pick(0, maxdeg);
        auto p = random_homogeneous_poly(rng, n, pick(rng), 3);
        if (p.is_zero())
            p = Poly::constant(n, 1);
        auto h = LabeledPoly::single(i, p);
        int base = *homogeneous_degree(alg, h);
        std::vector<KlrGen> gens;
        for (const auto& j : alg.words())
            gens.push_back(KlrGen::e(j));
        for (int k = 0; k < n; ++k)
            gens.push_back(KlrGen::x(k));
        for (int r = 0; r + 1 < n; ++r)
            gens.push_back(KlrGen::psi(r));
        for (const auto& g : gens) {
            ++out.checks[7];
            auto image = act(alg, g, h);
            if (image.is_zero())
                continue;
            auto deg = homogeneous_degree(alg, image);
            if (!deg || *deg != base + generator_degree(alg, g, i)) {
                ++out.failures[7];
                if (out.witness[7].empty())
                    out.witness[7] = g.str() + " on " + h.str() + " gives " + image.str();
            }
        }
    }
    return out;
}

} // namespace detail

inline RelationReport relation_suite(const KlrAlgebra& alg, int trials, std::uint64_t seed, int threads = 1, int maxdeg = 6)
{
    if (trials < 1)
        throw std::invalid_argument("relation suite needs at least one trial");
    auto outcomes = parallel_map(static_cast<std::size_t>(trials), threads,
        [&](std::size_t t) { return detail::run_relation_trial(alg, seed, static_cast<int>(t), maxdeg); });
    RelationReport report{alg.quiver().name(), alg.dim().str(), trials, seed, maxdeg, {}};
    for (std::size_t rel = 0; rel < std::size(relation_names); ++rel) {
        RelationVerdict v{relation_names[rel], trials, 0, 0, {}};
        for (const auto& o : outcomes) {
            v.checks += o.checks[rel];
            v.failures += o.failures[rel];
            if (v.witness.empty())
                v.witness = o.witness[rel];
        }
        report.relations.push_back(std::move(v));
    }
    return report;
}

/// Reduced words of all permutations of length <= 2, as crossing positions.
inline std::vector<std::vector<int>> short_reduced_words(int n)
{
    std::vector<std::vector<int>> out{{}};
    for (int r = 0; r + 1 < n; ++r)
        out.push_back({r});
    for (int r = 0; r + 1 < n; ++r)
        for (int s = 0; s + 1 < n; ++s)
            if (r != s && (std::abs(r - s) == 1 || r < s))
                out.push_back({r, s});
    return out;
}

/// Rank of the family psi_w x^a e(i) (l(w) <= 2, |a| <= 2) acting on a few
/// generic labeled polynomials, and the size of the family.
inline std::pair<int, int> faithfulness_rank(const KlrAlgebra& alg, std::uint64_t seed, int samples = 4)
{
    const int n = alg.strands();
    std::vector<KlrOperator> family;
    for (const auto& i : alg.words())
        for (const auto& rw : short_reduced_words(n))
            for (int deg = 0; deg <= 2; ++deg)
                for (const auto& a : monomials_of_degree(n, deg)) {
                    KlrOperator::Monomial m;
                    for (int r : rw)
                        m.push_back(KlrGen::psi(r));
                    for (int k = 0; k < n; ++k)
                        for (int t = 0; t < a[static_cast<std::size_t>(k)]; ++t)
                            m.push_back(KlrGen::x(k));
                    m.push_back(KlrGen::e(i));
                    family.push_back(KlrOperator::product(m));
                }
    std::mt19937_64 rng(seed);
    std::vector<LabeledPoly> probes;
    for (int s = 0; s < samples; ++s)
        probes.push_back(detail::random_labeled(alg, rng, 6));
    // coordinates: (probe, word, exponent)
    std::map<std::tuple<int, Word, Exponent>, int> coord;
    std::vector<std::vector<std::pair<int, Rational>>> rows;
    for (const auto& op : family) {
        std::vector<std::pair<int, Rational>> row;
        for (int s = 0; s < samples; ++s) {
            auto image = act(alg, op, probes[static_cast<std::size_t>(s)]);
            for (const auto& [w, p] : image.parts())
                for (const auto& [e, c] : p.terms()) {
                    auto key = std::make_tuple(s, w, e);
                    auto it = coord.try_emplace(key, static_cast<int>(coord.size())).first;
                    row.emplace_back(it->second, c);
                }
        }
        rows.push_back(std::move(row));
    }
    // Sparse elimination modulo a large prime: full rank there implies full
    // rank over the rationals.
    using u64 = std::uint64_t;
    constexpr u64 prime = (u64{1} << 61) - 1;
    auto mulmod = [](u64 a, u64 b) { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % prime); };
    auto powmod = [&](u64 a, u64 e) {
        u64 r = 1;
        for (; e; e >>= 1, a = mulmod(a, a))
            if (e & 1)
                r = mulmod(r, a);
        return r;
    };
    auto reduce = [&](const mpz_class& z) {
        mpz_class r = z % mpz_class(std::to_string(prime));
        if (r < 0)
            r += mpz_class(std::to_string(prime));
        return static_cast<u64>(std::stoull(r.get_str()));
    };
    auto to_mod = [&](const Rational& c) {
        return mulmod(reduce(c.get_num()), powmod(reduce(c.get_den()), prime - 2));
    };
    std::map<int, std::map<int, u64>> pivots;
    int rank = 0;
    for (const auto& r : rows) {
        std::map<int, u64> v;
        for (const auto& [col, c] : r)
            if (auto x = to_mod(c))
                v[col] = x;
        while (!v.empty()) {
            auto it = pivots.find(v.begin()->first);
            if (it == pivots.end())
                break;
            u64 factor = v.begin()->second;
            for (const auto& [col, x] : it->second) {
                u64 cur = v.count(col) ? v[col] : 0;
                u64 next = (cur + prime - mulmod(factor, x)) % prime;
                if (next)
                    v[col] = next;
                else
                    v.erase(col);
            }
        }
        if (v.empty())
            continue;
        u64 inv = powmod(v.begin()->second, prime - 2);
        for (auto& [col, x] : v)
            x = mulmod(x, inv);
        pivots.emplace(v.begin()->first, std::move(v));
        ++rank;
    }
    return {rank, static_cast<int>(family.size())};
}

} // namespace mspring
