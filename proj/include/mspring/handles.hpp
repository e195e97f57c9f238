#pragma once

// Algebra handles for the homotopy module.
//
// KlrHandle keeps elements of R_d in the basis psi_w x^a e(i), where psi_w
// uses a fixed reduced word for each permutation w. Coordinates are found by
// solving against the action on x^m e(i), |m| <= D, with D raised until the
// candidate basis elements act independently; the largest D used is recorded.
//
// SmashHandle wraps S # Q[W] with its single idempotent.

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mspring/homotopy.hpp"
#include "mspring/klr.hpp"
#include "mspring/linalg.hpp"
#include "mspring/smash.hpp"

namespace mspring {

struct PbwKey {
    int source = 0; // index into the word list
    int perm = 0;   // index into the permutation list
    Exponent a;

    friend auto operator<=>(const PbwKey&, const PbwKey&) = default;
};

struct KlrElement {
    std::map<PbwKey, Rational> c;

    friend bool operator==(const KlrElement&, const KlrElement&) = default;
};

class KlrHandle {
public:
    using Element = KlrElement;

    explicit KlrHandle(KlrAlgebra alg, int max_family_degree = 16)
        : alg_(std::move(alg)), max_family_degree_(max_family_degree)
    {
        const int n = alg_.strands();
        // breadth-first: each permutation gets the first (hence reduced) word found
        std::vector<int> start(static_cast<std::size_t>(n));
        for (int k = 0; k < n; ++k)
            start[static_cast<std::size_t>(k)] = k;
        arrangements_.push_back(start);
        reduced_.push_back({});
        for (std::size_t head = 0; head < arrangements_.size(); ++head)
            for (int r = 0; r + 1 < n; ++r) {
                auto arr = arrangements_[head];
                auto ur = static_cast<std::size_t>(r);
                if (arr[ur] > arr[ur + 1])
                    continue;
                std::swap(arr[ur], arr[ur + 1]);
                if (std::find(arrangements_.begin(), arrangements_.end(), arr) != arrangements_.end())
                    continue;
                auto word = reduced_[head];
                word.insert(word.begin(), r);
                arrangements_.push_back(arr);
                reduced_.push_back(word);
            }
    }

    const KlrAlgebra& algebra() const noexcept { return alg_; }

    int idempotent_count() const { return static_cast<int>(alg_.words().size()); }
    std::string idempotent_name(int i) const { return word_str(word(i)); }
    const Word& word(int i) const { return alg_.words().at(static_cast<std::size_t>(i)); }
    std::optional<int> word_index(const Word& w) const
    {
        const auto& ws = alg_.words();
        auto it = std::lower_bound(ws.begin(), ws.end(), w);
        if (it == ws.end() || *it != w)
            return std::nullopt;
        return static_cast<int>(it - ws.begin());
    }

    Element zero() const { return {}; }
    Element idempotent(int i) const
    {
        Element e;
        e.c[{i, 0, Exponent(static_cast<std::size_t>(alg_.strands()), 0)}] = 1;
        return e;
    }
    Element x(int k) const
    {
        if (k < 0 || k >= alg_.strands())
            throw std::out_of_range("x index out of range");
        Element e;
        for (int i = 0; i < idempotent_count(); ++i) {
            Exponent a(static_cast<std::size_t>(alg_.strands()), 0);
            a[static_cast<std::size_t>(k)] = 1;
            e.c[{i, 0, a}] = 1;
        }
        return e;
    }
    Element psi(int r) const
    {
        if (r < 0 || r + 1 >= alg_.strands())
            throw std::out_of_range("psi index out of range");
        int p = static_cast<int>(std::find(reduced_.begin(), reduced_.end(), std::vector<int>{r}) - reduced_.begin());
        Element e;
        for (int i = 0; i < idempotent_count(); ++i)
            e.c[{i, p, Exponent(static_cast<std::size_t>(alg_.strands()), 0)}] = 1;
        return e;
    }
    Element scalar(const Rational& c) const
    {
        Element e;
        for (int i = 0; i < idempotent_count(); ++i)
            e = add(e, scale(idempotent(i), c));
        return e;
    }

    Element add(const Element& a, const Element& b) const
    {
        Element out = a;
        for (const auto& [k, v] : b.c) {
            auto& slot = out.c[k];
            slot += v;
            if (slot == 0)
                out.c.erase(k);
        }
        return out;
    }
    Element scale(const Element& a, const Rational& s) const
    {
        Element out;
        if (s == 0)
            return out;
        for (const auto& [k, v] : a.c)
            out.c.emplace(k, v * s);
        return out;
    }
    Element mul(const Element& a, const Element& b) const
    {
        Element out;
        for (const auto& [ka, va] : a.c)
            for (const auto& [kb, vb] : b.c) {
                if (target(kb) != ka.source)
                    continue;
                out = add(out, scale(product(ka, kb), va * vb));
            }
        return out;
    }
    bool is_zero(const Element& a) const { return a.c.empty(); }
    bool equal(const Element& a, const Element& b) const { return a == b; }

    bool in_block(const Element& a, int src, int tgt) const
    {
        return std::all_of(a.c.begin(), a.c.end(), [&](const auto& kv) {
            return kv.first.source == src && target(kv.first) == tgt;
        });
    }

    std::optional<int> degree(const Element& a) const
    {
        std::optional<int> deg;
        for (const auto& [k, v] : a.c) {
            int d = key_degree(k);
            if (deg && *deg != d)
                return std::nullopt;
            deg = d;
        }
        return deg.value_or(0);
    }

    /// Two-sided inverse in e_src A e_tgt of a degree-zero a in e_tgt A e_src.
    std::optional<Element> inverse_degree0(const Element& a, int src, int tgt) const
    {
        if (is_zero(a) || !in_block(a, src, tgt) || degree(a) != 0)
            return std::nullopt;
        std::vector<PbwKey> cand;
        for (const auto& k : block_keys(tgt, 0))
            if (target(k) == src)
                cand.push_back(k);
        if (cand.empty())
            return std::nullopt;
        // rows: coordinates of a*z (source tgt) and z*a (source src)
        std::map<std::pair<int, PbwKey>, int> rows;
        std::vector<std::vector<std::pair<int, Rational>>> cols(cand.size());
        auto row_of = [&](int kind, const PbwKey& k) { return rows.try_emplace({kind, k}, static_cast<int>(rows.size())).first->second; };
        auto e_tgt = idempotent(tgt), e_src = idempotent(src);
        for (const auto& [k, v] : e_tgt.c)
            row_of(0, k);
        for (const auto& [k, v] : e_src.c)
            row_of(1, k);
        for (std::size_t j = 0; j < cand.size(); ++j) {
            Element z;
            z.c[cand[j]] = 1;
            for (const auto& [k, v] : mul(a, z).c)
                cols[j].emplace_back(row_of(0, k), v);
            for (const auto& [k, v] : mul(z, a).c)
                cols[j].emplace_back(row_of(1, k), v);
        }
        linalg::Matrix m(static_cast<int>(rows.size()), static_cast<int>(cand.size()));
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (const auto& [r, v] : cols[j])
                m(r, static_cast<int>(j)) = v;
        std::vector<Rational> rhs(rows.size());
        for (const auto& [k, v] : e_tgt.c)
            rhs[static_cast<std::size_t>(row_of(0, k))] = v;
        for (const auto& [k, v] : e_src.c)
            rhs[static_cast<std::size_t>(row_of(1, k))] = v;
        auto sol = linalg::solve(m, rhs);
        if (!sol)
            return std::nullopt;
        Element z;
        for (std::size_t j = 0; j < cand.size(); ++j)
            if ((*sol)[j] != 0)
                z.c.emplace(cand[j], (*sol)[j]);
        return z;
    }

    Element random_element(std::mt19937_64& rng, int src, int tgt, int deg) const
    {
        std::vector<PbwKey> cand;
        for (const auto& k : block_keys(src, deg))
            if (target(k) == tgt)
                cand.push_back(k);
        Element out;
        if (cand.empty())
            return out;
        std::uniform_int_distribution<std::size_t> pick(0, cand.size() - 1);
        std::uniform_int_distribution<int> coef(1, 2), sign(0, 1);
        std::uniform_int_distribution<int> terms(1, 2);
        for (int t = terms(rng); t > 0; --t) {
            Element e;
            e.c[cand[pick(rng)]] = Rational(sign(rng) ? coef(rng) : -coef(rng));
            out = add(out, e);
        }
        return out;
    }

    std::pair<Element, Element> commuting_pair(int i) const
    {
        auto e = idempotent(i);
        if (alg_.strands() == 1)
            return {mul(x(0), e), mul(x(0), mul(x(0), e))};
        return {mul(x(0), e), mul(x(1), e)};
    }

    /// Basis element as a product of generators, written left to right.
    KlrOperator::Monomial monomial(const PbwKey& k) const
    {
        KlrOperator::Monomial m;
        for (int r : reduced_.at(static_cast<std::size_t>(k.perm)))
            m.push_back(KlrGen::psi(r));
        for (std::size_t v = 0; v < k.a.size(); ++v)
            for (int t = 0; t < k.a[v]; ++t)
                m.push_back(KlrGen::x(static_cast<int>(v)));
        m.push_back(KlrGen::e(word(k.source)));
        return m;
    }

    KlrOperator to_operator(const Element& a) const
    {
        KlrOperator op;
        for (const auto& [k, v] : a.c)
            op += KlrOperator::product(monomial(k), v);
        return op;
    }

    std::string str(const Element& a) const
    {
        if (a.c.empty())
            return "0";
        std::string s;
        for (const auto& [k, v] : a.c) {
            std::string mono;
            const auto& red = reduced_.at(static_cast<std::size_t>(k.perm));
            for (int r : red)
                mono += "psi" + std::to_string(r + 1) + "*";
            for (std::size_t j = 0; j < k.a.size(); ++j)
                if (k.a[j] > 0)
                    mono += "x" + std::to_string(j + 1) + (k.a[j] > 1 ? "^" + std::to_string(k.a[j]) : "") + "*";
            mono += "e(" + word_str(word(k.source)) + ")";
            if (!s.empty())
                s += v < 0 ? " - " : " + ";
            else if (v < 0)
                s += "-";
            Rational mag = abs(v);
            s += mag == 1 ? mono : mag.get_str() + "*" + mono;
        }
        return s;
    }

    int target(const PbwKey& k) const
    {
        auto w = word(k.source);
        const auto& red = reduced_.at(static_cast<std::size_t>(k.perm));
        for (auto it = red.rbegin(); it != red.rend(); ++it)
            std::swap(w[static_cast<std::size_t>(*it)], w[static_cast<std::size_t>(*it + 1)]);
        return *word_index(w);
    }

    int key_degree(const PbwKey& k) const
    {
        auto w = word(k.source);
        int deg = 2 * Poly::total(k.a);
        const auto& red = reduced_.at(static_cast<std::size_t>(k.perm));
        for (auto it = red.rbegin(); it != red.rend(); ++it) {
            deg += generator_degree(alg_, KlrGen::psi(*it), w);
            std::swap(w[static_cast<std::size_t>(*it)], w[static_cast<std::size_t>(*it + 1)]);
        }
        return deg;
    }

    /// Largest family degree any coordinate solve needed so far.
    int degree_bound_used() const
    {
        std::lock_guard lock(mutex_);
        return bound_used_;
    }

private:
    struct Block {
        std::vector<PbwKey> keys;
        int family_degree = 0;
        std::map<std::tuple<int, Word, Exponent>, int> rows;
        linalg::Matrix m;
        std::vector<int> pivot_rows;  // rows on which m is invertible
        linalg::Matrix pivot_inverse; // inverse of m restricted to them
    };

    std::vector<PbwKey> block_keys(int src, int deg) const { return block(src, deg).keys; }

    const Block& block(int src, int deg) const
    {
        std::lock_guard lock(mutex_);
        auto it = blocks_.find({src, deg});
        if (it != blocks_.end())
            return it->second;
        Block b;
        const int n = alg_.strands();
        for (std::size_t p = 0; p < reduced_.size(); ++p) {
            PbwKey base{src, static_cast<int>(p), Exponent(static_cast<std::size_t>(n), 0)};
            int rest = deg - key_degree(base);
            if (rest < 0 || rest % 2 != 0)
                continue;
            for (const auto& a : monomials_of_degree(n, rest / 2))
                b.keys.push_back({src, static_cast<int>(p), a});
        }
        std::sort(b.keys.begin(), b.keys.end());
        if (!b.keys.empty()) {
            for (int fd = 0;; ++fd) {
                if (fd > max_family_degree_)
                    throw std::runtime_error("basis elements not separated by the action up to degree "
                        + std::to_string(max_family_degree_));
                b.family_degree = fd;
                b.rows.clear();
                std::vector<std::vector<std::pair<int, Rational>>> cols(b.keys.size());
                for (std::size_t j = 0; j < b.keys.size(); ++j)
                    cols[j] = image(b, KlrOperator::product(monomial(b.keys[j])), src, fd);
                b.m = linalg::Matrix(static_cast<int>(b.rows.size()), static_cast<int>(b.keys.size()));
                for (std::size_t j = 0; j < cols.size(); ++j)
                    for (const auto& [r, v] : cols[j])
                        b.m(r, static_cast<int>(j)) = v;
                if (linalg::rank(b.m) == static_cast<int>(b.keys.size()))
                    break;
            }
            const int k = static_cast<int>(b.keys.size());
            linalg::Matrix t(k, b.m.rows());
            for (int r = 0; r < b.m.rows(); ++r)
                for (int j = 0; j < k; ++j)
                    t(j, r) = b.m(r, j);
            b.pivot_rows = linalg::rref(t);
            linalg::Matrix sq(k, k);
            for (int a = 0; a < k; ++a)
                for (int j = 0; j < k; ++j)
                    sq(a, j) = b.m(b.pivot_rows[static_cast<std::size_t>(a)], j);
            b.pivot_inverse = linalg::inverse(sq);
            bound_used_ = std::max(bound_used_, b.family_degree);
        }
        return blocks_.emplace(std::make_pair(src, deg), std::move(b)).first->second;
    }

    /// Sparse coordinates of op acting on x^m e(src), |m| <= fd; extends rows.
    std::vector<std::pair<int, Rational>> image(Block& b, const KlrOperator& op, int src, int fd) const
    {
        std::vector<std::pair<int, Rational>> out;
        int probe = 0;
        for (int t = 0; t <= fd; ++t)
            for (const auto& e : monomials_of_degree(alg_.strands(), t)) {
                auto img = act(alg_, op, LabeledPoly::single(word(src), Poly::monomial(e)));
                for (const auto& [w, p] : img.parts())
                    for (const auto& [ex, c] : p.terms()) {
                        auto it = b.rows.try_emplace({probe, w, ex}, static_cast<int>(b.rows.size())).first;
                        out.emplace_back(it->second, c);
                    }
                ++probe;
            }
        return out;
    }

    Element normalize(const KlrOperator& op, int src, int deg) const
    {
        const Block& b = block(src, deg);
        std::lock_guard lock(mutex_);
        Element out;
        Block scratch{b.keys, b.family_degree, b.rows, {}, {}, {}};
        auto coords = image(scratch, op, src, b.family_degree);
        if (b.keys.empty()) {
            if (!coords.empty())
                throw std::logic_error("nonzero product in an empty degree slice");
            return out;
        }
        if (scratch.rows.size() != b.rows.size())
            throw std::logic_error("product leaves the span of the basis");
        std::vector<Rational> rhs(b.rows.size());
        for (const auto& [r, v] : coords)
            rhs[static_cast<std::size_t>(r)] += v;
        const int k = static_cast<int>(b.keys.size());
        std::vector<Rational> sol(static_cast<std::size_t>(k));
        for (int j = 0; j < k; ++j)
            for (int a = 0; a < k; ++a)
                sol[static_cast<std::size_t>(j)] += b.pivot_inverse(j, a) * rhs[static_cast<std::size_t>(b.pivot_rows[static_cast<std::size_t>(a)])];
        std::vector<Rational> check(b.rows.size());
        for (int r = 0; r < b.m.rows(); ++r)
            for (int j = 0; j < k; ++j)
                if (b.m(r, j) != 0)
                    check[static_cast<std::size_t>(r)] += b.m(r, j) * sol[static_cast<std::size_t>(j)];
        if (check != rhs)
            throw std::logic_error("product leaves the span of the basis");
        for (int j = 0; j < k; ++j)
            if (sol[static_cast<std::size_t>(j)] != 0)
                out.c.emplace(b.keys[static_cast<std::size_t>(j)], sol[static_cast<std::size_t>(j)]);
        return out;
    }

    Element product(const PbwKey& ka, const PbwKey& kb) const
    {
        {
            std::lock_guard lock(mutex_);
            auto it = products_.find({ka, kb});
            if (it != products_.end())
                return it->second;
        }
        auto ma = monomial(ka), mb = monomial(kb);
        ma.insert(ma.end(), mb.begin(), mb.end());
        auto result = normalize(KlrOperator::product(ma), kb.source, key_degree(ka) + key_degree(kb));
        std::lock_guard lock(mutex_);
        return products_.emplace(std::make_pair(ka, kb), std::move(result)).first->second;
    }

    KlrAlgebra alg_;
    int max_family_degree_;
    std::vector<std::vector<int>> arrangements_;
    std::vector<std::vector<int>> reduced_;
    mutable std::mutex mutex_;
    mutable std::map<std::pair<int, int>, Block> blocks_;
    mutable std::map<std::pair<PbwKey, PbwKey>, Element> products_;
    mutable int bound_used_ = 0;
};

class SmashHandle {
public:
    using Element = SmashElement;

    explicit SmashHandle(int n) : n_(n)
    {
        if (n < 1)
            throw std::invalid_argument("smash handle needs n >= 1");
    }

    int n() const noexcept { return n_; }
    int idempotent_count() const { return 1; }
    std::string idempotent_name(int) const { return "1"; }
    Element zero() const { return SmashElement(n_); }
    Element idempotent(int) const { return SmashElement::one(n_); }
    Element add(const Element& a, const Element& b) const { return a + b; }
    Element scale(const Element& a, const Rational& s) const { return a.scaled(s); }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    bool is_zero(const Element& a) const { return a.is_zero(); }
    bool equal(const Element& a, const Element& b) const { return a == b; }
    bool in_block(const Element&, int src, int tgt) const { return src == 0 && tgt == 0; }

    std::optional<int> degree(const Element& a) const
    {
        if (a.is_zero())
            return 0;
        auto d = a.homogeneous_degree();
        if (!d)
            return std::nullopt;
        return 2 * *d;
    }

    std::optional<Element> inverse_degree0(const Element& a, int, int) const
    {
        if (a.is_zero() || degree(a) != 0)
            return std::nullopt;
        return group_algebra_inverse(a);
    }

    Element random_element(std::mt19937_64& rng, int, int, int deg) const
    {
        Element out(n_);
        if (deg < 0 || deg % 2 != 0)
            return out;
        auto perms = all_perms(n_);
        std::uniform_int_distribution<std::size_t> pick(0, perms.size() - 1);
        std::uniform_int_distribution<int> terms(1, 2);
        for (int t = terms(rng); t > 0; --t)
            out += SmashElement::term(random_homogeneous_poly(rng, n_, deg / 2, 2), perms[pick(rng)]);
        return out;
    }

    std::pair<Element, Element> commuting_pair(int) const
    {
        auto x1 = SmashElement::poly(Poly::variable(n_, 0));
        if (n_ == 1)
            return {x1, x1 * x1};
        return {x1, SmashElement::poly(Poly::variable(n_, 1))};
    }

    std::string str(const Element& a) const
    {
        if (a.is_zero())
            return "0";
        std::string s;
        for (const auto& [w, f] : a.parts())
            for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
                const auto& [e, c] = *it;
                std::string mono;
                for (std::size_t k = 0; k < e.size(); ++k)
                    if (e[k] > 0)
                        mono += "x" + std::to_string(k + 1) + (e[k] > 1 ? "^" + std::to_string(e[k]) : "") + "*";
                mono += perm_str(w);
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
    int n_;
};

static_assert(AlgebraHandle<KlrHandle>);
static_assert(AlgebraHandle<SmashHandle>);

} // namespace mspring
