#pragma once

// Bounded complexes of graded free modules over a locally unital graded
// algebra, accessed through a handle.
//
// A generator (i, s, c) stands for e_i A shifted by s (in u-units, so the
// twist <n> adds 2n) placed in cohomological degree c. A differential entry
// from generator (i, s, c) to (j, s', c+1) is left multiplication by an
// element of e_j A e_i, homogeneous of degree s' - s.

#include <algorithm>
#include <concepts>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace mspring {

template <typename H>
concept AlgebraHandle = requires(const H& h, const typename H::Element& a, int i, std::mt19937_64& rng) {
    typename H::Element;
    { h.idempotent_count() } -> std::convertible_to<int>;
    { h.idempotent_name(i) } -> std::convertible_to<std::string>;
    { h.zero() } -> std::same_as<typename H::Element>;
    { h.idempotent(i) } -> std::same_as<typename H::Element>;
    { h.add(a, a) } -> std::same_as<typename H::Element>;
    { h.scale(a, mpq_class(1)) } -> std::same_as<typename H::Element>;
    { h.mul(a, a) } -> std::same_as<typename H::Element>;
    { h.is_zero(a) } -> std::convertible_to<bool>;
    { h.equal(a, a) } -> std::convertible_to<bool>;
    { h.in_block(a, i, i) } -> std::convertible_to<bool>;
    { h.degree(a) } -> std::same_as<std::optional<int>>;
    { h.inverse_degree0(a, i, i) } -> std::same_as<std::optional<typename H::Element>>;
    { h.random_element(rng, i, i, i) } -> std::same_as<typename H::Element>;
    { h.commuting_pair(i) } -> std::same_as<std::pair<typename H::Element, typename H::Element>>;
    { h.str(a) } -> std::convertible_to<std::string>;
};

struct Generator {
    int idem = 0;
    int shift = 0;
    int degree = 0;

    friend auto operator<=>(const Generator&, const Generator&) = default;
};

/// Entries keyed by (target generator, source generator).
template <typename E>
using EntryMap = std::map<std::pair<int, int>, E>;

template <typename E>
struct GradedComplex {
    std::vector<Generator> gens;
    EntryMap<E> d;

    int size() const noexcept { return static_cast<int>(gens.size()); }
    bool empty() const noexcept { return gens.empty(); }
};

/// Degree-preserving map of complexes; entries keyed by (target, source).
template <typename E>
struct ChainMap {
    GradedComplex<E> source;
    GradedComplex<E> target;
    EntryMap<E> f;
};

struct Violation {
    bool ok = true;
    std::string message;
};

namespace detail {

template <AlgebraHandle H>
void add_entry(const H& h, EntryMap<typename H::Element>& m, std::pair<int, int> key, const typename H::Element& v)
{
    if (h.is_zero(v))
        return;
    auto it = m.find(key);
    if (it == m.end()) {
        m.emplace(key, v);
        return;
    }
    it->second = h.add(it->second, v);
    if (h.is_zero(it->second))
        m.erase(it);
}

template <AlgebraHandle H>
std::string entry_label(const H& h, std::pair<int, int> key, const typename H::Element& v)
{
    return "entry (" + std::to_string(key.first) + "," + std::to_string(key.second) + ") = " + h.str(v);
}

/// Checks that m is a homogeneous map between the generator lists with the
/// given cohomological offset (target degree = source degree + offset).
template <AlgebraHandle H>
Violation check_entries(const H& h, const std::vector<Generator>& tgt, const std::vector<Generator>& src,
    const EntryMap<typename H::Element>& m, int offset)
{
    for (const auto& [key, v] : m) {
        auto [t, s] = key;
        if (t < 0 || s < 0 || t >= static_cast<int>(tgt.size()) || s >= static_cast<int>(src.size()))
            return {false, "entry (" + std::to_string(t) + "," + std::to_string(s) + ") outside the generator list"};
        const auto& gt = tgt[static_cast<std::size_t>(t)];
        const auto& gs = src[static_cast<std::size_t>(s)];
        if (h.is_zero(v))
            continue;
        if (gt.degree != gs.degree + offset)
            return {false, entry_label(h, key, v) + " joins cohomological degrees " + std::to_string(gs.degree) + " and "
                    + std::to_string(gt.degree)};
        if (!h.in_block(v, gs.idem, gt.idem))
            return {false, entry_label(h, key, v) + " does not lie in e_" + h.idempotent_name(gt.idem) + " A e_"
                    + h.idempotent_name(gs.idem)};
        auto deg = h.degree(v);
        if (!deg)
            return {false, entry_label(h, key, v) + " is not homogeneous"};
        if (*deg != gt.shift - gs.shift)
            return {false, entry_label(h, key, v) + " has degree " + std::to_string(*deg) + " but the shifts differ by "
                    + std::to_string(gt.shift - gs.shift)};
    }
    return {};
}

/// a * b for sparse matrices keyed by (row, col).
template <AlgebraHandle H>
EntryMap<typename H::Element> compose(const H& h, const EntryMap<typename H::Element>& a, const EntryMap<typename H::Element>& b)
{
    std::map<int, std::vector<std::pair<int, const typename H::Element*>>> rows_of_a_by_col;
    for (const auto& [key, v] : a)
        rows_of_a_by_col[key.second].emplace_back(key.first, &v);
    EntryMap<typename H::Element> out;
    for (const auto& [key, v] : b) {
        auto it = rows_of_a_by_col.find(key.first);
        if (it == rows_of_a_by_col.end())
            continue;
        for (const auto& [row, av] : it->second)
            add_entry(h, out, {row, key.second}, h.mul(*av, v));
    }
    return out;
}

template <AlgebraHandle H>
bool same_entries(const H& h, const EntryMap<typename H::Element>& a, const EntryMap<typename H::Element>& b)
{
    std::set<std::pair<int, int>> keys;
    for (const auto& [k, v] : a)
        keys.insert(k);
    for (const auto& [k, v] : b)
        keys.insert(k);
    for (const auto& k : keys) {
        auto ia = a.find(k), ib = b.find(k);
        bool za = ia == a.end(), zb = ib == b.end();
        if (za && zb)
            continue;
        if (za ? !h.is_zero(ib->second) : zb ? !h.is_zero(ia->second) : !h.equal(ia->second, ib->second))
            return false;
    }
    return true;
}

} // namespace detail

/// Checks homogeneity, block membership, degree bookkeeping and d o d = 0.
template <AlgebraHandle H>
Violation validate(const H& h, const GradedComplex<typename H::Element>& c)
{
    for (std::size_t k = 0; k < c.gens.size(); ++k)
        if (c.gens[k].idem < 0 || c.gens[k].idem >= h.idempotent_count())
            return {false, "generator " + std::to_string(k) + " has an unknown idempotent"};
    if (auto v = detail::check_entries(h, c.gens, c.gens, c.d, 1); !v.ok)
        return v;
    auto dd = detail::compose(h, c.d, c.d);
    if (!dd.empty()) {
        const auto& [key, v] = *dd.begin();
        return {false, "d o d is nonzero: " + detail::entry_label(h, key, v)};
    }
    return {};
}

template <AlgebraHandle H>
Violation validate(const H& h, const ChainMap<typename H::Element>& f)
{
    if (auto v = validate(h, f.source); !v.ok)
        return {false, "source: " + v.message};
    if (auto v = validate(h, f.target); !v.ok)
        return {false, "target: " + v.message};
    if (auto v = detail::check_entries(h, f.target.gens, f.source.gens, f.f, 0); !v.ok)
        return v;
    if (!detail::same_entries(h, detail::compose(h, f.target.d, f.f), detail::compose(h, f.f, f.source.d)))
        return {false, "map does not commute with the differentials"};
    return {};
}

template <AlgebraHandle H>
void require_valid(const H& h, const GradedComplex<typename H::Element>& c)
{
    if (auto v = validate(h, c); !v.ok)
        throw std::invalid_argument("invalid complex: " + v.message);
}

/// Cohomological shift [n]: degrees drop by n, differential picks up (-1)^n.
template <AlgebraHandle H>
GradedComplex<typename H::Element> shift(const H& h, const GradedComplex<typename H::Element>& c, int n)
{
    require_valid(h, c);
    auto out = c;
    for (auto& g : out.gens)
        g.degree -= n;
    if (n % 2 != 0)
        for (auto& [key, v] : out.d)
            v = h.scale(v, -1);
    return out;
}

/// Internal twist <n>.
template <AlgebraHandle H>
GradedComplex<typename H::Element> twist(const H& h, const GradedComplex<typename H::Element>& c, int n)
{
    require_valid(h, c);
    auto out = c;
    for (auto& g : out.gens)
        g.shift += 2 * n;
    return out;
}

template <typename E>
GradedComplex<E> direct_sum(const GradedComplex<E>& a, const GradedComplex<E>& b)
{
    auto out = a;
    int off = a.size();
    out.gens.insert(out.gens.end(), b.gens.begin(), b.gens.end());
    for (const auto& [key, v] : b.d)
        out.d.emplace(std::make_pair(key.first + off, key.second + off), v);
    return out;
}

template <AlgebraHandle H>
ChainMap<typename H::Element> identity_map(const H& h, const GradedComplex<typename H::Element>& c)
{
    ChainMap<typename H::Element> f{c, c, {}};
    for (int k = 0; k < c.size(); ++k)
        f.f.emplace(std::make_pair(k, k), h.idempotent(c.gens[static_cast<std::size_t>(k)].idem));
    return f;
}

/// Cone of f: generators of the source shifted by [1] first, then the target;
/// differential [[-d_S, 0], [f, d_T]].
template <AlgebraHandle H>
GradedComplex<typename H::Element> cone(const H& h, const ChainMap<typename H::Element>& f)
{
    if (auto v = validate(h, f); !v.ok)
        throw std::invalid_argument("not a chain map: " + v.message);
    GradedComplex<typename H::Element> out;
    int off = f.source.size();
    for (auto g : f.source.gens) {
        g.degree -= 1;
        out.gens.push_back(g);
    }
    out.gens.insert(out.gens.end(), f.target.gens.begin(), f.target.gens.end());
    for (const auto& [key, v] : f.source.d)
        out.d.emplace(key, h.scale(v, -1));
    for (const auto& [key, v] : f.f)
        out.d.emplace(std::make_pair(key.first + off, key.second), v);
    for (const auto& [key, v] : f.target.d)
        out.d.emplace(std::make_pair(key.first + off, key.second + off), v);
    return out;
}

/// Formal sum over (idempotent, shift) of (-1)^degree.
using EulerSymbol = std::map<std::pair<int, int>, long>;

template <typename E>
EulerSymbol euler_symbol(const GradedComplex<E>& c)
{
    EulerSymbol out;
    for (const auto& g : c.gens) {
        auto& slot = out[{g.idem, g.shift}];
        slot += g.degree % 2 == 0 ? 1 : -1;
        if (slot == 0)
            out.erase({g.idem, g.shift});
    }
    return out;
}

inline EulerSymbol euler_difference(EulerSymbol a, const EulerSymbol& b)
{
    for (const auto& [k, v] : b) {
        auto& slot = a[k];
        slot -= v;
        if (slot == 0)
            a.erase(k);
    }
    return a;
}

/// Subcomplex on the generators selected by keep, in their original order;
/// index_map receives old index -> new index.
template <typename E>
GradedComplex<E> restrict_to(const GradedComplex<E>& c, const std::vector<bool>& keep, std::vector<int>* index_map = nullptr)
{
    std::vector<int> idx(c.gens.size(), -1);
    GradedComplex<E> out;
    for (std::size_t k = 0; k < c.gens.size(); ++k)
        if (keep[k]) {
            idx[k] = out.size();
            out.gens.push_back(c.gens[k]);
        }
    for (const auto& [key, v] : c.d) {
        int t = idx[static_cast<std::size_t>(key.first)], s = idx[static_cast<std::size_t>(key.second)];
        if (t >= 0 && s >= 0)
            out.d.emplace(std::make_pair(t, s), v);
    }
    if (index_map)
        *index_map = std::move(idx);
    return out;
}

struct MinimizeStats {
    int cancellations = 0;
};

/// Gaussian elimination of invertible degree-zero entries. Candidates are
/// scanned by lowest cohomological degree, then source index, then target index.
template <AlgebraHandle H>
GradedComplex<typename H::Element> minimize(const H& h, const GradedComplex<typename H::Element>& input, MinimizeStats* stats = nullptr)
{
    using E = typename H::Element;
    require_valid(h, input);
    auto c = input;
    for (;;) {
        std::optional<std::tuple<int, int, int, E>> pick; // degree, source, target, inverse
        for (const auto& [key, v] : c.d) {
            auto [t, s] = key;
            const auto& gs = c.gens[static_cast<std::size_t>(s)];
            const auto& gt = c.gens[static_cast<std::size_t>(t)];
            if (gs.shift != gt.shift)
                continue;
            if (pick && std::make_tuple(gs.degree, s, t) >= std::make_tuple(std::get<0>(*pick), std::get<1>(*pick), std::get<2>(*pick)))
                continue;
            if (auto inv = h.inverse_degree0(v, gs.idem, gt.idem))
                pick.emplace(gs.degree, s, t, std::move(*inv));
        }
        if (!pick)
            return c;
        auto& [deg, b1, b2, ainv] = *pick;
        // beta: entries into b2 from other sources; gamma: entries out of b1 to other targets
        std::vector<std::pair<int, E>> beta, gamma;
        for (const auto& [key, v] : c.d) {
            if (key.first == b2 && key.second != b1)
                beta.emplace_back(key.second, v);
            if (key.second == b1 && key.first != b2)
                gamma.emplace_back(key.first, v);
        }
        for (const auto& [t, g] : gamma) {
            auto ga = h.mul(g, ainv);
            for (const auto& [s, b] : beta)
                detail::add_entry(h, c.d, {t, s}, h.scale(h.mul(ga, b), -1));
        }
        std::vector<bool> keep(c.gens.size(), true);
        keep[static_cast<std::size_t>(b1)] = keep[static_cast<std::size_t>(b2)] = false;
        c = restrict_to(c, keep);
        if (stats)
            ++stats->cancellations;
    }
}

template <typename E>
struct WeightTruncation {
    GradedComplex<E> upper;
    GradedComplex<E> lower;
    ChainMap<E> inclusion;
};

/// Stupid truncation at n: upper holds degrees >= n+1 (a subcomplex), lower
/// holds degrees <= n.
template <AlgebraHandle H>
WeightTruncation<typename H::Element> weight_truncate(const H& h, const GradedComplex<typename H::Element>& c, int n)
{
    require_valid(h, c);
    std::vector<bool> up(c.gens.size()), low(c.gens.size());
    for (std::size_t k = 0; k < c.gens.size(); ++k) {
        up[k] = c.gens[k].degree >= n + 1;
        low[k] = !up[k];
    }
    std::vector<int> idx;
    WeightTruncation<typename H::Element> out;
    out.upper = restrict_to(c, up, &idx);
    out.lower = restrict_to(c, low);
    out.inclusion.source = out.upper;
    out.inclusion.target = c;
    for (std::size_t k = 0; k < c.gens.size(); ++k)
        if (idx[k] >= 0)
            out.inclusion.f.emplace(std::make_pair(static_cast<int>(k), idx[k]), h.idempotent(c.gens[k].idem));
    return out;
}

namespace detail {

template <AlgebraHandle H>
bool match_rec(const H& h, const GradedComplex<typename H::Element>& a, const GradedComplex<typename H::Element>& b,
    std::vector<int>& to_b, std::vector<bool>& used, std::size_t k)
{
    if (k == a.gens.size())
        return true;
    for (std::size_t cand = 0; cand < b.gens.size(); ++cand) {
        if (used[cand] || !(b.gens[cand] == a.gens[k]))
            continue;
        to_b[k] = static_cast<int>(cand);
        bool ok = true;
        // compare entries among the generators assigned so far
        for (std::size_t l = 0; l <= k && ok; ++l) {
            for (auto [x, y] : {std::pair{k, l}, std::pair{l, k}}) {
                auto ia = a.d.find({static_cast<int>(x), static_cast<int>(y)});
                auto ib = b.d.find({to_b[x], to_b[y]});
                bool za = ia == a.d.end() || h.is_zero(ia->second);
                bool zb = ib == b.d.end() || h.is_zero(ib->second);
                if (za != zb || (!za && !h.equal(ia->second, ib->second))) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok)
            continue;
        used[cand] = true;
        if (match_rec(h, a, b, to_b, used, k + 1))
            return true;
        used[cand] = false;
    }
    return false;
}

} // namespace detail

/// Equality of complexes up to a permutation of generators.
template <AlgebraHandle H>
bool equal_up_to_reordering(const H& h, const GradedComplex<typename H::Element>& a, const GradedComplex<typename H::Element>& b)
{
    if (a.size() != b.size())
        return false;
    auto ga = a.gens, gb = b.gens;
    std::sort(ga.begin(), ga.end());
    std::sort(gb.begin(), gb.end());
    if (ga != gb)
        return false;
    std::vector<int> to_b(a.gens.size(), -1);
    std::vector<bool> used(b.gens.size(), false);
    return detail::match_rec(h, a, b, to_b, used, 0);
}

// Random corpus.

struct CorpusParams {
    int max_pieces = 4;
    int conjugations = 12;
};

namespace detail {

template <AlgebraHandle H>
void append_piece(const H& h, std::mt19937_64& rng, GradedComplex<typename H::Element>& c)
{
    using E = typename H::Element;
    std::uniform_int_distribution<int> pick_idem(0, h.idempotent_count() - 1);
    std::uniform_int_distribution<int> pick_deg(-1, 1);
    std::uniform_int_distribution<int> pick_shift(-1, 1);
    std::uniform_int_distribution<int> pick_kind(0, 3);
    int i = pick_idem(rng), deg = pick_deg(rng), s = 2 * pick_shift(rng);
    GradedComplex<E> piece;
    switch (pick_kind(rng)) {
    case 0: { // Koszul complex on a commuting pair
        auto [a, b] = h.commuting_pair(i);
        int da = *h.degree(a), db = *h.degree(b);
        piece.gens = {{i, s, deg}, {i, s + da, deg + 1}, {i, s + db, deg + 1}, {i, s + da + db, deg + 2}};
        piece.d.emplace(std::make_pair(1, 0), a);
        piece.d.emplace(std::make_pair(2, 0), b);
        piece.d.emplace(std::make_pair(3, 1), b);
        piece.d.emplace(std::make_pair(3, 2), h.scale(a, -1));
        break;
    }
    case 1: { // two-term complex on a random positive-degree element
        int j = pick_idem(rng);
        std::uniform_int_distribution<int> pick_gap(1, 4);
        int gap = pick_gap(rng);
        E v = h.random_element(rng, i, j, gap);
        piece.gens = {{i, s, deg}, {j, s + gap, deg + 1}};
        if (!h.is_zero(v))
            piece.d.emplace(std::make_pair(1, 0), v);
        break;
    }
    case 2: // contractible pair
        piece.gens = {{i, s, deg}, {i, s, deg + 1}};
        piece.d.emplace(std::make_pair(1, 0), h.idempotent(i));
        break;
    default:
        piece.gens = {{i, s, deg}};
        break;
    }
    c = direct_sum(c, piece);
}

/// Change of basis by I + t E_{pq} in the cohomological degree of p and q.
template <AlgebraHandle H>
void conjugate_elementary(const H& h, GradedComplex<typename H::Element>& c, int p, int q, const typename H::Element& t)
{
    using E = typename H::Element;
    // outgoing: d <- d T^{-1}, i.e. column q -= column p * t
    std::vector<std::pair<int, E>> out_of_p, into_q;
    for (const auto& [key, v] : c.d) {
        if (key.second == p)
            out_of_p.emplace_back(key.first, v);
        if (key.first == q)
            into_q.emplace_back(key.second, v);
    }
    for (const auto& [r, v] : out_of_p)
        add_entry(h, c.d, {r, q}, h.scale(h.mul(v, t), -1));
    // incoming: d <- T d, i.e. row p += t * row q
    for (const auto& [s, v] : into_q)
        add_entry(h, c.d, {p, s}, h.mul(t, v));
}

} // namespace detail

/// A valid complex assembled from Koszul pieces, two-term pieces, contractible
/// pairs and single generators, then scrambled by elementary automorphisms
/// whose entries have positive degree or are scalar multiples of idempotents.
template <AlgebraHandle H>
GradedComplex<typename H::Element> random_complex(const H& h, std::mt19937_64& rng, const CorpusParams& params = {})
{
    GradedComplex<typename H::Element> c;
    std::uniform_int_distribution<int> pieces(1, params.max_pieces);
    for (int k = pieces(rng); k > 0; --k)
        detail::append_piece(h, rng, c);
    std::uniform_int_distribution<int> pick_gen(0, c.size() - 1);
    std::uniform_int_distribution<int> pick_scalar(-3, 3);
    for (int k = 0; k < params.conjugations && c.size() > 1; ++k) {
        int p = pick_gen(rng), q = pick_gen(rng);
        const auto& gp = c.gens[static_cast<std::size_t>(p)];
        const auto& gq = c.gens[static_cast<std::size_t>(q)];
        if (p == q || gp.degree != gq.degree)
            continue;
        int gap = gp.shift - gq.shift;
        typename H::Element t = h.zero();
        if (gap > 0)
            t = h.random_element(rng, gq.idem, gp.idem, gap);
        else if (gap == 0 && gp.idem == gq.idem)
            t = h.scale(h.idempotent(gp.idem), pick_scalar(rng));
        if (!h.is_zero(t))
            detail::conjugate_elementary(h, c, p, q, t);
    }
    return c;
}

} // namespace mspring
