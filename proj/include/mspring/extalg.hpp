#pragma once

// Graded dimensions of blocks of the extension algebra
//   E_{i,j} = (+)_n CH^G_{d_j - n}(Z_{i,j})
// computed from the orbit stratification of the Steinberg variety Z_{i,j},
// and the KLR basis count they are compared against.
//
// Every stratum of Z_{i,j} over the orbit of M is G x_{Aut M} (Fl(M,i) x Fl(M,j)),
// paved by products of cells; a cell of dimension c contributes
// u^{2(d_j - dim O_M - c)} times the Poincare series of B Aut(M), whose
// reductive part is a product of GL_{m} over the multiplicities of M.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mspring/nilrep.hpp"
#include "mspring/paving.hpp"
#include "mspring/quiver.hpp"
#include "mspring/series.hpp"

namespace mspring {

struct BlockKey {
    Composition source;
    Composition target;

    friend auto operator<=>(const BlockKey&, const BlockKey&) = default;
};

struct GdimReport {
    HalfLaurentSeries geometric;
    HalfLaurentSeries algebraic;  // KLR count, before the normalization shift
    HalfLaurentSeries normalized; // u^{d_j - d_i} * algebraic
    bool normalized_match = false;
    std::optional<int> first_discrepancy;
};

namespace detail {

inline void check_block(const Quiver& q, const DimVector& d, const Composition& i, const Composition& j)
{
    if (d.size() != q.vertices() || i.vertices() != q.vertices() || j.vertices() != q.vertices())
        throw std::invalid_argument("block does not match quiver");
    if (i.target() != d || j.target() != d)
        throw std::invalid_argument("compositions " + i.str() + " and " + j.str() + " are not both compositions of " + d.str());
}

/// u^e * series(trunc - e) so that the result is exact through trunc.
template <typename Make>
HalfLaurentSeries shifted_series(int e, int trunc, Make make)
{
    return make(trunc - e).shifted(e);
}

} // namespace detail

/// Poincare series of the classifying space of Aut(M).
inline HalfLaurentSeries aut_series(const Multisegment& m, int trunc = default_truncation)
{
    auto out = HalfLaurentSeries::one(trunc);
    for (int mult : aut_series_exponents(m))
        out *= bgl(mult, trunc);
    return out;
}

inline HalfLaurentSeries gdim_geo(const Quiver& q, const DimVector& d, const Composition& i, const Composition& j,
    int trunc = default_truncation)
{
    detail::check_block(q, d, i, j);
    int dj = dim_qvariety(q, j);
    HalfLaurentSeries out(trunc);
    for (const auto& m : enumerate_nilreps(q, d)) {
        auto ci = paving_cells(q, m, i);
        if (ci.empty())
            continue;
        auto cj = paving_cells(q, m, j);
        if (cj.empty())
            continue;
        int od = orbit_dim(q, m);
        std::map<int, int> twists;
        for (int a : ci)
            for (int b : cj)
                ++twists[2 * (dj - od - a - b)];
        for (auto [e, count] : twists)
            out += detail::shifted_series(e, trunc, [&](int t) { return aut_series(m, t); }).scaled(count);
    }
    return out;
}

/// Permutations w with w.i = j, where (w.i)_{w(k)} = i_k.
inline std::vector<std::vector<int>> word_transporters(const std::vector<int>& i, const std::vector<int>& j)
{
    std::vector<std::vector<int>> out;
    if (i.size() != j.size())
        return out;
    std::vector<int> w(i.size());
    std::iota(w.begin(), w.end(), 0);
    do {
        bool ok = true;
        for (std::size_t k = 0; k < i.size() && ok; ++k)
            ok = j[static_cast<std::size_t>(w[k])] == i[k];
        if (ok)
            out.push_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

/// KLR degree of the crossing diagram of w on the word i.
inline int klr_degree(const Quiver& q, const std::vector<int>& i, const std::vector<int>& w)
{
    int deg = 0;
    for (std::size_t k = 0; k < i.size(); ++k)
        for (std::size_t l = k + 1; l < i.size(); ++l)
            if (w[k] > w[l])
                deg -= cartan(q, i[k], i[l]);
    return deg;
}

inline HalfLaurentSeries gdim_alg_klr(const Quiver& q, const DimVector& d, const Composition& i, const Composition& j,
    int trunc = default_truncation)
{
    detail::check_block(q, d, i, j);
    auto wi = i.word();
    auto wj = j.word();
    HalfLaurentSeries out(trunc);
    int n = d.total();
    for (const auto& w : word_transporters(wi, wj)) {
        int e = klr_degree(q, wi, w);
        out += detail::shifted_series(e, trunc, [&](int t) { return free_polynomial_series(n, t); });
    }
    return out;
}

inline GdimReport compare_block(const Quiver& q, const DimVector& d, const Composition& i, const Composition& j,
    int trunc = default_truncation)
{
    if (!i.is_complete() || !j.is_complete())
        throw std::invalid_argument("KLR comparison needs complete compositions");
    GdimReport r{gdim_geo(q, d, i, j, trunc), gdim_alg_klr(q, d, i, j, trunc), HalfLaurentSeries(trunc), false, {}};
    int shift = dim_qvariety(q, j) - dim_qvariety(q, i);
    r.normalized = detail::shifted_series(shift, trunc, [&](int t) { return gdim_alg_klr(q, d, i, j, t); });
    int bad = 0;
    r.normalized_match = r.geometric.agrees_with(r.normalized, &bad);
    if (!r.normalized_match)
        r.first_discrepancy = bad;
    return r;
}

/// Geometric block dimensions over all pairs of compositions of d.
inline std::map<BlockKey, HalfLaurentSeries> gdim_schur_table(const Quiver& q, const DimVector& d,
    int trunc = default_truncation, bool complete_only = false)
{
    std::vector<Composition> comps;
    for (auto& c : enumerate_comps(d))
        if (!complete_only || c.is_complete())
            comps.push_back(std::move(c));
    std::map<BlockKey, HalfLaurentSeries> table;
    for (const auto& i : comps)
        for (const auto& j : comps)
            table.emplace(BlockKey{i, j}, gdim_geo(q, d, i, j, trunc));
    return table;
}

/// Graded dimension of S # Q[S_n]: n! (1 - u^2)^{-n}.
inline HalfLaurentSeries springer_smash_gdim(int n, int trunc = default_truncation)
{
    if (n < 1)
        throw std::invalid_argument("smash product needs n >= 1");
    mpz_class fact = 1;
    for (int k = 2; k <= n; ++k)
        fact *= k;
    return free_polynomial_series(n, trunc).scaled(fact);
}

/// Coefficient of u^{2m} in (i,j) equals coefficient of u^{2(m + d_i - d_j)} in (j,i),
/// wherever both sides are inside their truncation windows.
inline bool transpose_symmetric(const Quiver& q, const Composition& i, const Composition& j,
    const HalfLaurentSeries& ij, const HalfLaurentSeries& ji)
{
    int shift = 2 * (dim_qvariety(q, i) - dim_qvariety(q, j));
    for (const auto& [e, c] : ij.terms())
        if (e + shift <= ji.trunc() && ji[e + shift] != c)
            return false;
    for (const auto& [f, c] : ji.terms())
        if (f - shift <= ij.trunc() && ij[f - shift] != c)
            return false;
    return true;
}

} // namespace mspring
