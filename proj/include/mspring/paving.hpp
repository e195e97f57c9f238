#pragma once

// Affine pavings of quiver flag varieties Fl(M, comp): the variety of flags of
// type comp in the representation M that the representation lowers strictly.
//
// A strictly stable flag has V^1 inside the socle. Fixing the first step
// fibres Fl(M, comp) over a graded Grassmannian of the socle; the Borel
// subgroup of Aut(M)'s image in GL(soc M) paves that Grassmannian by Schubert
// cells, and over each cell the fibre is Fl(M / V^1, rest) for the coordinate
// representative V^1. The recursion below enumerates those cells.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <vector>

#include "mspring/finite_field.hpp"
#include "mspring/nilrep.hpp"
#include "mspring/quiver.hpp"

namespace mspring {

/// Multiset of affine cell dimensions, kept sorted.
using CellSet = std::vector<int>;

class PoincarePolynomial {
public:
    PoincarePolynomial() = default;
    explicit PoincarePolynomial(const CellSet& cells)
    {
        for (int c : cells)
            ++coef_[c];
    }

    const std::map<int, std::int64_t>& coefficients() const noexcept { return coef_; }
    std::int64_t operator[](int k) const
    {
        auto it = coef_.find(k);
        return it == coef_.end() ? 0 : it->second;
    }
    int degree() const { return coef_.empty() ? -1 : coef_.rbegin()->first; }
    bool is_zero() const noexcept { return coef_.empty(); }

    std::int64_t operator()(std::int64_t q) const
    {
        std::int64_t total = 0;
        for (auto [k, c] : coef_) {
            std::int64_t pw = 1;
            for (int i = 0; i < k; ++i)
                pw *= q;
            total += c * pw;
        }
        return total;
    }

    friend bool operator==(const PoincarePolynomial&, const PoincarePolynomial&) = default;

private:
    std::map<int, std::int64_t> coef_;
};

namespace detail {

inline void check_flag_input(const Quiver& q, const Multisegment& m, const Composition& comp)
{
    m.check(q);
    if (comp.vertices() != q.vertices())
        throw std::invalid_argument("composition does not match quiver");
    if (m.dim_vector(q) != comp.target())
        throw std::invalid_argument("dimension of " + m.str() + " differs from composition target " + comp.target().str());
}

/// All ways of picking `need[v]` positions out of `avail[v]` at every vertex.
inline void for_each_socle_choice(const std::vector<int>& avail, const DimVector& need,
    const std::function<void(const std::vector<std::vector<int>>&)>& visit)
{
    std::size_t n = avail.size();
    for (std::size_t v = 0; v < n; ++v)
        if (need[static_cast<int>(v)] > avail[v])
            return;
    std::vector<std::vector<int>> chosen(n);
    std::function<void(std::size_t, int)> rec = [&](std::size_t v, int start) {
        if (v == n) {
            visit(chosen);
            return;
        }
        if (static_cast<int>(chosen[v].size()) == need[static_cast<int>(v)]) {
            rec(v + 1, 0);
            return;
        }
        for (int p = start; p < avail[v]; ++p) {
            chosen[v].push_back(p);
            rec(v, p + 1);
            chosen[v].pop_back();
        }
    };
    rec(0, 0);
}

/// Dimension of the Schubert cell through the coordinate subspace `chosen`
/// (positions into an ordered basis of size `avail`).
inline int schubert_dim(const std::vector<int>& avail, const std::vector<std::vector<int>>& chosen)
{
    int dim = 0;
    for (std::size_t v = 0; v < avail.size(); ++v) {
        std::vector<bool> in(static_cast<std::size_t>(avail[v]), false);
        for (int p : chosen[v])
            in[static_cast<std::size_t>(p)] = true;
        for (int p : chosen[v])
            for (int t = 0; t < p; ++t)
                dim += in[static_cast<std::size_t>(t)] ? 0 : 1;
    }
    return dim;
}

inline void paving_rec(const Quiver& q, const Multisegment& m, const Composition& comp, int part, int offset, CellSet& out)
{
    if (part == comp.length()) {
        if (!m.empty())
            throw std::logic_error("paving recursion left a nonzero representation");
        out.push_back(offset);
        return;
    }
    auto basis = socle_basis(q, m);
    std::vector<int> avail;
    for (const auto& b : basis)
        avail.push_back(static_cast<int>(b.size()));
    for_each_socle_choice(avail, comp[part], [&](const std::vector<std::vector<int>>& chosen) {
        paving_rec(q, quotient_by_socles(q, m, chosen), comp, part + 1, offset + schubert_dim(avail, chosen), out);
    });
}

} // namespace detail

inline CellSet paving_cells(const Quiver& q, const Multisegment& m, const Composition& comp)
{
    detail::check_flag_input(q, m, comp);
    if (comp.empty() && !m.empty())
        throw std::invalid_argument("empty composition for a nonzero representation");
    CellSet cells;
    detail::paving_rec(q, m, comp, 0, 0, cells);
    std::sort(cells.begin(), cells.end());
    return cells;
}

inline PoincarePolynomial poincare(const Quiver& q, const Multisegment& m, const Composition& comp)
{
    return PoincarePolynomial(paving_cells(q, m, comp));
}

// Point-counting oracle. Independent of the recursion above: it materializes M
// as matrices over F_p and enumerates strictly stable flags directly.

/// A representation over F_p: per-vertex dimensions and one matrix per arrow
/// (target dimension x source dimension).
struct FpRep {
    std::vector<int> dims;
    std::vector<fp::Matrix> maps;
};

inline FpRep materialize(const Quiver& q, const Multisegment& m)
{
    FpRep rep;
    rep.dims.assign(static_cast<std::size_t>(q.vertices()), 0);
    // index of each basis vector of each segment inside its vertex space
    std::vector<std::vector<int>> slot;
    for (const auto& s : m.segments()) {
        std::vector<int> idx(static_cast<std::size_t>(s.length));
        for (int k = 0; k < s.length; ++k)
            idx[static_cast<std::size_t>(k)] = rep.dims[static_cast<std::size_t>(segment_vertex(q, s, k))]++;
        slot.push_back(std::move(idx));
    }
    for (const auto& a : q.arrows())
        rep.maps.emplace_back(rep.dims[static_cast<std::size_t>(a.target)], rep.dims[static_cast<std::size_t>(a.source)]);
    for (std::size_t si = 0; si < m.segments().size(); ++si) {
        const auto& s = m.segments()[si];
        // depth k sits at vertex socle-k and maps to depth k-1
        for (int k = s.length - 1; k >= 1; --k) {
            int from = segment_vertex(q, s, k);
            int to = segment_vertex(q, s, k - 1);
            for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
                const auto& a = q.arrows()[ai];
                if (a.source == from && a.target == to) {
                    rep.maps[ai].at(slot[si][static_cast<std::size_t>(k - 1)], slot[si][static_cast<std::size_t>(k)]) = 1;
                    break;
                }
            }
        }
    }
    return rep;
}

namespace detail {

struct Quotient {
    fp::Matrix project; // (n-r) x n
    fp::Matrix lift;    // n x (n-r)
};

/// Projection onto F^n / span(rows of w) and a section of it.
inline Quotient quotient_maps(const fp::Field& f, const fp::Matrix& w, int n)
{
    fp::Matrix echelon = w;
    auto pivots = fp::rref(f, echelon);
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int c : pivots)
        is_pivot[static_cast<std::size_t>(c)] = true;
    int r = w.rows;
    fp::Matrix basis(n, n);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < n; ++j)
            basis.at(j, i) = w.at(i, j);
    Quotient out{fp::Matrix(n - r, n), fp::Matrix(n, n - r)};
    int col = r;
    for (int c = 0; c < n; ++c)
        if (!is_pivot[static_cast<std::size_t>(c)]) {
            basis.at(c, col) = 1;
            out.lift.at(c, col - r) = 1;
            ++col;
        }
    auto inv = fp::inverse(f, basis);
    for (int i = 0; i < n - r; ++i)
        for (int j = 0; j < n; ++j)
            out.project.at(i, j) = inv.at(r + i, j);
    return out;
}

inline std::int64_t count_rec(const fp::Field& f, const Quiver& q, const FpRep& rep, const Composition& comp, int part)
{
    int nv = q.vertices();
    if (part == comp.length())
        return 1;
    const auto& need = comp[part];
    // kernel of all outgoing maps at each vertex, as columns
    std::vector<fp::Matrix> kernels;
    for (int v = 0; v < nv; ++v) {
        int dv = rep.dims[static_cast<std::size_t>(v)];
        int rows = 0;
        for (std::size_t ai = 0; ai < q.arrows().size(); ++ai)
            if (q.arrows()[ai].source == v)
                rows += rep.maps[ai].rows;
        fp::Matrix stacked(rows, dv);
        int r0 = 0;
        for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
            if (q.arrows()[ai].source != v)
                continue;
            const auto& mp = rep.maps[ai];
            for (int i = 0; i < mp.rows; ++i)
                for (int j = 0; j < dv; ++j)
                    stacked.at(r0 + i, j) = mp.at(i, j);
            r0 += mp.rows;
        }
        kernels.push_back(fp::kernel(f, stacked));
        if (kernels.back().cols < need[v])
            return 0;
    }
    std::int64_t total = 0;
    std::vector<fp::Matrix> chosen(static_cast<std::size_t>(nv));
    std::function<void(int)> rec = [&](int v) {
        if (v == nv) {
            std::vector<Quotient> quot;
            FpRep next;
            for (int u = 0; u < nv; ++u) {
                quot.push_back(quotient_maps(f, chosen[static_cast<std::size_t>(u)], rep.dims[static_cast<std::size_t>(u)]));
                next.dims.push_back(rep.dims[static_cast<std::size_t>(u)] - need[u]);
            }
            for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
                const auto& a = q.arrows()[ai];
                next.maps.push_back(fp::multiply(f, quot[static_cast<std::size_t>(a.target)].project,
                    fp::multiply(f, rep.maps[ai], quot[static_cast<std::size_t>(a.source)].lift)));
            }
            total += count_rec(f, q, next, comp, part + 1);
            return;
        }
        const auto& ker = kernels[static_cast<std::size_t>(v)];
        fp::for_each_subspace(f, ker.cols, need[v], [&](const fp::Matrix& coords) {
            // rows of coords are coordinates in the kernel basis
            fp::Matrix kt(ker.cols, ker.rows);
            for (int i = 0; i < ker.rows; ++i)
                for (int j = 0; j < ker.cols; ++j)
                    kt.at(j, i) = ker.at(i, j);
            chosen[static_cast<std::size_t>(v)] = fp::multiply(f, coords, kt);
            rec(v + 1);
        });
    };
    rec(0);
    return total;
}

} // namespace detail

/// Number of strictly stable flags of type comp in M over F_p.
inline std::int64_t count_points(const Quiver& q, const Multisegment& m, const Composition& comp, int p)
{
    fp::Field f(p);
    detail::check_flag_input(q, m, comp);
    return detail::count_rec(f, q, materialize(q, m), comp, 0);
}

} // namespace mspring
