#pragma once

// Nilpotent representations of linear and cyclic quivers as multisegments.
//
// E(i,l) has basis e_{i-l+1}, ..., e_i with e_j at vertex j, arrows sending
// e_j to e_{j+1} and killing e_i. Its socle is the line through e_i.

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "mspring/quiver.hpp"

namespace mspring {

struct Segment {
    int socle;
    int length;

    /// Canonical order: by socle vertex, longer segments first.
    friend bool operator<(const Segment& a, const Segment& b)
    {
        if (a.socle != b.socle)
            return a.socle < b.socle;
        return a.length > b.length;
    }
    friend bool operator==(const Segment&, const Segment&) = default;

    std::string str() const { return "(" + std::to_string(socle) + "," + std::to_string(length) + ")"; }
};

inline bool segment_fits(const Quiver& q, const Segment& s)
{
    if (!q.valid_vertex(s.socle) || s.length < 1)
        return false;
    return q.is_cyclic() || s.socle - s.length + 1 >= 0;
}

/// Vertex carrying the basis vector at depth k (k = 0 is the socle).
inline int segment_vertex(const Quiver& q, const Segment& s, int k)
{
    return q.wrap(s.socle - k);
}

inline DimVector segment_dim(const Quiver& q, const Segment& s)
{
    auto d = DimVector::zero(q.vertices());
    for (int k = 0; k < s.length; ++k)
        d[segment_vertex(q, s, k)] += 1;
    return d;
}

class Multisegment {
public:
    Multisegment() = default;
    explicit Multisegment(std::vector<Segment> segs) : segs_(std::move(segs))
    {
        std::sort(segs_.begin(), segs_.end());
    }

    const std::vector<Segment>& segments() const noexcept { return segs_; }
    bool empty() const noexcept { return segs_.empty(); }
    int size() const noexcept { return static_cast<int>(segs_.size()); }
    const Segment& operator[](int k) const { return segs_.at(static_cast<std::size_t>(k)); }

    bool is_semisimple() const noexcept
    {
        return std::all_of(segs_.begin(), segs_.end(), [](const Segment& s) { return s.length == 1; });
    }

    DimVector dim_vector(const Quiver& q) const
    {
        auto d = DimVector::zero(q.vertices());
        for (const auto& s : segs_)
            d += segment_dim(q, s);
        return d;
    }

    void check(const Quiver& q) const
    {
        for (const auto& s : segs_)
            if (!segment_fits(q, s))
                throw std::invalid_argument("segment " + s.str() + " does not fit quiver " + q.name());
    }

    friend bool operator==(const Multisegment&, const Multisegment&) = default;
    friend bool operator<(const Multisegment& a, const Multisegment& b)
    {
        return std::lexicographical_compare(a.segs_.begin(), a.segs_.end(), b.segs_.begin(), b.segs_.end());
    }

    std::string str() const
    {
        if (segs_.empty())
            return "0";
        std::string out;
        for (std::size_t k = 0; k < segs_.size(); ++k)
            out += (k ? "+" : "") + segs_[k].str();
        return out;
    }

private:
    std::vector<Segment> segs_;
};

namespace detail {

inline void nilreps_rec(const Quiver& q, const std::vector<Segment>& candidates, std::size_t next,
    const DimVector& rest, std::vector<Segment>& chosen, std::vector<Multisegment>& out)
{
    if (rest.is_zero()) {
        out.emplace_back(chosen);
        return;
    }
    for (std::size_t k = next; k < candidates.size(); ++k) {
        auto d = segment_dim(q, candidates[k]);
        bool fits = true;
        for (int v = 0; v < q.vertices(); ++v)
            fits = fits && d[v] <= rest[v];
        if (!fits)
            continue;
        chosen.push_back(candidates[k]);
        nilreps_rec(q, candidates, k, rest - d, chosen, out);
        chosen.pop_back();
    }
}

} // namespace detail

/// Isomorphism classes of nilpotent representations with dimension vector d.
inline std::vector<Multisegment> enumerate_nilreps(const Quiver& q, const DimVector& d)
{
    if (d.size() != q.vertices())
        throw std::invalid_argument("dimension vector does not match quiver");
    std::vector<Segment> candidates;
    for (int i = 0; i < q.vertices(); ++i)
        for (int l = d.total(); l >= 1; --l)
            if (segment_fits(q, {i, l}))
                candidates.push_back({i, l});
    std::sort(candidates.begin(), candidates.end());
    std::vector<Multisegment> out;
    std::vector<Segment> chosen;
    detail::nilreps_rec(q, candidates, 0, d, chosen, out);
    std::sort(out.begin(), out.end());
    return out;
}

/// Indices into M.segments(), grouped by socle vertex, deepest radical layer
/// (longest segment) first.
using SocleBasis = std::vector<std::vector<int>>;

inline SocleBasis socle_basis(const Quiver& q, const Multisegment& m)
{
    SocleBasis basis(static_cast<std::size_t>(q.vertices()));
    for (int k = 0; k < m.size(); ++k) {
        q.check_vertex(m[k].socle);
        basis[static_cast<std::size_t>(m[k].socle)].push_back(k);
    }
    // canonical segment order already sorts each vertex by decreasing length
    return basis;
}

/// Quotient of M by the span of the chosen socle lines. `chosen[v]` holds
/// positions into socle_basis(q, m)[v].
inline Multisegment quotient_by_socles(const Quiver& q, const Multisegment& m, const std::vector<std::vector<int>>& chosen)
{
    auto basis = socle_basis(q, m);
    if (chosen.size() != basis.size())
        throw std::invalid_argument("socle choice has wrong number of vertices");
    std::vector<bool> hit(static_cast<std::size_t>(m.size()), false);
    for (std::size_t v = 0; v < basis.size(); ++v)
        for (int pos : chosen[v]) {
            if (pos < 0 || pos >= static_cast<int>(basis[v].size()))
                throw std::out_of_range("socle choice references a missing socle element");
            auto idx = static_cast<std::size_t>(basis[v][static_cast<std::size_t>(pos)]);
            if (hit[idx])
                throw std::invalid_argument("socle choice repeats an element");
            hit[idx] = true;
        }
    std::vector<Segment> out;
    for (int k = 0; k < m.size(); ++k) {
        Segment s = m[k];
        if (hit[static_cast<std::size_t>(k)]) {
            if (s.length == 1)
                continue;
            s = {q.wrap(s.socle - 1), s.length - 1};
        }
        out.push_back(s);
    }
    return Multisegment(std::move(out));
}

/// dim Hom(E(a), E(b)). A homomorphism is determined by the length m of its
/// image, which must be a quotient of a and a submodule of b.
inline int hom_dim(const Quiver& q, const Segment& a, const Segment& b)
{
    int target = b.socle - a.socle + a.length - 1;
    int upper = std::min(a.length, b.length);
    if (!q.is_cyclic())
        return target >= 0 && target < upper ? 1 : 0;
    int n = q.vertices();
    int first = ((target % n) + n) % n;
    return first < upper ? (upper - 1 - first) / n + 1 : 0;
}

inline int orbit_dim(const Quiver& q, const Multisegment& m)
{
    auto d = m.dim_vector(q);
    int dim = 0;
    for (int v = 0; v < q.vertices(); ++v)
        dim += d[v] * d[v];
    for (const auto& a : m.segments())
        for (const auto& b : m.segments())
            dim -= hom_dim(q, a, b);
    return dim;
}

/// Multiplicities of the distinct segment classes of M, in canonical order.
inline std::vector<int> aut_series_exponents(const Multisegment& m)
{
    std::vector<int> mult;
    const auto& s = m.segments();
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (k > 0 && s[k] == s[k - 1])
            ++mult.back();
        else
            mult.push_back(1);
    }
    return mult;
}

} // namespace mspring
