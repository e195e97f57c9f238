#pragma once

// Quivers of type A (linear orientation) and cyclic type, dimension vectors
// and compositions (flag types).

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace mspring {

struct Arrow {
    int source;
    int target;

    friend bool operator==(const Arrow&, const Arrow&) = default;
};

class Quiver {
public:
    enum class Kind { linear, cyclic };

    Quiver(Kind kind, int n) : kind_(kind), n_(n)
    {
        if (n < 1)
            throw std::invalid_argument("quiver needs at least one vertex");
        int count = kind == Kind::linear ? n - 1 : n;
        for (int i = 0; i < count; ++i)
            arrows_.push_back({i, (i + 1) % n});
    }

    static Quiver linear(int n) { return {Kind::linear, n}; }
    static Quiver cyclic(int n) { return {Kind::cyclic, n}; }

    Kind kind() const noexcept { return kind_; }
    bool is_cyclic() const noexcept { return kind_ == Kind::cyclic; }
    int vertices() const noexcept { return n_; }
    const std::vector<Arrow>& arrows() const noexcept { return arrows_; }

    bool valid_vertex(int v) const noexcept { return v >= 0 && v < n_; }

    void check_vertex(int v) const
    {
        if (!valid_vertex(v))
            throw std::out_of_range("vertex " + std::to_string(v) + " outside quiver " + name());
    }

    /// Number of arrows v -> w.
    int arrows_between(int v, int w) const
    {
        check_vertex(v);
        check_vertex(w);
        return static_cast<int>(std::count_if(arrows_.begin(), arrows_.end(),
            [&](const Arrow& a) { return a.source == v && a.target == w; }));
    }

    /// Vertex reduction; only meaningful for cyclic quivers.
    int wrap(int v) const noexcept { return ((v % n_) + n_) % n_; }

    std::string name() const
    {
        return kind_ == Kind::linear ? "A" + std::to_string(n_) : "cyclic:" + std::to_string(n_);
    }

    friend bool operator==(const Quiver&, const Quiver&) = default;

private:
    Kind kind_;
    int n_;
    std::vector<Arrow> arrows_;
};

/// Symmetrized Cartan pairing of the underlying graph.
inline int cartan(const Quiver& q, int v, int w)
{
    q.check_vertex(v);
    q.check_vertex(w);
    if (v == w)
        return 2;
    return -(q.arrows_between(v, w) + q.arrows_between(w, v));
}

class DimVector {
public:
    DimVector() = default;
    explicit DimVector(std::vector<int> entries) : e_(std::move(entries))
    {
        for (int x : e_)
            if (x < 0)
                throw std::invalid_argument("dimension vector entries must be nonnegative");
    }
    static DimVector zero(int n) { return DimVector(std::vector<int>(static_cast<std::size_t>(n), 0)); }
    static DimVector unit(int n, int v)
    {
        auto d = zero(n);
        d.e_.at(static_cast<std::size_t>(v)) = 1;
        return d;
    }

    int size() const noexcept { return static_cast<int>(e_.size()); }
    int operator[](int v) const { return e_.at(static_cast<std::size_t>(v)); }
    int& operator[](int v) { return e_.at(static_cast<std::size_t>(v)); }
    int total() const noexcept { return std::accumulate(e_.begin(), e_.end(), 0); }
    bool is_zero() const noexcept { return total() == 0; }
    const std::vector<int>& entries() const noexcept { return e_; }

    DimVector& operator+=(const DimVector& o)
    {
        check_size(o);
        for (std::size_t i = 0; i < e_.size(); ++i)
            e_[i] += o.e_[i];
        return *this;
    }
    DimVector& operator-=(const DimVector& o)
    {
        check_size(o);
        for (std::size_t i = 0; i < e_.size(); ++i) {
            e_[i] -= o.e_[i];
            if (e_[i] < 0)
                throw std::invalid_argument("dimension vector difference went negative");
        }
        return *this;
    }
    friend DimVector operator+(DimVector a, const DimVector& b) { return a += b; }
    friend DimVector operator-(DimVector a, const DimVector& b) { return a -= b; }

    friend auto operator<=>(const DimVector&, const DimVector&) = default;

    std::string str() const
    {
        std::string s;
        for (std::size_t i = 0; i < e_.size(); ++i)
            s += (i ? "," : "") + std::to_string(e_[i]);
        return s;
    }

private:
    void check_size(const DimVector& o) const
    {
        if (o.e_.size() != e_.size())
            throw std::invalid_argument("dimension vectors over different vertex sets");
    }
    std::vector<int> e_;
};

/// Ordered list of nonzero dimension vectors; the type of a flag.
class Composition {
public:
    Composition(int vertices, std::vector<DimVector> parts) : n_(vertices), parts_(std::move(parts))
    {
        for (const auto& p : parts_) {
            if (p.size() != n_)
                throw std::invalid_argument("composition part has wrong number of vertices");
            if (p.is_zero())
                throw std::invalid_argument("composition parts must be nonzero");
        }
    }

    static Composition from_word(int vertices, const std::vector<int>& word)
    {
        std::vector<DimVector> parts;
        for (int v : word) {
            if (v < 0 || v >= vertices)
                throw std::out_of_range("word letter " + std::to_string(v) + " is not a vertex");
            parts.push_back(DimVector::unit(vertices, v));
        }
        return {vertices, std::move(parts)};
    }

    int vertices() const noexcept { return n_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }
    const DimVector& operator[](int j) const { return parts_.at(static_cast<std::size_t>(j)); }
    const std::vector<DimVector>& parts() const noexcept { return parts_; }

    DimVector target() const
    {
        auto d = DimVector::zero(n_);
        for (const auto& p : parts_)
            d += p;
        return d;
    }

    bool is_complete() const noexcept
    {
        return std::all_of(parts_.begin(), parts_.end(), [](const DimVector& p) { return p.total() == 1; });
    }

    /// Vertex sequence of a complete composition.
    std::vector<int> word() const
    {
        if (!is_complete())
            throw std::logic_error("word form requires a complete composition");
        std::vector<int> w;
        for (const auto& p : parts_) {
            const auto& e = p.entries();
            w.push_back(static_cast<int>(std::find(e.begin(), e.end(), 1) - e.begin()));
        }
        return w;
    }

    /// Composition without its first part.
    Composition tail() const
    {
        if (parts_.empty())
            throw std::logic_error("tail of an empty composition");
        return {n_, std::vector<DimVector>(parts_.begin() + 1, parts_.end())};
    }

    friend auto operator<=>(const Composition&, const Composition&) = default;

    std::string str() const
    {
        std::string s;
        for (std::size_t j = 0; j < parts_.size(); ++j)
            s += (j ? ";" : "") + parts_[j].str();
        return s;
    }

private:
    int n_;
    std::vector<DimVector> parts_;
};

/// All words with content d, lexicographically ordered.
inline std::vector<Composition> enumerate_complete_comps(const DimVector& d)
{
    std::vector<int> word;
    for (int v = 0; v < d.size(); ++v)
        word.insert(word.end(), static_cast<std::size_t>(d[v]), v);
    std::vector<Composition> out;
    do {
        out.push_back(Composition::from_word(d.size(), word));
    } while (std::next_permutation(word.begin(), word.end()));
    return out;
}

namespace detail {

inline void all_parts_below(const DimVector& d, int v, DimVector& cur, std::vector<DimVector>& out)
{
    if (v == d.size()) {
        if (!cur.is_zero())
            out.push_back(cur);
        return;
    }
    for (int x = 0; x <= d[v]; ++x) {
        cur[v] = x;
        all_parts_below(d, v + 1, cur, out);
    }
    cur[v] = 0;
}

inline void compositions_rec(const DimVector& rest, std::vector<DimVector>& prefix, std::vector<Composition>& out)
{
    if (rest.is_zero()) {
        out.emplace_back(rest.size(), prefix);
        return;
    }
    std::vector<DimVector> parts;
    auto cur = DimVector::zero(rest.size());
    all_parts_below(rest, 0, cur, parts);
    for (const auto& p : parts) {
        prefix.push_back(p);
        compositions_rec(rest - p, prefix, out);
        prefix.pop_back();
    }
}

} // namespace detail

/// All compositions of d, complete or not. The zero vector has the single empty composition.
inline std::vector<Composition> enumerate_comps(const DimVector& d)
{
    std::vector<Composition> out;
    std::vector<DimVector> prefix;
    detail::compositions_rec(d, prefix, out);
    return out;
}

/// Dimension of the product of partial flag varieties of type comp.
inline int dim_flag(const Composition& comp)
{
    int dim = 0;
    for (int v = 0; v < comp.vertices(); ++v)
        for (int a = 0; a < comp.length(); ++a)
            for (int b = a + 1; b < comp.length(); ++b)
                dim += comp[a][v] * comp[b][v];
    return dim;
}

/// Dimension of the variety of pairs (representation, flag) with the
/// representation strictly lowering the flag.
inline int dim_qvariety(const Quiver& q, const Composition& comp)
{
    if (comp.vertices() != q.vertices())
        throw std::invalid_argument("composition does not match quiver");
    int dim = dim_flag(comp);
    for (const auto& arrow : q.arrows())
        for (int a = 0; a < comp.length(); ++a)
            for (int b = 0; b < a; ++b)
                dim += comp[b][arrow.target] * comp[a][arrow.source];
    return dim;
}

} // namespace mspring
