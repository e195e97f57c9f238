#pragma once

// Text forms used on the command line and in JSON documents.
//   quiver:        "A3", "cyclic:2"
//   dim vector:    "1,2,1"
//   composition:   "1,0;0,1" (parts separated by ';')
//   word:          "0,1,0"
//   multisegment:  "(0,2)+(0,1)", "0" for the zero representation

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mspring/nilrep.hpp"
#include "mspring/quiver.hpp"

namespace mspring {

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::string trimmed(std::string_view s)
{
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a])))
        ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])))
        --b;
    return std::string(s.substr(a, b - a));
}

inline int parse_int(std::string_view text, const char* what)
{
    auto s = trimmed(text);
    if (s.empty())
        throw ParseError(std::string("empty ") + what);
    std::size_t k = s[0] == '-' || s[0] == '+' ? 1 : 0;
    if (k == s.size())
        throw ParseError(std::string("malformed ") + what + " '" + s + "'");
    for (std::size_t j = k; j < s.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(s[j])))
            throw ParseError(std::string("malformed ") + what + " '" + s + "'");
    try {
        return std::stoi(s);
    } catch (const std::out_of_range&) {
        throw ParseError(std::string(what) + " out of range: '" + s + "'");
    }
}

inline std::vector<std::string> split(std::string_view s, char sep)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t k = 0; k <= s.size(); ++k)
        if (k == s.size() || s[k] == sep) {
            out.emplace_back(s.substr(start, k - start));
            start = k + 1;
        }
    return out;
}

inline std::vector<int> parse_int_list(std::string_view s, const char* what)
{
    std::vector<int> out;
    if (trimmed(s).empty())
        return out;
    for (const auto& part : split(s, ','))
        out.push_back(parse_int(part, what));
    return out;
}

} // namespace detail

inline Quiver parse_quiver(std::string_view text)
{
    auto s = detail::trimmed(text);
    if (s.size() >= 2 && (s[0] == 'A' || s[0] == 'a')) {
        int n = detail::parse_int(std::string_view(s).substr(1), "vertex count");
        if (n < 1)
            throw ParseError("quiver needs at least one vertex");
        return Quiver::linear(n);
    }
    const std::string prefix = "cyclic:";
    if (s.rfind(prefix, 0) == 0) {
        int n = detail::parse_int(std::string_view(s).substr(prefix.size()), "vertex count");
        if (n < 1)
            throw ParseError("quiver needs at least one vertex");
        return Quiver::cyclic(n);
    }
    throw ParseError("unknown quiver spec '" + s + "' (expected A<n> or cyclic:<n>)");
}

inline DimVector parse_dim(const Quiver& q, std::string_view text)
{
    auto v = detail::parse_int_list(text, "dimension entry");
    if (static_cast<int>(v.size()) != q.vertices())
        throw ParseError("dimension vector '" + std::string(text) + "' needs " + std::to_string(q.vertices()) + " entries");
    for (int x : v)
        if (x < 0)
            throw ParseError("dimension vector entries must be nonnegative");
    return DimVector(v);
}

inline Composition parse_composition(const Quiver& q, std::string_view text)
{
    std::vector<DimVector> parts;
    if (!detail::trimmed(text).empty())
        for (const auto& p : detail::split(text, ';')) {
            auto d = parse_dim(q, p);
            if (d.is_zero())
                throw ParseError("composition parts must be nonzero");
            parts.push_back(d);
        }
    return {q.vertices(), std::move(parts)};
}

inline std::vector<int> parse_word(const Quiver& q, std::string_view text)
{
    auto w = detail::parse_int_list(text, "word letter");
    for (int v : w)
        if (!q.valid_vertex(v))
            throw ParseError("word letter " + std::to_string(v) + " is not a vertex of " + q.name());
    return w;
}

inline Multisegment parse_multisegment(const Quiver& q, std::string_view text)
{
    auto s = detail::trimmed(text);
    std::vector<Segment> segs;
    if (s == "0" || s.empty())
        return Multisegment{};
    for (const auto& raw : detail::split(s, '+')) {
        auto t = detail::trimmed(raw);
        if (t.size() < 5 || t.front() != '(' || t.back() != ')')
            throw ParseError("malformed segment '" + t + "' (expected (i,l))");
        auto inner = detail::split(std::string_view(t).substr(1, t.size() - 2), ',');
        if (inner.size() != 2)
            throw ParseError("malformed segment '" + t + "' (expected (i,l))");
        Segment seg{detail::parse_int(inner[0], "socle"), detail::parse_int(inner[1], "length")};
        if (!segment_fits(q, seg))
            throw ParseError("segment " + seg.str() + " does not fit quiver " + q.name());
        segs.push_back(seg);
    }
    return Multisegment(std::move(segs));
}

} // namespace mspring
