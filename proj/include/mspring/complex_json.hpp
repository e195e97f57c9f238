#pragma once

// JSON form of complexes and the element-expression grammar.
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := rational | '(' expr ')' | atom ['^' digits]
//   atom   := 'e(' word ')' | 'e' | 'x' k | 'psi' k | 's' k | '[' w(1),...,w(n) ']'
//
// e(word) is a KLR idempotent, bare e the unit, x_k and psi_k use 1-based
// indices, s_k is a simple transposition and [..] a permutation in one-line
// notation (smash product only).
//
// Document layout:
//   {"schema": "complex/1",
//    "algebra": {"type": "klr", "quiver": "A2", "dim": "1,1"}
//             | {"type": "nilhecke", "n": 2} | {"type": "smash", "n": 2},
//    "generators": [[idempotent, shift, degree], ...],
//    "differential": [[row, col, "expr"], ...]}
// For KLR algebras the idempotent may be given as an index into the
// lexicographically ordered words or as a word string such as "0,1".

#include <cctype>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "mspring/handles.hpp"
#include "mspring/homotopy.hpp"
#include "mspring/parse.hpp"

namespace mspring {

using json = nlohmann::json;

struct Atom {
    std::string name; // "e", "x", "psi", "s", "perm", "unit"
    std::vector<int> args;
};

namespace detail {

template <AlgebraHandle H, typename Resolve>
class ExprParser {
public:
    ExprParser(const H& h, std::string_view text, Resolve resolve) : h_(h), s_(text), resolve_(resolve) {}

    typename H::Element parse()
    {
        auto v = expr();
        skip();
        if (pos_ != s_.size())
            fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    using E = typename H::Element;

    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError("element expression '" + std::string(s_) + "': " + what + " at position " + std::to_string(pos_));
    }
    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
    }
    bool eat(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    bool eat_word(std::string_view w)
    {
        skip();
        if (s_.substr(pos_, w.size()) == w) {
            pos_ += w.size();
            return true;
        }
        return false;
    }
    int number()
    {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected a number");
        return parse_int(s_.substr(start, pos_ - start), "number");
    }
    std::vector<int> int_list(char close)
    {
        std::vector<int> out;
        if (eat(close))
            return out;
        do
            out.push_back(number());
        while (eat(','));
        if (!eat(close))
            fail(std::string("expected '") + close + "'");
        return out;
    }

    E expr()
    {
        Rational sign = 1;
        if (eat('-'))
            sign = -1;
        else
            eat('+');
        E acc = h_.scale(term(), sign);
        for (;;) {
            if (eat('+'))
                acc = h_.add(acc, term());
            else if (eat('-'))
                acc = h_.add(acc, h_.scale(term(), -1));
            else
                return acc;
        }
    }
    E term()
    {
        E acc = factor();
        while (eat('*'))
            acc = h_.mul(acc, factor());
        return acc;
    }
    E factor()
    {
        skip();
        if (pos_ >= s_.size())
            fail("unexpected end");
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Rational r(number());
            if (eat('/')) {
                int den = number();
                if (den == 0)
                    fail("zero denominator");
                r /= den;
            }
            return h_.scale(resolve_(Atom{"unit", {}}), r);
        }
        if (eat('('))
            return close_paren(expr());
        E base = atom();
        if (eat('^')) {
            int k = number();
            E out = resolve_(Atom{"unit", {}});
            for (int j = 0; j < k; ++j)
                out = h_.mul(out, base);
            return out;
        }
        return base;
    }
    E close_paren(E v)
    {
        if (!eat(')'))
            fail("expected ')'");
        return v;
    }
    E atom()
    {
        if (eat('['))
            return resolve_(Atom{"perm", int_list(']')});
        if (eat_word("psi"))
            return resolve_(Atom{"psi", {number()}});
        if (eat_word("e")) {
            skip();
            if (pos_ < s_.size() && s_[pos_] == '(') {
                ++pos_;
                return resolve_(Atom{"e", int_list(')')});
            }
            return resolve_(Atom{"unit", {}});
        }
        if (eat('x'))
            return resolve_(Atom{"x", {number()}});
        if (eat('s'))
            return resolve_(Atom{"s", {number()}});
        fail("unknown symbol");
    }

    const H& h_;
    std::string_view s_;
    Resolve resolve_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline KlrElement parse_element(const KlrHandle& h, std::string_view text)
{
    auto resolve = [&](const Atom& a) -> KlrElement {
        const int n = h.algebra().strands();
        if (a.name == "unit")
            return h.scalar(1);
        if (a.name == "e") {
            auto idx = h.word_index(a.args);
            if (!idx)
                throw ParseError("e(" + word_str(a.args) + ") is not an idempotent of this algebra");
            return h.idempotent(*idx);
        }
        if (a.name == "x") {
            if (a.args[0] < 1 || a.args[0] > n)
                throw ParseError("x" + std::to_string(a.args[0]) + " out of range");
            return h.x(a.args[0] - 1);
        }
        if (a.name == "psi") {
            if (a.args[0] < 1 || a.args[0] >= n)
                throw ParseError("psi" + std::to_string(a.args[0]) + " out of range");
            return h.psi(a.args[0] - 1);
        }
        throw ParseError("symbol '" + a.name + "' is not available in a KLR algebra");
    };
    return detail::ExprParser<KlrHandle, decltype(resolve)>(h, text, resolve).parse();
}

inline SmashElement parse_element(const SmashHandle& h, std::string_view text)
{
    auto resolve = [&](const Atom& a) -> SmashElement {
        const int n = h.n();
        if (a.name == "unit")
            return SmashElement::one(n);
        if (a.name == "x") {
            if (a.args[0] < 1 || a.args[0] > n)
                throw ParseError("x" + std::to_string(a.args[0]) + " out of range");
            return SmashElement::poly(Poly::variable(n, a.args[0] - 1));
        }
        if (a.name == "s") {
            if (a.args[0] < 1 || a.args[0] >= n)
                throw ParseError("s" + std::to_string(a.args[0]) + " out of range");
            return SmashElement::group(transposition(n, a.args[0] - 1));
        }
        if (a.name == "perm") {
            Perm w;
            for (int v : a.args)
                w.push_back(v - 1);
            auto sorted = w;
            std::sort(sorted.begin(), sorted.end());
            if (sorted != identity_perm(n))
                throw ParseError("[" + word_str(a.args) + "] is not a permutation of 1.." + std::to_string(n));
            return SmashElement::group(w);
        }
        throw ParseError("symbol '" + a.name + "' is not available in the smash product");
    };
    return detail::ExprParser<SmashHandle, decltype(resolve)>(h, text, resolve).parse();
}

using AnyHandle = std::variant<KlrHandle, SmashHandle>;

inline AnyHandle make_handle(const json& spec)
{
    if (!spec.is_object() || !spec.contains("type"))
        throw ParseError("algebra description needs a \"type\"");
    auto type = spec.at("type").get<std::string>();
    if (type == "klr") {
        auto q = parse_quiver(spec.at("quiver").get<std::string>());
        return AnyHandle(std::in_place_type<KlrHandle>, KlrAlgebra(q, parse_dim(q, spec.at("dim").get<std::string>())));
    }
    if (type == "nilhecke") {
        int n = spec.at("n").get<int>();
        if (n < 1)
            throw ParseError("nil Hecke algebra needs n >= 1");
        return AnyHandle(std::in_place_type<KlrHandle>, KlrAlgebra(Quiver::linear(1), DimVector({n})));
    }
    if (type == "smash") {
        int n = spec.at("n").get<int>();
        if (n < 1)
            throw ParseError("smash product needs n >= 1");
        return AnyHandle(std::in_place_type<SmashHandle>, n);
    }
    throw ParseError("unknown algebra type '" + type + "'");
}

namespace detail {

inline int parse_idempotent(const KlrHandle& h, const json& j)
{
    if (j.is_string()) {
        auto w = parse_int_list(j.get<std::string>(), "word letter");
        auto idx = h.word_index(w);
        if (!idx)
            throw ParseError("'" + j.get<std::string>() + "' is not a word of this algebra");
        return *idx;
    }
    return j.get<int>();
}

inline int parse_idempotent(const SmashHandle&, const json& j)
{
    if (j.is_string())
        throw ParseError("the smash product has a single idempotent 0");
    return j.get<int>();
}

} // namespace detail

template <AlgebraHandle H>
GradedComplex<typename H::Element> complex_from_json(const H& h, const json& doc)
{
    GradedComplex<typename H::Element> c;
    for (const auto& g : doc.at("generators")) {
        if (!g.is_array() || g.size() != 3)
            throw ParseError("generator entries are [idempotent, shift, degree]");
        c.gens.push_back({detail::parse_idempotent(h, g[0]), g[1].get<int>(), g[2].get<int>()});
    }
    if (doc.contains("differential"))
        for (const auto& e : doc.at("differential")) {
            if (!e.is_array() || e.size() != 3)
                throw ParseError("differential entries are [row, col, expression]");
            int row = e[0].get<int>(), col = e[1].get<int>();
            if (row < 0 || col < 0 || row >= c.size() || col >= c.size())
                throw ParseError("differential entry (" + std::to_string(row) + "," + std::to_string(col) + ") out of range");
            detail::add_entry(h, c.d, {row, col}, parse_element(h, e[2].get<std::string>()));
        }
    return c;
}

template <AlgebraHandle H>
json complex_to_json(const H& h, const GradedComplex<typename H::Element>& c)
{
    json gens = json::array(), diff = json::array();
    for (const auto& g : c.gens)
        gens.push_back({g.idem, g.shift, g.degree});
    for (const auto& [key, v] : c.d)
        diff.push_back({key.first, key.second, h.str(v)});
    return {{"generators", gens}, {"differential", diff}};
}

template <AlgebraHandle H>
json euler_to_json(const H& h, const EulerSymbol& e)
{
    json out = json::array();
    for (const auto& [key, v] : e)
        out.push_back({{"idempotent", h.idempotent_name(key.first)}, {"shift", key.second}, {"coefficient", v}});
    return out;
}

} // namespace mspring
