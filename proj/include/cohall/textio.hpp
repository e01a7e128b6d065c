#pragma once

#include <cctype>
#include <string>

#include "cohall/poly.hpp"

namespace cohall {

// Canonical polynomial text: monomials in the canonical (graded, then
// Chern-major lexicographic) order, rational coefficients as "p/q", symbols
// as a(i,k), s(i,j), h.  This is the golden-file and cache format.

inline std::string poly_print(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                out += "-";
                a = -a;
            }
        } else {
            out += (a < 0) ? " - " : " + ";
            if (a < 0) a = -a;
        }
        first = false;
        std::string mono;
        for (const auto& [sym, e] : m.factors) {
            if (!mono.empty()) mono += "*";
            mono += symbol_print(sym);
            if (e != 1) mono += "^" + std::to_string(e);
        }
        if (mono.empty())
            out += rat_print(a);
        else if (a == 1)
            out += mono;
        else
            out += rat_print(a) + "*" + mono;
    }
    return out;
}

namespace detail {

struct PolyLexer {
    const std::string& text;
    size_t pos = 0;

    explicit PolyLexer(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    [[noreturn]] void fail(const std::string& why) const {
        throw input_error("polynomial parse error at offset " + std::to_string(pos) + ": " + why);
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    long parse_int() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected an integer");
        return std::stol(text.substr(start, pos - start));
    }

    Rat parse_rational() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected a number");
        std::string num = text.substr(start, pos - start);
        if (eat('/')) {
            skip_ws();
            size_t dstart = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == dstart) fail("expected a denominator");
            num += "/" + text.substr(dstart, pos - dstart);
        }
        return rat_parse(num);
    }

    Symbol parse_symbol() {
        skip_ws();
        char c = text[pos];
        if (c == 'h') {
            ++pos;
            return Symbol::hbar();
        }
        if (c != 'a' && c != 's') fail("expected a symbol");
        ++pos;
        if (!eat('(')) fail("expected '(' after symbol name");
        long vertex = parse_int();
        if (!eat(',')) fail("expected ',' in symbol");
        long index = parse_int();
        if (!eat(')')) fail("expected ')' in symbol");
        if (vertex < 1 || index < 1) fail("symbol indices are 1-based");
        return c == 'a' ? Symbol::framing(static_cast<int>(vertex - 1), static_cast<int>(index))
                        : Symbol::chern(static_cast<int>(vertex - 1), static_cast<int>(index));
    }

    // factor := rational | symbol ['^' int] | '(' poly ')' ['^' int]
    Poly parse_factor() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input");
        char c = text[pos];
        if (c == '(') {
            ++pos;
            Poly inner = parse_poly();
            if (!eat(')')) fail("expected ')'");
            if (eat('^')) return inner.pow(static_cast<int>(parse_int()));
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Rat q = parse_rational();
            if (eat('^')) {
                long e = parse_int();
                Rat r = rat_of(1);
                for (long i = 0; i < e; ++i) r *= q;
                return Poly(r);
            }
            return Poly(q);
        }
        Symbol s = parse_symbol();
        int e = 1;
        if (eat('^')) e = static_cast<int>(parse_int());
        return Poly::var(s, e);
    }

    // term := factor ('*' factor)*
    Poly parse_term() {
        Poly p = parse_factor();
        while (eat('*')) p *= parse_factor();
        return p;
    }

    // poly := ['-'|'+'] term (('+'|'-') term)*
    Poly parse_poly() {
        Poly p;
        int sign = 1;
        if (eat('-'))
            sign = -1;
        else
            eat('+');
        p += rat_of(sign) * parse_term();
        while (true) {
            skip_ws();
            if (eat('+'))
                p += parse_term();
            else if (eat('-'))
                p -= parse_term();
            else
                break;
        }
        return p;
    }
};

} // namespace detail

inline Poly poly_parse(const std::string& text) {
    detail::PolyLexer lex(text);
    Poly p = lex.parse_poly();
    lex.skip_ws();
    if (lex.pos != text.size()) lex.fail("trailing input");
    return p;
}

} // namespace cohall
