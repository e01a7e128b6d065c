#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "cohall/poly.hpp"

namespace cohall {

// An integer linear form in the symbols a(i,k), s(i,j), h.
struct Weight {
    // Sorted by the canonical symbol order; coefficients nonzero.
    std::vector<std::pair<Symbol, int>> terms;

    static Weight of(const Symbol& s, int c = 1) {
        Weight w;
        if (c != 0) w.terms.emplace_back(s, c);
        return w;
    }

    bool is_zero() const { return terms.empty(); }

    int coeff(const Symbol& s) const {
        for (const auto& [sym, c] : terms)
            if (sym == s) return c;
        return 0;
    }

    Weight& add(const Symbol& s, int c) {
        if (c == 0) return *this;
        auto it = std::lower_bound(terms.begin(), terms.end(), s,
                                   [](const auto& t, const Symbol& x) {
                                       return canonical_less(t.first, x);
                                   });
        if (it != terms.end() && it->first == s) {
            it->second += c;
            if (it->second == 0) terms.erase(it);
        } else {
            terms.insert(it, {s, c});
        }
        return *this;
    }

    friend Weight operator+(const Weight& a, const Weight& b) {
        Weight r = a;
        for (const auto& [sym, c] : b.terms) r.add(sym, c);
        return r;
    }
    friend Weight operator-(const Weight& a, const Weight& b) {
        Weight r = a;
        for (const auto& [sym, c] : b.terms) r.add(sym, -c);
        return r;
    }
    Weight operator-() const {
        Weight r = *this;
        for (auto& [sym, c] : r.terms) c = -c;
        return r;
    }
    friend Weight operator*(int k, const Weight& w) {
        Weight r;
        if (k == 0) return r;
        r = w;
        for (auto& [sym, c] : r.terms) c *= k;
        return r;
    }

    friend bool operator==(const Weight& a, const Weight& b) { return a.terms == b.terms; }

    friend bool operator<(const Weight& a, const Weight& b) {
        auto ia = a.terms.begin(), ib = b.terms.begin();
        while (ia != a.terms.end() && ib != b.terms.end()) {
            if (ia->first != ib->first) return canonical_less(ia->first, ib->first);
            if (ia->second != ib->second) return ia->second < ib->second;
            ++ia;
            ++ib;
        }
        return ib != b.terms.end();
    }

    Poly to_poly() const {
        Poly p;
        for (const auto& [sym, c] : terms) p += rat_of(c) * Poly::var(sym);
        return p;
    }

    // Simultaneous substitution of symbols by weights; unassigned symbols
    // stay put.
    Weight substitute(const std::function<const Weight*(const Symbol&)>& assignment) const {
        Weight r;
        for (const auto& [sym, c] : terms) {
            if (const Weight* image = assignment(sym))
                r = r + c * *image;
            else
                r.add(sym, c);
        }
        return r;
    }

    std::string print() const { return poly_print(to_poly()); }
};

// Extracts a weight from a degree <= 1 polynomial with integer coefficients
// and no constant term (used when reading restriction tables).
inline Weight weight_from_poly(const Poly& p) {
    Weight w;
    for (const auto& [m, c] : p.terms()) {
        if (m.degree() != 1)
            throw input_error("not a linear form: " + poly_print(p));
        Rat q = c;
        if (q.get_den() != 1)
            throw input_error("weight has a non-integer coefficient: " + poly_print(p));
        w.add(m.factors[0].first, static_cast<int>(q.get_num().get_si()));
    }
    return w;
}

} // namespace cohall
