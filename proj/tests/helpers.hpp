#pragma once

#include <random>

#include "cohall/coha.hpp"
#include "cohall/textio.hpp"

// Shared helpers for the test suites.

namespace testutil {

using namespace cohall;

inline Quiver a1() { return quiver_one_vertex_no_arrows(); }
inline Quiver jordan() { return quiver_jordan(); }
inline Quiver a2() { return Quiver({"1", "2"}, {{0, 1}}); }

inline Poly P(const std::string& text) { return poly_parse(text); }
inline RatFun R(const std::string& text) { return ratfun_parse(text); }

// Deterministic random polynomial over given symbols.
inline Poly random_poly(std::mt19937_64& rng, const std::vector<Symbol>& symbols, int max_degree,
                        int num_terms) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> deg(0, max_degree);
    Poly p;
    for (int t = 0; t < num_terms; ++t) {
        Monomial m;
        int budget = deg(rng);
        std::vector<int> exps(symbols.size(), 0);
        for (int d = 0; d < budget; ++d)
            exps[std::uniform_int_distribution<size_t>(0, symbols.size() - 1)(rng)]++;
        for (size_t i = 0; i < symbols.size(); ++i)
            if (exps[i]) m.factors.emplace_back(symbols[i], exps[i]);
        std::sort(m.factors.begin(), m.factors.end(),
                  [](const auto& a, const auto& b) { return sig_less(a.first, b.first); });
        int c = coeff(rng);
        if (c) p.add_term(m, rat_of(c));
    }
    return p;
}

inline std::vector<Symbol> grade_symbols(const Quiver& q, const DimVec& v, const DimVec& w) {
    std::vector<Symbol> out;
    for (size_t i = 0; i < q.num_vertices(); ++i) {
        for (int k = 1; k <= w[i]; ++k) out.push_back(Symbol::framing(static_cast<int>(i), k));
        for (int a = 1; a <= v[i]; ++a) out.push_back(Symbol::chern(static_cast<int>(i), a));
    }
    out.push_back(Symbol::hbar());
    return out;
}

// Symmetrizes a polynomial over the full permutation group of each vertex
// block (sum over all permutations), producing a valid CoHA representative.
inline Poly symmetrize_full(const Poly& p, const DimVec& v) {
    Poly acc = p;
    for (size_t i = 0; i < v.size(); ++i) {
        if (v[i] < 2) continue;
        std::vector<int> perm(static_cast<size_t>(v[i]));
        std::iota(perm.begin(), perm.end(), 1);
        Poly vsum;
        do {
            vsum += acc.rename([&](const Symbol& s) {
                if (s.kind != SymKind::Chern || s.vertex != static_cast<int>(i)) return s;
                return Symbol::chern(s.vertex, perm[static_cast<size_t>(s.index - 1)]);
            });
        } while (std::next_permutation(perm.begin(), perm.end()));
        acc = vsum;
    }
    return acc;
}

inline CohaElement random_coha_element(std::mt19937_64& rng, const Quiver& q, const DimVec& v,
                                       const DimVec& w, int max_degree = 2, int num_terms = 3) {
    Poly p = random_poly(rng, grade_symbols(q, v, w), max_degree, num_terms);
    Poly sym = symmetrize_full(p, v);
    if (sym.is_zero()) sym = Poly(1L);
    return CohaElement(q, v, w, sym);
}

} // namespace testutil
