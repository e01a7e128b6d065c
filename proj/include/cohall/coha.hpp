#pragma once

#include "cohall/hash.hpp"
#include "cohall/kclass.hpp"
#include "cohall/symmetrize.hpp"

namespace cohall {

namespace detail {

// Validates that p only mentions a(i,1..w_i), s(i,1..v_i) and h.
inline void check_universe(const Poly& p, const Quiver& q, const DimVec& v, const DimVec& w,
                           const char* what) {
    for (const Symbol& s : p.symbols()) {
        if (s.kind == SymKind::Hbar) continue;
        size_t i = static_cast<size_t>(s.vertex);
        bool ok = i < q.num_vertices() &&
                  s.index <= (s.kind == SymKind::Chern ? v[i] : w[i]);
        if (!ok)
            throw input_error(std::string(what) + ": symbol " + symbol_print(s) +
                              " outside the universe of grade (v=" + dim_print(v) +
                              ", w=" + dim_print(w) + ")");
    }
}

// Kuenneth relabeling of the second tensor factor: s-indices shifted by
// v1_i, a-indices by w1_i.
inline Symbol offset_symbol(const Symbol& s, const DimVec& v1, const DimVec& w1) {
    if (s.kind == SymKind::Chern) return Symbol::chern(s.vertex, s.index + v1[static_cast<size_t>(s.vertex)]);
    if (s.kind == SymKind::Framing) return Symbol::framing(s.vertex, s.index + w1[static_cast<size_t>(s.vertex)]);
    return s;
}

} // namespace detail

// A graded element of the framed CoHA: a polynomial over the framing
// parameters of w and the Chern roots of v, fully symmetric per vertex.
struct CohaElement {
    Quiver quiver;
    DimVec v, w;
    Poly poly;

    CohaElement(Quiver q, DimVec v_, DimVec w_, Poly p)
        : quiver(std::move(q)), v(std::move(v_)), w(std::move(w_)), poly(std::move(p)) {
        quiver.check_dims(v, "CohaElement v");
        quiver.check_dims(w, "CohaElement w");
        detail::check_universe(poly, quiver, v, w, "CohaElement");
        if (!is_block_symmetric(poly, v))
            throw symmetry_error("CohaElement polynomial is not symmetric per vertex");
    }

    // (quiver hash, v, w, canonical polynomial text)
    std::string serialize() const {
        return "quiver " + hex64(fnv1a64(quiver.canonical_text())) + "\nv " + dim_print(v) +
               "\nw " + dim_print(w) + "\n" + poly_print(poly) + "\n";
    }
};

inline CohaElement coha_unit(const Quiver& q) {
    size_t n = q.num_vertices();
    return CohaElement(q, dim_zero(n), dim_zero(n), Poly(1L));
}

// An element of the abelianized CoHA: same grading, no symmetry.
struct AbelianElement {
    Quiver quiver;
    DimVec v, w;
    Poly poly;

    AbelianElement(Quiver q, DimVec v_, DimVec w_, Poly p)
        : quiver(std::move(q)), v(std::move(v_)), w(std::move(w_)), poly(std::move(p)) {
        quiver.check_dims(v, "AbelianElement v");
        quiver.check_dims(w, "AbelianElement w");
        detail::check_universe(poly, quiver, v, w, "AbelianElement");
    }
};

namespace detail {

inline void check_same_quiver(const Quiver& a, const Quiver& b) {
    if (a.canonical_text() != b.canonical_text())
        throw input_error("product of elements over different quivers");
}

inline Poly coha_product(const Quiver& q, const DimVec& v1, const DimVec& w1, const Poly& f1,
                         const DimVec& v2, const DimVec& w2, const Poly& f2, bool twisted) {
    GradeSplit split{v1, v2, w1, w2};
    DimVec v = split.v(), w = split.w();
    Poly f2r = f2.rename([&](const Symbol& s) { return offset_symbol(s, v1, w1); });

    // Kernel e(T*Rep[-1]) (e(h g[1])) over the implicit e(g[-1]).
    Poly kernel = grade_part(class_trep(q, v, w), split, -1).euler_poly();
    if (twisted) kernel *= grade_part(class_gauge(q, v, 1), split, +1).euler_poly();

    return shuffle_over_gauge(kernel * f1 * f2r, BlockSplit{v1, v2});
}

} // namespace detail

// The shuffle product m: pushforward along the extension correspondence,
// kernel e(frak N[-1]) = e(T*Rep[-1]) / e(g[-1]).
inline CohaElement coha_mul(const CohaElement& f1, const CohaElement& f2) {
    detail::check_same_quiver(f1.quiver, f2.quiver);
    Poly p = detail::coha_product(f1.quiver, f1.v, f1.w, f1.poly, f2.v, f2.w, f2.poly, false);
    return CohaElement(f1.quiver, dim_add(f1.v, f2.v), dim_add(f1.w, f2.w), std::move(p));
}

// The twisted product m_tau: kernel carries the extra factor e(h g[1]).
inline CohaElement coha_mul_tau(const CohaElement& f1, const CohaElement& f2) {
    detail::check_same_quiver(f1.quiver, f2.quiver);
    Poly p = detail::coha_product(f1.quiver, f1.v, f1.w, f1.poly, f2.v, f2.w, f2.poly, true);
    return CohaElement(f1.quiver, dim_add(f1.v, f2.v), dim_add(f1.w, f2.w), std::move(p));
}

// Multiplication in the abelianized CoHA: cup product by
// e(T*Rep[-1]) e(h g[-1]) e(h g[1]), no shuffle.
inline AbelianElement coha_mul_ab_tau(const AbelianElement& f1, const AbelianElement& f2) {
    detail::check_same_quiver(f1.quiver, f2.quiver);
    GradeSplit split{f1.v, f2.v, f1.w, f2.w};
    const Quiver& q = f1.quiver;
    DimVec v = split.v(), w = split.w();
    Poly f2r = f2.poly.rename([&](const Symbol& s) { return detail::offset_symbol(s, f1.v, f1.w); });
    Poly kernel = grade_part(class_trep(q, v, w), split, -1).euler_poly() *
                  grade_part(class_gauge(q, v, 1), split, -1).euler_poly() *
                  grade_part(class_gauge(q, v, 1), split, +1).euler_poly();
    return AbelianElement(q, v, w, kernel * f1.poly * f2r);
}

} // namespace cohall
