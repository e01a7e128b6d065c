#pragma once

#include <map>

#include "cohall/quiver.hpp"
#include "cohall/ratfun.hpp"
#include "cohall/weight.hpp"

namespace cohall {

// A virtual equivariant K-class: a finite signed multiset of weights.
class KClass {
public:
    using TermMap = std::map<Weight, int>;

    const TermMap& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    void add(const Weight& w, int mult = 1) {
        if (mult == 0) return;
        auto [it, inserted] = terms_.emplace(w, mult);
        if (!inserted) {
            it->second += mult;
            if (it->second == 0) terms_.erase(it);
        }
    }

    KClass& operator+=(const KClass& o) {
        for (const auto& [w, m] : o.terms_) add(w, m);
        return *this;
    }
    KClass& operator-=(const KClass& o) {
        for (const auto& [w, m] : o.terms_) add(w, -m);
        return *this;
    }
    friend KClass operator+(KClass a, const KClass& b) { return a += b; }
    friend KClass operator-(KClass a, const KClass& b) { return a -= b; }

    friend bool operator==(const KClass& a, const KClass& b) { return a.terms_ == b.terms_; }

    // rank = sum of multiplicities.
    long rank() const {
        long r = 0;
        for (const auto& [w, m] : terms_) r += m;
        return r;
    }

    KClass substitute(const std::function<const Weight*(const Symbol&)>& assignment) const {
        KClass r;
        for (const auto& [w, m] : terms_) r.add(w.substitute(assignment), m);
        return r;
    }

    // Euler class: product of the weights, multiplicities as exponents.
    // A zero weight with positive multiplicity kills the class; with
    // negative multiplicity it is an error.
    RatFun euler() const {
        Poly num(1L), den(1L);
        for (const auto& [w, m] : terms_) {
            if (w.is_zero()) {
                if (m > 0) return RatFun(Poly());
                throw division_error("euler class: zero weight with negative multiplicity");
            }
            Poly wp = w.to_poly();
            if (m > 0)
                num *= wp.pow(m);
            else
                den *= wp.pow(-m);
        }
        return RatFun(num, den);
    }

    // Euler class of an effective class (all multiplicities positive).
    Poly euler_poly() const { return euler().as_poly("euler class"); }

    std::string print() const {
        std::string s = "{";
        bool first = true;
        for (const auto& [w, m] : terms_) {
            if (!first) s += ", ";
            first = false;
            s += w.print();
            if (m != 1) s += ":" + std::to_string(m);
        }
        return s + "}";
    }

private:
    TermMap terms_;
};

// Degree split: v = v1 + v2 and w = w1 + w2 componentwise; the first v1_i
// (resp. w1_i) indices of each block have degree 0, the rest degree 1.
struct GradeSplit {
    DimVec v1, v2, w1, w2;

    DimVec v() const { return dim_add(v1, v2); }
    DimVec w() const { return dim_add(w1, w2); }
};

// --- weight multisets of the basic representations ------------------------

// T*Rep(v,w): for each arrow, Hom(V_t, V_h) and its cotangent dual; for
// each vertex, Hom(V_i, W_i) and its dual.  Every cotangent-dual weight
// carries +h.
inline KClass class_trep(const Quiver& q, const DimVec& v, const DimVec& w) {
    q.check_dims(v, "class_trep v");
    q.check_dims(w, "class_trep w");
    KClass c;
    Symbol hb = Symbol::hbar();
    for (const auto& [t, hd] : q.arrows) {
        for (int alpha = 1; alpha <= v[static_cast<size_t>(hd)]; ++alpha)
            for (int beta = 1; beta <= v[static_cast<size_t>(t)]; ++beta) {
                Weight fwd = Weight::of(Symbol::chern(hd, alpha)) - Weight::of(Symbol::chern(t, beta));
                c.add(fwd);
                c.add(-fwd + Weight::of(hb));
            }
    }
    for (size_t i = 0; i < q.num_vertices(); ++i) {
        for (int k = 1; k <= w[i]; ++k)
            for (int alpha = 1; alpha <= v[i]; ++alpha) {
                Weight ij = Weight::of(Symbol::framing(static_cast<int>(i), k)) -
                            Weight::of(Symbol::chern(static_cast<int>(i), alpha));
                c.add(ij);
                c.add(-ij + Weight::of(hb));
            }
    }
    return c;
}

// The adjoint class g_v shifted by a multiple of h: all s(i,a) - s(i,b) +
// shift*h over ordered pairs (a,b), including a = b.
inline KClass class_gauge(const Quiver& q, const DimVec& v, int shift) {
    q.check_dims(v, "class_gauge v");
    KClass c;
    for (size_t i = 0; i < q.num_vertices(); ++i)
        for (int a = 1; a <= v[i]; ++a)
            for (int b = 1; b <= v[i]; ++b) {
                Weight w = Weight::of(Symbol::chern(static_cast<int>(i), a)) -
                           Weight::of(Symbol::chern(static_cast<int>(i), b)) +
                           shift * Weight::of(Symbol::hbar());
                c.add(w);
            }
    return c;
}

namespace detail {

// Grading degree of one index under a split.
inline int index_degree(const Symbol& s, const GradeSplit& split) {
    size_t i = static_cast<size_t>(s.vertex);
    if (s.kind == SymKind::Chern) {
        if (i >= split.v1.size() || s.index > split.v1[i] + split.v2[i])
            throw error("grade_part: weight mentions " + symbol_print(s) +
                        " outside the split universe");
        return s.index <= split.v1[i] ? 0 : 1;
    }
    if (i >= split.w1.size() || s.index > split.w1[i] + split.w2[i])
        throw error("grade_part: weight mentions " + symbol_print(s) +
                    " outside the split universe");
    return s.index <= split.w1[i] ? 0 : 1;
}

} // namespace detail

// Degree of a weight under a split: every weight of a representation class
// is of the form P - N + m*h with P, N single a/s symbols (or purely a
// multiple of h, which is degree 0 by convention: diagonal pairs).
inline int weight_grade(const Weight& w, const GradeSplit& split) {
    const Symbol* pos = nullptr;
    const Symbol* neg = nullptr;
    for (const auto& [sym, c] : w.terms) {
        if (sym.kind == SymKind::Hbar) continue;
        if (c == 1 && !pos)
            pos = &sym;
        else if (c == -1 && !neg)
            neg = &sym;
        else
            throw error("weight not attributable to a graded Hom: " + w.print());
    }
    if (!pos && !neg) return 0;
    if (!pos || !neg) throw error("weight not attributable to a graded Hom: " + w.print());
    return detail::index_degree(*pos, split) - detail::index_degree(*neg, split);
}

// The part of a class in one grading degree.  The three degrees partition
// every class built from class_trep / class_gauge.
inline KClass grade_part(const KClass& c, const GradeSplit& split, int degree) {
    if (degree < -1 || degree > 1) throw input_error("grade_part: degree must be -1, 0 or +1");
    KClass r;
    for (const auto& [w, m] : c.terms())
        if (weight_grade(w, split) == degree) r.add(w, m);
    return r;
}

// Tangent class of the Nakajima variety: T*Rep(v,w) - g_v - h g_v.
inline KClass tangent_naka(const Quiver& q, const DimVec& v, const DimVec& w) {
    return class_trep(q, v, w) - class_gauge(q, v, 0) - class_gauge(q, v, 1);
}

// Graded pieces of the normal classes of the diagonal inclusion:
//   frak[-1] = T*Rep[-1] - g[-1]            (stack normal class)
//   n[-1]    = T*Rep[-1] - g[-1] - hg[-1]   (variety normal class)
// and likewise in degree +1.
struct NormalSplit {
    KClass n_minus, n_plus;
    KClass frak_minus, frak_plus;
};

inline NormalSplit normal_split(const Quiver& q, const GradeSplit& split) {
    DimVec v = split.v(), w = split.w();
    KClass trep = class_trep(q, v, w);
    KClass g0 = class_gauge(q, v, 0);
    KClass gh = class_gauge(q, v, 1);
    NormalSplit ns;
    ns.frak_minus = grade_part(trep, split, -1) - grade_part(g0, split, -1);
    ns.frak_plus = grade_part(trep, split, +1) - grade_part(g0, split, +1);
    ns.n_minus = ns.frak_minus - grade_part(gh, split, -1);
    ns.n_plus = ns.frak_plus - grade_part(gh, split, +1);
    return ns;
}

} // namespace cohall
