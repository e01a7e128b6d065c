#pragma once

#include <numeric>

#include "cohall/cache.hpp"
#include "cohall/coha.hpp"

namespace cohall {

// An ordered decomposition of the framing (and gauge) dimensions into k
// slots.
struct Decomposition {
    std::vector<std::pair<DimVec, DimVec>> slots; // (v_j, w_j)

    size_t size() const { return slots.size(); }

    DimVec total_v() const {
        DimVec t = slots.at(0).first;
        for (size_t j = 1; j < slots.size(); ++j) t = dim_add(t, slots[j].first);
        return t;
    }
    DimVec total_w() const {
        DimVec t = slots.at(0).second;
        for (size_t j = 1; j < slots.size(); ++j) t = dim_add(t, slots[j].second);
        return t;
    }

    void validate(const Quiver& q) const {
        if (slots.empty()) throw input_error("decomposition needs at least one slot");
        for (const auto& [v, w] : slots) {
            q.check_dims(v, "decomposition v_j");
            q.check_dims(w, "decomposition w_j");
        }
    }

    std::string canonical_text() const {
        std::string s = "[";
        for (size_t j = 0; j < slots.size(); ++j) {
            if (j) s += ";";
            s += dim_print(slots[j].first) + "|" + dim_print(slots[j].second);
        }
        return s + "]";
    }
};

// A chamber a_{sigma(1)} < a_{sigma(2)} < ... < a_{sigma(k)}, stored as the
// word sigma(1), ..., sigma(k) of 1-based slot numbers.
struct Chamber {
    std::vector<int> word;

    static Chamber identity(size_t k) {
        Chamber c;
        c.word.resize(k);
        std::iota(c.word.begin(), c.word.end(), 1);
        return c;
    }

    size_t size() const { return word.size(); }

    void validate(size_t k) const {
        if (word.size() != k) throw input_error("chamber word length differs from slot count");
        std::vector<char> seen(k + 1, 0);
        for (int x : word) {
            if (x < 1 || x > static_cast<int>(k) || seen[static_cast<size_t>(x)])
                throw input_error("chamber word is not a permutation of 1.." + std::to_string(k));
            seen[static_cast<size_t>(x)] = 1;
        }
    }

    // 1-based position of a slot in the chamber order.
    int position(int slot) const {
        for (size_t b = 0; b < word.size(); ++b)
            if (word[b] == slot) return static_cast<int>(b) + 1;
        throw input_error("slot not in chamber word");
    }

    std::string canonical_text() const {
        std::string s;
        for (size_t b = 0; b < word.size(); ++b) {
            if (b) s += ",";
            s += std::to_string(word[b]);
        }
        return s;
    }
};

// A fixed component: the slot dimensions plus one tautological class per
// slot (in the slot's own local symbols), defaulting to 1.
struct FixedComponent {
    Decomposition decomposition;
    std::vector<Poly> leaf_classes;

    static FixedComponent with_unit_leaves(Decomposition d) {
        FixedComponent f;
        f.leaf_classes.assign(d.slots.size(), Poly(1L));
        f.decomposition = std::move(d);
        return f;
    }

    void validate(const Quiver& q) const {
        decomposition.validate(q);
        if (leaf_classes.size() != decomposition.slots.size())
            throw input_error("one leaf class per slot required");
        for (size_t j = 0; j < leaf_classes.size(); ++j) {
            const auto& [vj, wj] = decomposition.slots[j];
            detail::check_universe(leaf_classes[j], q, vj, wj, "leaf class");
            if (!is_block_symmetric(leaf_classes[j], vj))
                throw symmetry_error("leaf class " + std::to_string(j + 1) +
                                     " is not symmetric per vertex");
        }
    }

    std::string canonical_text() const {
        std::string s = decomposition.canonical_text() + "(";
        for (size_t j = 0; j < leaf_classes.size(); ++j) {
            if (j) s += ";";
            s += poly_print(leaf_classes[j]);
        }
        return s + ")";
    }
};

namespace detail {

struct StabSlot {
    DimVec v, w;
    Poly leaf;
};

// The inductive shuffle formula on a chamber-ordered slot list, run with
// the class e(h g_v) cleared: the cleared classes T = e(h g_v) Stab
// multiply by the twisted product, so every level of the recursion is a
// polynomial (the localized kernel e(T*Rep[-1]) / (e(g[-1]) e(hg[-1]))
// accumulates uncancellable denominators instead).  The two forms agree
// after one division by e(h g_v) at the top; the direct form is kept as a
// test oracle.
inline Poly stab_recurse_cleared(const Quiver& q, const std::vector<StabSlot>& slots,
                                 size_t split_pos) {
    if (slots.size() == 1) return class_gauge(q, slots[0].v, 1).euler_poly() * slots[0].leaf;
    if (split_pos < 1 || split_pos >= slots.size())
        throw input_error("split position out of range");

    std::vector<StabSlot> left(slots.begin(), slots.begin() + static_cast<long>(split_pos));
    std::vector<StabSlot> right(slots.begin() + static_cast<long>(split_pos), slots.end());

    Poly t1 = stab_recurse_cleared(q, left, 1);
    Poly t2 = stab_recurse_cleared(q, right, 1);

    DimVec v1 = dim_zero(q.num_vertices()), w1 = dim_zero(q.num_vertices());
    for (const auto& s : left) {
        v1 = dim_add(v1, s.v);
        w1 = dim_add(w1, s.w);
    }
    DimVec v2 = dim_zero(q.num_vertices()), w2 = dim_zero(q.num_vertices());
    for (const auto& s : right) {
        v2 = dim_add(v2, s.v);
        w2 = dim_add(w2, s.w);
    }

    Poly t2r = t2.rename([&](const Symbol& s) { return offset_symbol(s, v1, w1); });

    GradeSplit split{v1, v2, w1, w2};
    DimVec v = split.v(), w = split.w();
    Poly kernel = grade_part(class_trep(q, v, w), split, -1).euler_poly() *
                  grade_part(class_gauge(q, v, 1), split, +1).euler_poly();

    return shuffle_over_gauge(kernel * t1 * t2r, BlockSplit{v1, v2});
}

} // namespace detail

// Stable envelope of a fixed component in tautological presentation.  The
// result is reported with the natural a-symbol labeling of w = sum w_j and
// may live in the localized ring; it restricts integrally on the variety.
//
// top_split_pos picks where the chamber-ordered slot list is cut at the top
// level of the recursion (the canonical choice is 1); every choice yields
// the same class, which the test suite checks.
inline RatFun stab_psi(const Quiver& q, const FixedComponent& f, const Chamber& chamber,
                       size_t top_split_pos = 1) {
    f.validate(q);
    chamber.validate(f.decomposition.size());
    size_t k = f.decomposition.size();

    std::vector<detail::StabSlot> ordered(k);
    for (size_t b = 0; b < k; ++b) {
        size_t j = static_cast<size_t>(chamber.word[b] - 1);
        ordered[b] = {f.decomposition.slots[j].first, f.decomposition.slots[j].second,
                      f.leaf_classes[j]};
    }

    Poly cleared = detail::stab_recurse_cleared(q, ordered, top_split_pos);
    RatFun r(cleared, class_gauge(q, f.decomposition.total_v(), 1).euler_poly());

    // Relabel the a-blocks from chamber order back to slot order.
    size_t nv = q.num_vertices();
    std::vector<std::vector<int>> natural_offset(k, std::vector<int>(nv, 0));
    {
        std::vector<int> acc(nv, 0);
        for (size_t j = 0; j < k; ++j) {
            for (size_t i = 0; i < nv; ++i) {
                natural_offset[j][i] = acc[i];
                acc[i] += f.decomposition.slots[j].second[i];
            }
        }
    }
    std::map<std::pair<int, int>, Symbol> amap; // (vertex, sigma-ordered index) -> natural symbol
    {
        std::vector<int> acc(nv, 0);
        for (size_t b = 0; b < k; ++b) {
            size_t j = static_cast<size_t>(chamber.word[b] - 1);
            for (size_t i = 0; i < nv; ++i) {
                int width = f.decomposition.slots[j].second[i];
                for (int t = 1; t <= width; ++t)
                    amap[{static_cast<int>(i), acc[i] + t}] =
                        Symbol::framing(static_cast<int>(i), natural_offset[j][i] + t);
                acc[i] += width;
            }
        }
    }
    return r.rename([&](const Symbol& s) {
        if (s.kind != SymKind::Framing) return s;
        auto it = amap.find({s.vertex, s.index});
        if (it == amap.end()) throw error("stab_psi: framing symbol outside the decomposition");
        return it->second;
    });
}

// Cached variant: results are stored as canonical text keyed by a stable
// hash of the full request.  h_sign only tags the key; flipping conventions
// is the caller's conjugation.
inline RatFun stab_psi_cached(const Quiver& q, const FixedComponent& f, const Chamber& chamber,
                              const ResultCache* cache, char h_sign = '+') {
    if (!cache) return stab_psi(q, f, chamber);
    std::string request = "stab|h" + std::string(1, h_sign) + "|" + q.canonical_text() + "|" +
                          f.canonical_text() + "|" + chamber.canonical_text();
    std::string key = ResultCache::key_of(request);
    if (auto hit = cache->get(key)) return ratfun_parse(*hit);
    RatFun r = stab_psi(q, f, chamber);
    cache->put(key, ratfun_print(r));
    return r;
}

// The hypertoric stable envelope for the {a < 0} wall: multiplication by
// the Euler class of the attracted half of T*Rep.
inline Poly stab_hypertoric(const Quiver& q, const Poly& p, const GradeSplit& split) {
    return grade_part(class_trep(q, split.v(), split.w()), split, -1).euler_poly() * p;
}

// Tautological shadow of the section: gamma -> e(h g_v) * gamma.
inline CohaElement psi(const CohaElement& gamma) {
    Poly factor = class_gauge(gamma.quiver, gamma.v, 1).euler_poly();
    return CohaElement(gamma.quiver, gamma.v, gamma.w, factor * gamma.poly);
}

// The semistable product: the 2-slot stable envelope in the chamber
// a_1 < a_2 with the two classes as leaves.
struct StabProduct {
    DimVec v, w;
    RatFun value;
};

inline StabProduct stab_product(const CohaElement& g1, const CohaElement& g2) {
    detail::check_same_quiver(g1.quiver, g2.quiver);
    FixedComponent f;
    f.decomposition.slots = {{g1.v, g1.w}, {g2.v, g2.w}};
    f.leaf_classes = {g1.poly, g2.poly};
    RatFun r = stab_psi(g1.quiver, f, Chamber::identity(2));
    return {dim_add(g1.v, g2.v), dim_add(g1.w, g2.w), r};
}

} // namespace cohall
