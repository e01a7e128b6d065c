#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cohall/stab.hpp"

namespace cohall {

// One torus fixed point: an assignment of every Chern root to a weight in
// the framing parameters and h, plus the component it lies on.
struct FixedPoint {
    std::string id;
    std::vector<std::pair<Symbol, Weight>> assign;
    int component = -1; // index into RestrictionTable::components

    const Weight* lookup(const Symbol& s) const {
        for (const auto& [sym, w] : assign)
            if (sym == s) return &w;
        return nullptr;
    }
};

// Fixed-point data for one decomposition: the points, the chamber partial
// order on them, and the slot-wise dimension assignment of each component.
struct RestrictionTable {
    std::vector<FixedPoint> points;
    std::vector<std::vector<char>> leq; // leq[x][y]: point x <= point y
    std::vector<std::vector<DimVec>> components; // per component, v_j for each slot

    size_t num_points() const { return points.size(); }

    bool below(size_t x, size_t y) const { return leq[x][y] != 0; }

    // Points lying on a given component.
    std::vector<size_t> points_of(int component) const {
        std::vector<size_t> out;
        for (size_t p = 0; p < points.size(); ++p)
            if (points[p].component == component) out.push_back(p);
        return out;
    }

    void check_order() const {
        size_t n = points.size();
        for (size_t x = 0; x < n; ++x) {
            if (!leq[x][x]) throw table_error("order is not reflexive");
            for (size_t y = 0; y < n; ++y) {
                if (x != y && leq[x][y] && leq[y][x])
                    throw table_error("order is not antisymmetric: " + points[x].id + " and " +
                                      points[y].id);
                for (size_t z = 0; z < n; ++z)
                    if (leq[x][y] && leq[y][z] && !leq[x][z])
                        throw table_error("order is not transitive");
            }
        }
    }
};

namespace detail {

// v-subsets of {1..n} in lexicographic order.
inline std::vector<std::vector<int>> subsets(int n, int v) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<size_t>(v));
    std::iota(cur.begin(), cur.end(), 1);
    if (v == 0) {
        out.push_back({});
        return out;
    }
    if (v > n) return out;
    while (true) {
        out.push_back(cur);
        int i = v - 1;
        while (i >= 0 && cur[static_cast<size_t>(i)] == n - (v - 1 - i)) --i;
        if (i < 0) break;
        ++cur[static_cast<size_t>(i)];
        for (int j = i + 1; j < v; ++j) cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
}

// Dominance of sigma-reordered 0/1 indicator vectors: x <= y iff every
// prefix sum of x (in chamber order) is <= the one of y.
inline bool dominance_leq(const std::vector<int>& x, const std::vector<int>& y,
                          const Chamber& chamber) {
    int sx = 0, sy = 0;
    for (int slot : chamber.word) {
        sx += x[static_cast<size_t>(slot - 1)];
        sy += y[static_cast<size_t>(slot - 1)];
        if (sx > sy) return false;
    }
    return true;
}

} // namespace detail

// Built-in fixed-locus enumeration for the cotangent Grassmannian: the
// one-vertex arrowless quiver with every slot framed by 1.  Points are the
// v-subsets of the framing indices; the chamber order is dominance on the
// reordered indicator vectors.  Any other quiver needs a user table.
inline RestrictionTable enumerate_fixed_points(const Quiver& q, const DimVec& v,
                                               const Decomposition& decomposition,
                                               const Chamber& chamber) {
    decomposition.validate(q);
    chamber.validate(decomposition.size());
    if (q.num_vertices() != 1 || !q.arrows.empty())
        throw table_required_error(
            "fixed-point enumeration is built in only for the one-vertex arrowless quiver; "
            "supply a restriction table file for this quiver");
    for (const auto& [vj, wj] : decomposition.slots)
        if (wj != DimVec{1})
            throw table_required_error(
                "built-in fixed-point enumeration needs every framing slot of size 1; "
                "supply a restriction table file");
    q.check_dims(v, "enumerate_fixed_points v");

    int n = static_cast<int>(decomposition.size());
    int k = v[0];
    if (k > n) throw input_error("empty variety: v exceeds the number of framing slots");

    RestrictionTable table;
    auto subs = detail::subsets(n, k);
    std::vector<std::vector<int>> indicators;
    for (const auto& sub : subs) {
        FixedPoint p;
        std::vector<int> indicator(static_cast<size_t>(n), 0);
        std::string id;
        for (size_t alpha = 0; alpha < sub.size(); ++alpha) {
            p.assign.emplace_back(Symbol::chern(0, static_cast<int>(alpha) + 1),
                                  Weight::of(Symbol::framing(0, sub[alpha])));
            indicator[static_cast<size_t>(sub[alpha] - 1)] = 1;
            if (!id.empty()) id += ",";
            id += std::to_string(sub[alpha]);
        }
        p.id = id.empty() ? "-" : id;
        p.component = static_cast<int>(indicators.size());
        indicators.push_back(indicator);
        table.points.push_back(std::move(p));

        std::vector<DimVec> slots;
        for (int j = 0; j < n; ++j) slots.push_back({indicator[static_cast<size_t>(j)]});
        table.components.push_back(std::move(slots));
    }
    size_t np = table.points.size();
    table.leq.assign(np, std::vector<char>(np, 0));
    for (size_t x = 0; x < np; ++x)
        for (size_t y = 0; y < np; ++y)
            table.leq[x][y] = detail::dominance_leq(indicators[x], indicators[y], chamber) ? 1 : 0;
    table.check_order();
    return table;
}

// Restriction of a polynomial or a rational function at a fixed point.
inline Poly restrict_at(const Poly& p, const FixedPoint& point) {
    std::vector<std::pair<Symbol, Poly>> images;
    images.reserve(point.assign.size());
    for (const auto& [sym, w] : point.assign) images.emplace_back(sym, w.to_poly());
    return p.substitute([&](const Symbol& s) -> const Poly* {
        for (const auto& [sym, img] : images)
            if (sym == s) return &img;
        return nullptr;
    });
}

inline RatFun restrict_at(const RatFun& f, const FixedPoint& point) {
    Poly num = restrict_at(f.num(), point);
    Poly den = restrict_at(f.den(), point);
    if (den.is_zero())
        throw table_error("denominator annihilated at fixed point " + point.id);
    return RatFun(std::move(num), std::move(den));
}

// Tangent weights at a point, split by the sign of the pairing with the
// chamber cocharacter.  Weights with zero framing part are A-fixed and land
// in neither half.
struct TangentSplitAtPoint {
    std::vector<Weight> attracting, repelling, fixed;

    long normal_rank() const {
        return static_cast<long>(attracting.size() + repelling.size());
    }
};

inline TangentSplitAtPoint tangent_split_at(const Quiver& q, const DimVec& v,
                                            const Decomposition& decomposition,
                                            const RestrictionTable& table, size_t point,
                                            const Chamber& chamber) {
    DimVec w = decomposition.total_w();
    KClass tangent = tangent_naka(q, v, w);
    const FixedPoint& fp = table.points.at(point);
    KClass restricted = tangent.substitute([&](const Symbol& s) { return fp.lookup(s); });

    // Framing index -> slot, per vertex.
    size_t nv = q.num_vertices();
    std::vector<std::vector<int>> slot_of(nv);
    for (size_t i = 0; i < nv; ++i) {
        for (size_t j = 0; j < decomposition.size(); ++j)
            for (int t = 0; t < decomposition.slots[j].second[i]; ++t)
                slot_of[i].push_back(static_cast<int>(j) + 1);
    }

    TangentSplitAtPoint out;
    for (const auto& [weight, mult] : restricted.terms()) {
        if (weight.is_zero())
            throw table_error("uncancelled zero tangent weight at point " + fp.id);
        if (mult < 0)
            throw table_error("virtual tangent weight " + weight.print() + " at point " + fp.id);
        long pairing = 0;
        for (const auto& [sym, c] : weight.terms) {
            if (sym.kind != SymKind::Framing) continue;
            int slot = slot_of[static_cast<size_t>(sym.vertex)].at(static_cast<size_t>(sym.index - 1));
            pairing += static_cast<long>(c) * chamber.position(slot);
        }
        for (int copy = 0; copy < mult; ++copy) {
            if (pairing > 0) out.attracting.push_back(weight);
            else if (pairing < 0) out.repelling.push_back(weight);
            else out.fixed.push_back(weight);
        }
    }
    return out;
}

// e(N^-): the product of the repelling tangent weights at the point.
inline Poly euler_nminus(const Quiver& q, const DimVec& v, const Decomposition& decomposition,
                         const RestrictionTable& table, size_t point, const Chamber& chamber) {
    TangentSplitAtPoint split = tangent_split_at(q, v, decomposition, table, point, chamber);
    Poly e(1L);
    for (const Weight& w : split.repelling) e *= w.to_poly();
    return e;
}

// --- the axiom checker ------------------------------------------------------

struct AxiomCheck {
    int component = -1;
    std::string point_id;
    std::string kind; // "diagonal", "support", "degree"
    bool pass = false;
    std::string detail;
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Verifies the three stable-envelope axioms against a table: the diagonal
// restriction equals e(N^-), restrictions vanish off the attracting order,
// and the framing degree of lower restrictions is < half the normal rank.
// Failures are report entries, never exceptions.
inline AxiomReport check_axioms(const Quiver& q, const DimVec& v,
                                const Decomposition& decomposition, const Chamber& chamber,
                                const RestrictionTable& table,
                                const std::vector<RatFun>& stab_classes) {
    if (stab_classes.size() != table.components.size())
        throw input_error("one stable envelope per component required");
    AxiomReport report;
    for (size_t comp = 0; comp < table.components.size(); ++comp) {
        const RatFun& stab = stab_classes[comp];
        std::vector<size_t> own_points = table.points_of(static_cast<int>(comp));
        for (size_t p = 0; p < table.num_points(); ++p) {
            const FixedPoint& point = table.points[p];
            AxiomCheck check;
            check.component = static_cast<int>(comp);
            check.point_id = point.id;
            RatFun r;
            try {
                r = restrict_at(stab, point);
            } catch (const error& e) {
                check.kind = "restriction";
                check.pass = false;
                check.detail = e.what();
                report.checks.push_back(std::move(check));
                continue;
            }
            if (point.component == static_cast<int>(comp)) {
                check.kind = "diagonal";
                Poly expected = euler_nminus(q, v, decomposition, table, p, chamber);
                check.pass = (r == RatFun(expected));
                if (!check.pass)
                    check.detail = "restriction " + r.print() + " != e(N^-) = " + poly_print(expected);
            } else {
                bool on_support = false;
                for (size_t own : own_points)
                    if (table.below(p, own)) on_support = true;
                if (!on_support) {
                    check.kind = "support";
                    check.pass = r.is_zero();
                    if (!check.pass)
                        check.detail = "nonzero restriction " + r.print() + " off the attracting set";
                } else {
                    check.kind = "degree";
                    TangentSplitAtPoint ts =
                        tangent_split_at(q, v, decomposition, table, p, chamber);
                    if (!r.is_poly()) {
                        check.pass = false;
                        check.detail = "restriction is not a polynomial: " + r.print();
                    } else {
                        int deg_a = r.num().degree_of_kind(SymKind::Framing);
                        check.pass = r.is_zero() || 2 * deg_a < ts.normal_rank();
                        if (!check.pass)
                            check.detail = "deg_a = " + std::to_string(deg_a) +
                                           " violates deg_a < " + std::to_string(ts.normal_rank()) +
                                           "/2";
                    }
                }
            }
            report.checks.push_back(std::move(check));
        }
    }
    return report;
}

} // namespace cohall
