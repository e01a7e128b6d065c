#pragma once

#include <set>

#include "cohall/fixloc.hpp"

namespace cohall {

using RatMat = std::vector<std::vector<RatFun>>;

// Restrictions of the stable envelopes of one chamber: rows are fixed
// points, columns are fixed components.
struct StabMatrix {
    std::vector<std::string> point_ids;
    std::vector<int> component_ids;
    RatMat entries; // entries[point][component]
    Chamber chamber;
};

namespace detail {

// Determinant of a polynomial matrix by fraction-free (Bareiss) forward
// elimination.
inline Poly det_bareiss_poly(std::vector<std::vector<Poly>> a) {
    size_t n = a.size();
    if (n == 0) return Poly(1L);
    Poly prev(1L);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t pivot = k;
        while (pivot < n && a[pivot][k].is_zero()) ++pivot;
        if (pivot == n) return Poly();
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                a[i][j] = exact_divide(a[k][k] * a[i][j] - a[i][k] * a[k][j], prev,
                                       "fraction-free determinant");
            a[i][k] = Poly();
        }
        prev = a[k][k];
    }
    return sign < 0 ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

// Clears denominators row by row: every row of [A | B] is scaled by the
// product of the distinct denominators it mentions, which changes neither
// the solution of A X = B nor det ratios.
inline void clear_rows(const RatMat& a_in, const RatMat& b_in,
                       std::vector<std::vector<Poly>>& a, std::vector<std::vector<Poly>>& b) {
    size_t n = a_in.size();
    size_t m = b_in.empty() ? 0 : b_in[0].size();
    a.assign(n, {});
    b.assign(n, {});
    for (size_t i = 0; i < n; ++i) {
        std::vector<Poly> dens;
        auto note = [&](const RatFun& e) {
            if (e.is_poly()) return;
            for (const auto& d : dens)
                if (d == e.den()) return;
            dens.push_back(e.den());
        };
        for (size_t j = 0; j < n; ++j) note(a_in[i][j]);
        for (size_t j = 0; j < m; ++j) note(b_in[i].at(j));
        Poly scale(1L);
        for (const auto& d : dens) scale *= d;
        auto lift = [&](const RatFun& e) {
            return e.num() * exact_divide(scale, e.den(), "row scaling");
        };
        for (size_t j = 0; j < n; ++j) a[i].push_back(lift(a_in[i][j]));
        for (size_t j = 0; j < m; ++j) b[i].push_back(lift(b_in[i][j]));
    }
}

// Solves A X = B exactly by Cramer's rule on the cleared system, with each
// determinant computed fraction-free.  Every entry of X comes out over the
// single denominator det(A), which keeps downstream products small.
inline RatMat bareiss_solve(const RatMat& a_in, const RatMat& b_in) {
    size_t n = a_in.size();
    size_t m = b_in.empty() ? 0 : b_in[0].size();
    std::vector<std::vector<Poly>> a, b;
    clear_rows(a_in, b_in, a, b);

    Poly det = det_bareiss_poly(a);
    if (det.is_zero()) throw singular_matrix_error("restriction matrix is singular");

    RatMat x(n, std::vector<RatFun>(m));
    parallel_for(n * m, [&](size_t idx) {
        size_t var = idx / m, j = idx % m;
        std::vector<std::vector<Poly>> replaced = a;
        for (size_t r = 0; r < n; ++r) replaced[r][var] = b[r][j];
        x[var][j] = RatFun(det_bareiss_poly(std::move(replaced)), det);
    });
    return x;
}

inline Poly det_bareiss(const RatMat& a_in) {
    std::vector<std::vector<Poly>> a, b;
    clear_rows(a_in, {}, a, b);
    return det_bareiss_poly(std::move(a));
}

} // namespace detail

// Assembles the restriction matrix M[p, F] = stab_psi(F)|_p for one chamber.
inline StabMatrix stab_matrix(const Quiver& q, const DimVec& v, const Decomposition& decomposition,
                              const Chamber& chamber, const RestrictionTable& table,
                              const ResultCache* cache = nullptr) {
    StabMatrix out;
    out.chamber = chamber;
    for (const auto& p : table.points) out.point_ids.push_back(p.id);

    size_t nc = table.components.size();
    for (const auto& comp : table.components) {
        DimVec total = dim_zero(q.num_vertices());
        for (const auto& vj : comp) total = dim_add(total, vj);
        if (total != v)
            throw input_error("component dimensions sum to " + dim_print(total) +
                              ", expected v = " + dim_print(v));
    }
    std::vector<RatFun> stabs(nc);
    parallel_for(nc, [&](size_t comp) {
        FixedComponent f = FixedComponent::with_unit_leaves(
            Decomposition{[&] {
                std::vector<std::pair<DimVec, DimVec>> slots;
                for (size_t j = 0; j < decomposition.size(); ++j)
                    slots.emplace_back(table.components[comp][j], decomposition.slots[j].second);
                return slots;
            }()});
        stabs[comp] = stab_psi_cached(q, f, chamber, cache);
    });

    out.entries.assign(table.num_points(), std::vector<RatFun>(nc));
    for (size_t comp = 0; comp < nc; ++comp) {
        out.component_ids.push_back(static_cast<int>(comp));
        for (size_t p = 0; p < table.num_points(); ++p)
            out.entries[p][comp] = restrict_at(stabs[comp], table.points[p]);
    }

    if (detail::det_bareiss(out.entries).is_zero())
        throw singular_matrix_error("stable envelope matrix is singular (wrong table or empty component)");
    return out;
}

// Wall-crossing matrix R = Stab_to^{-1} . Stab_from.
inline RatMat r_matrix(const StabMatrix& from, const StabMatrix& to) {
    if (from.point_ids != to.point_ids)
        throw input_error("R-matrix requires both chambers over the same fixed points");
    return detail::bareiss_solve(to.entries, from.entries);
}

// A matrix of rational functions held over one common denominator, so that
// products stay polynomial until a final comparison.
struct ScaledMat {
    std::vector<std::vector<Poly>> p;
    Poly den{1L};

    static ScaledMat of(const RatMat& m) {
        ScaledMat out;
        std::vector<Poly> dens;
        for (const auto& row : m)
            for (const auto& e : row) {
                if (e.is_poly()) continue;
                bool known = false;
                for (const auto& d : dens)
                    if (d == e.den()) known = true;
                if (!known) dens.push_back(e.den());
            }
        for (const auto& d : dens) out.den *= d;
        out.p.assign(m.size(), {});
        for (size_t i = 0; i < m.size(); ++i)
            for (const auto& e : m[i])
                out.p[i].push_back(e.num() *
                                   exact_divide(out.den, e.den(), "common denominator"));
        return out;
    }

    friend ScaledMat operator*(const ScaledMat& a, const ScaledMat& b) {
        ScaledMat c;
        c.den = a.den * b.den;
        size_t n = a.p.size(), k = b.p.size(), m = k ? b.p[0].size() : 0;
        c.p.assign(n, std::vector<Poly>(m));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < m; ++j) {
                Poly acc;
                for (size_t l = 0; l < k; ++l) acc += a.p[i][l] * b.p[l][j];
                c.p[i][j] = std::move(acc);
            }
        return c;
    }

    bool is_identity() const {
        for (size_t i = 0; i < p.size(); ++i)
            for (size_t j = 0; j < p[i].size(); ++j)
                if (p[i][j] != (i == j ? den : Poly())) return false;
        return true;
    }

    friend bool operator==(const ScaledMat& a, const ScaledMat& b) {
        if (a.p.size() != b.p.size()) return false;
        for (size_t i = 0; i < a.p.size(); ++i) {
            if (a.p[i].size() != b.p[i].size()) return false;
            for (size_t j = 0; j < a.p[i].size(); ++j)
                if (a.p[i][j] * b.den != b.p[i][j] * a.den) return false;
        }
        return true;
    }
};

inline RatMat mat_mul(const RatMat& a, const RatMat& b) {
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    RatMat c(n, std::vector<RatFun>(m));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < m; ++j) {
            RatFun acc;
            for (size_t l = 0; l < k; ++l) acc += a[i][l] * b[l][j];
            c[i][j] = acc;
        }
    return c;
}

inline bool mat_is_identity(const RatMat& a) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j)
            if (a[i][j] != RatFun(rat_of(i == j ? 1 : 0))) return false;
    return true;
}

inline bool mat_equal(const RatMat& a, const RatMat& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size()) return false;
        for (size_t j = 0; j < a[i].size(); ++j)
            if (a[i][j] != b[i][j]) return false;
    }
    return true;
}

// Triangularity: after sorting rows and columns by a maximal-first linear
// extension of the chamber order, every entry above the diagonal vanishes
// and the diagonal carries e(N^-).
inline bool stab_matrix_triangular(const StabMatrix& m, const Quiver& q, const DimVec& v,
                                   const Decomposition& decomposition,
                                   const RestrictionTable& table) {
    size_t n = table.num_points();
    // Linear extension of the chamber order, maximal elements first.
    std::vector<size_t> order;
    std::vector<char> used(n, 0);
    for (size_t step = 0; step < n; ++step) {
        for (size_t x = 0; x < n; ++x) {
            if (used[x]) continue;
            bool maximal = true;
            for (size_t y = 0; y < n && maximal; ++y)
                if (!used[y] && y != x && table.below(x, y) && !table.below(y, x)) maximal = false;
            if (maximal) {
                order.push_back(x);
                used[x] = 1;
                break;
            }
        }
    }
    for (size_t r = 0; r < n; ++r)
        for (size_t c = 0; c < n; ++c) {
            const RatFun& e = m.entries[order[r]][static_cast<size_t>(
                table.points[order[c]].component)];
            if (c > r && !e.is_zero()) return false;
            if (c == r) {
                Poly expected =
                    euler_nminus(q, v, decomposition, table, order[r], m.chamber);
                if (e != RatFun(expected)) return false;
            }
        }
    return true;
}

// --- Yang-Baxter / braid verification ----------------------------------------

struct YbeCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct YbeReport {
    std::vector<YbeCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// For a 3-slot decomposition: assembles all six chamber matrices, checks
// unitarity across every wall, and compares the two braid-word transports.
inline YbeReport check_ybe(const Quiver& q, const DimVec& v, const Decomposition& decomposition,
                           const ResultCache* cache = nullptr) {
    if (decomposition.size() != 3) throw input_error("Yang-Baxter check needs exactly 3 slots");
    YbeReport report;

    auto chamber_of = [](std::vector<int> word) {
        Chamber c;
        c.word = std::move(word);
        return c;
    };
    std::vector<std::vector<int>> words = {{1, 2, 3}, {2, 1, 3}, {2, 3, 1},
                                           {3, 2, 1}, {1, 3, 2}, {3, 1, 2}};
    std::map<std::vector<int>, StabMatrix> mats;
    for (const auto& word : words) {
        Chamber c = chamber_of(word);
        RestrictionTable table = enumerate_fixed_points(q, v, decomposition, c);
        mats.emplace(word, stab_matrix(q, v, decomposition, c, table, cache));
    }

    auto walls = [&](const std::vector<int>& word) {
        std::vector<std::vector<int>> out;
        for (size_t pos = 0; pos + 1 < word.size(); ++pos) {
            std::vector<int> w = word;
            std::swap(w[pos], w[pos + 1]);
            out.push_back(std::move(w));
        }
        return out;
    };

    // Unitarity on every adjacent pair (each unordered pair once).
    std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
    for (const auto& word : words)
        for (const auto& other : walls(word)) {
            auto key = word < other ? std::make_pair(word, other) : std::make_pair(other, word);
            if (!seen.insert(key).second) continue;
            ScaledMat forward = ScaledMat::of(r_matrix(mats.at(word), mats.at(other)));
            ScaledMat backward = ScaledMat::of(r_matrix(mats.at(other), mats.at(word)));
            YbeCheck check;
            check.name = "unitarity " + chamber_of(key.first).canonical_text() + " <-> " +
                         chamber_of(key.second).canonical_text();
            check.pass = (forward * backward).is_identity();
            if (!check.pass) check.detail = "product of wall crossings is not the identity";
            report.checks.push_back(std::move(check));
        }

    // The two reduced-word paths from the identity chamber to its reverse.
    auto transport = [&](const std::vector<std::vector<int>>& path) {
        ScaledMat acc;
        for (size_t step = 0; step + 1 < path.size(); ++step) {
            ScaledMat r = ScaledMat::of(r_matrix(mats.at(path[step]), mats.at(path[step + 1])));
            acc = step == 0 ? r : r * acc;
        }
        return acc;
    };
    ScaledMat braid_a = transport({{1, 2, 3}, {2, 1, 3}, {2, 3, 1}, {3, 2, 1}});
    ScaledMat braid_b = transport({{1, 2, 3}, {1, 3, 2}, {3, 1, 2}, {3, 2, 1}});
    YbeCheck braid;
    braid.name = "braid relation";
    braid.pass = (braid_a == braid_b);
    if (!braid.pass) braid.detail = "the two reduced-word transports differ";
    report.checks.push_back(std::move(braid));

    return report;
}

} // namespace cohall
