#pragma once

#include <numeric>
#include <vector>

#include "cohall/dimvec.hpp"
#include "cohall/parallel.hpp"
#include "cohall/ratfun.hpp"

namespace cohall {

// Per-vertex split of each Chern-root block into a degree-0 prefix and a
// degree-1 suffix.
struct BlockSplit {
    DimVec first;  // sizes of the degree-0 sub-blocks
    DimVec second; // sizes of the degree-1 sub-blocks

    DimVec total() const { return dim_add(first, second); }
};

namespace detail {

// One summand of the shuffle: for each vertex, old index -> new index
// (1-based).
using VertexPerm = std::vector<int>;

inline Symbol apply_perms(const std::vector<VertexPerm>& perms, const Symbol& s) {
    if (s.kind != SymKind::Chern) return s;
    const VertexPerm& p = perms[static_cast<size_t>(s.vertex)];
    return Symbol::chern(s.vertex, p[static_cast<size_t>(s.index - 1)]);
}

// Minimal coset representatives of (S_k x S_{n-k}) \ S_n, enumerated as
// sorted merges: choose the positions of the first sub-block.
inline std::vector<VertexPerm> vertex_shuffles(int k, int n) {
    std::vector<VertexPerm> out;
    std::vector<int> pick(static_cast<size_t>(k));
    std::iota(pick.begin(), pick.end(), 1);
    auto emit = [&] {
        VertexPerm perm(static_cast<size_t>(n));
        std::vector<char> used(static_cast<size_t>(n + 1), 0);
        for (int j = 0; j < k; ++j) {
            perm[static_cast<size_t>(j)] = pick[static_cast<size_t>(j)];
            used[static_cast<size_t>(pick[static_cast<size_t>(j)])] = 1;
        }
        int slot = k;
        for (int x = 1; x <= n; ++x)
            if (!used[static_cast<size_t>(x)]) perm[static_cast<size_t>(slot++)] = x;
        out.push_back(std::move(perm));
    };
    if (k == 0 || k == n) {
        VertexPerm id(static_cast<size_t>(n));
        std::iota(id.begin(), id.end(), 1);
        out.push_back(std::move(id));
        return out;
    }
    while (true) {
        emit();
        int i = k - 1;
        while (i >= 0 && pick[static_cast<size_t>(i)] == n - (k - 1 - i)) --i;
        if (i < 0) break;
        ++pick[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
}

inline void check_subblock_symmetry(const RatFun& f, const BlockSplit& split) {
    for (size_t i = 0; i < split.first.size(); ++i) {
        int v1 = split.first[i], n = v1 + split.second[i];
        auto check_swap = [&](int alpha) {
            Symbol x = Symbol::chern(static_cast<int>(i), alpha);
            Symbol y = Symbol::chern(static_cast<int>(i), alpha + 1);
            RatFun g(f.num().swapped(x, y), f.den().swapped(x, y));
            if (g != f)
                throw symmetry_error("input is not symmetric under " + symbol_print(x) +
                                     " <-> " + symbol_print(y));
        };
        for (int alpha = 1; alpha < v1; ++alpha) check_swap(alpha);
        for (int alpha = v1 + 1; alpha < n; ++alpha) check_swap(alpha);
    }
}

} // namespace detail

// Number of summands of the shuffle sum: prod_i binom(v_i, v1_i).
inline long shuffle_term_count(const BlockSplit& split) {
    long count = 1;
    for (size_t i = 0; i < split.first.size(); ++i) {
        long n = split.first[i] + split.second[i], k = split.first[i], b = 1;
        for (long j = 0; j < k; ++j) b = b * (n - j) / (j + 1);
        count *= b;
    }
    return count;
}

// Sum of sigma . f over the minimal coset representatives of
// prod_i (S_{v1_i} x S_{v2_i}) \ S_{v_i}.  The result may be a genuine
// rational function; see shuffle_symmetrize for the polynomial form.
inline RatFun shuffle_symmetrize_rat(const RatFun& f, const BlockSplit& split) {
    if (split.first.size() != split.second.size())
        throw input_error("block split sizes disagree");
    detail::check_subblock_symmetry(f, split);

    std::vector<std::vector<detail::VertexPerm>> per_vertex;
    per_vertex.reserve(split.first.size());
    for (size_t i = 0; i < split.first.size(); ++i)
        per_vertex.push_back(
            detail::vertex_shuffles(split.first[i], split.first[i] + split.second[i]));

    // Cartesian product over vertices, in a fixed lexicographic order.
    size_t total = 1;
    for (const auto& vs : per_vertex) total *= vs.size();

    std::vector<RatFun> terms(total);
    parallel_for(total, [&](size_t idx) {
        std::vector<detail::VertexPerm> combo;
        combo.reserve(per_vertex.size());
        size_t rest = idx;
        for (const auto& vs : per_vertex) {
            combo.push_back(vs[rest % vs.size()]);
            rest /= vs.size();
        }
        terms[idx] = f.rename([&](const Symbol& s) { return detail::apply_perms(combo, s); });
    });

    RatFun sum;
    for (const auto& t : terms) sum += t;
    return sum;
}

// The shuffle sum with the polynomiality assertion: denominators must
// cancel.  Failure aborts with a dump of the offending kernel.
inline Poly shuffle_symmetrize(const RatFun& f, const BlockSplit& split) {
    RatFun sum = shuffle_symmetrize_rat(f, split);
    if (!sum.is_poly())
        throw polynomiality_error(
            "shuffle symmetrization of the kernel did not cancel denominators\n  kernel: " +
            f.print() + "\n  sum:    " + sum.print());
    return sum.num();
}

// Pushforward along the full flag fibration:
//   f  ->  sum_{sigma in prod_i S_{v_i}} sigma . ( f / prod_i prod_{a<b} (s_{i,a} - s_{i,b}) ).
// Computed as a single exact division of the antisymmetrization by the
// Vandermonde product, which is the same sum term by term.
inline Poly flag_pushforward(const Poly& f, const DimVec& block_sizes) {
    // Antisymmetrize over each vertex block via adjacent transpositions:
    // fold one vertex at a time, antisymmetrizing recursively.
    Poly anti = f;
    for (size_t i = 0; i < block_sizes.size(); ++i) {
        int n = block_sizes[i];
        if (n < 2) continue;
        // Sum over S_n with signs, generated by left cosets of S_{n-1}.
        Poly acc;
        std::vector<int> perm(static_cast<size_t>(n));
        std::iota(perm.begin(), perm.end(), 1);
        // Heap-free: enumerate all permutations in lexicographic order,
        // tracking parity by inversion count.
        do {
            int inversions = 0;
            for (int x = 0; x < n; ++x)
                for (int y = x + 1; y < n; ++y)
                    if (perm[static_cast<size_t>(x)] > perm[static_cast<size_t>(y)]) ++inversions;
            Poly image = anti.rename([&](const Symbol& s) {
                if (s.kind != SymKind::Chern || s.vertex != static_cast<int>(i)) return s;
                return Symbol::chern(s.vertex, perm[static_cast<size_t>(s.index - 1)]);
            });
            if (inversions % 2) acc -= image;
            else acc += image;
        } while (std::next_permutation(perm.begin(), perm.end()));
        anti = std::move(acc);
    }

    Poly vandermonde(1L);
    for (size_t i = 0; i < block_sizes.size(); ++i)
        for (int a = 1; a <= block_sizes[i]; ++a)
            for (int b = a + 1; b <= block_sizes[i]; ++b)
                vandermonde *= Poly::var(Symbol::chern(static_cast<int>(i), a)) -
                               Poly::var(Symbol::chern(static_cast<int>(i), b));

    if (anti.is_zero()) return Poly();
    return exact_divide(anti, vandermonde, "flag pushforward");
}

// Shuffle sum of numerator / e(g_v[-1]) over a split, for a sub-block
// symmetric polynomial numerator.  Uses the factorization of the block
// Vandermonde V = V1 V2 e(g[-1]) to rewrite the coset sum as a full Weyl
// sum:
//   sum_{shuffles} sigma(N / e(g[-1]))
//     = flag_pushforward(N * prod_i V1_i V2_i) / prod_i (v1_i! v2_i!),
// which stays polynomial at every step.
inline Poly shuffle_over_gauge(const Poly& numerator, const BlockSplit& split) {
    Poly lifted = numerator;
    Rat scale = rat_of(1);
    DimVec total(split.first.size());
    for (size_t i = 0; i < split.first.size(); ++i) {
        int v1 = split.first[i], v2 = split.second[i];
        total[i] = v1 + v2;
        auto vandermonde = [&](int lo, int hi) {
            Poly v(1L);
            for (int a = lo; a <= hi; ++a)
                for (int b = a + 1; b <= hi; ++b)
                    v *= Poly::var(Symbol::chern(static_cast<int>(i), a)) -
                         Poly::var(Symbol::chern(static_cast<int>(i), b));
            return v;
        };
        lifted *= vandermonde(1, v1) * vandermonde(v1 + 1, v1 + v2);
        for (int x = 2; x <= v1; ++x) scale *= x;
        for (int x = 2; x <= v2; ++x) scale *= x;
    }
    Poly pushed = flag_pushforward(lifted, total);
    return pushed.scale(1 / scale);
}

// True when p is invariant under all permutations within each vertex block
// s(i,1..sizes[i]).
inline bool is_block_symmetric(const Poly& p, const DimVec& block_sizes) {
    for (size_t i = 0; i < block_sizes.size(); ++i)
        for (int alpha = 1; alpha < block_sizes[i]; ++alpha) {
            Symbol x = Symbol::chern(static_cast<int>(i), alpha);
            Symbol y = Symbol::chern(static_cast<int>(i), alpha + 1);
            if (p.swapped(x, y) != p) return false;
        }
    return true;
}

} // namespace cohall
