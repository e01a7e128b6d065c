#pragma once

#include <cstdint>
#include <string>
#include <tuple>

#include "cohall/errors.hpp"

namespace cohall {

// The three families of equivariant parameters:
//   a(i,k)  framing torus parameters      (kind Framing)
//   s(i,j)  Chern roots of the gauge group (kind Chern)
//   h       weight rescaling the symplectic form
enum class SymKind : std::uint8_t { Framing = 0, Chern = 1, Hbar = 2 };

struct Symbol {
    SymKind kind = SymKind::Hbar;
    std::int32_t vertex = -1; // 0-based vertex position; -1 for h
    std::int32_t index = 0;   // 1-based index within the vertex block; 0 for h

    static Symbol framing(int vertex, int index) { return {SymKind::Framing, vertex, index}; }
    static Symbol chern(int vertex, int index) { return {SymKind::Chern, vertex, index}; }
    static Symbol hbar() { return {SymKind::Hbar, -1, 0}; }

    friend bool operator==(const Symbol& a, const Symbol& b) {
        return a.kind == b.kind && a.vertex == b.vertex && a.index == b.index;
    }
    friend bool operator!=(const Symbol& a, const Symbol& b) { return !(a == b); }
};

// Canonical symbol order: framing < chern < hbar, then vertex, then index.
// This is the order of the declared symbol universe.
inline bool canonical_less(const Symbol& a, const Symbol& b) {
    return std::tuple(static_cast<int>(a.kind), a.vertex, a.index)
         < std::tuple(static_cast<int>(b.kind), b.vertex, b.index);
}

// Significance order used by the monomial comparison: Chern roots weigh
// most, then framing parameters, then h.  Pinned by the canonical text
// format ("s(1,1) - a(1,2) + h").
inline int sig_class(SymKind k) {
    switch (k) {
    case SymKind::Chern: return 0;
    case SymKind::Framing: return 1;
    default: return 2;
    }
}

inline bool sig_less(const Symbol& a, const Symbol& b) {
    return std::tuple(sig_class(a.kind), a.vertex, a.index)
         < std::tuple(sig_class(b.kind), b.vertex, b.index);
}

inline std::string symbol_print(const Symbol& s) {
    switch (s.kind) {
    case SymKind::Framing:
        return "a(" + std::to_string(s.vertex + 1) + "," + std::to_string(s.index) + ")";
    case SymKind::Chern:
        return "s(" + std::to_string(s.vertex + 1) + "," + std::to_string(s.index) + ")";
    default:
        return "h";
    }
}

} // namespace cohall
