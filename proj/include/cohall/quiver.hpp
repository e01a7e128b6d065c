#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cohall/dimvec.hpp"
#include "cohall/errors.hpp"

namespace cohall {

// A finite quiver: ordered vertices, arrows as (tail, head) vertex
// positions.  Loops and multi-edges are allowed.  The vertex order is fixed
// at construction and drives the symbol order.
struct Quiver {
    std::vector<std::string> vertex_ids;
    std::vector<std::pair<int, int>> arrows; // 0-based (tail, head)

    Quiver() = default;
    Quiver(std::vector<std::string> ids, std::vector<std::pair<int, int>> arr)
        : vertex_ids(std::move(ids)), arrows(std::move(arr)) {
        for (const auto& [t, h] : arrows)
            if (t < 0 || h < 0 || t >= static_cast<int>(vertex_ids.size()) ||
                h >= static_cast<int>(vertex_ids.size()))
                throw input_error("arrow endpoint outside the vertex set");
    }

    size_t num_vertices() const { return vertex_ids.size(); }

    void check_dims(const DimVec& d, const char* what) const {
        if (d.size() != vertex_ids.size())
            throw input_error(std::string(what) + ": expected " +
                              std::to_string(vertex_ids.size()) + " entries, got " +
                              std::to_string(d.size()));
        dim_check_nonneg(d, what);
    }

    // Stable textual form, used for hashing and cache keys.
    std::string canonical_text() const {
        std::string s = "quiver{v=[";
        for (size_t i = 0; i < vertex_ids.size(); ++i) {
            if (i) s += ",";
            s += vertex_ids[i];
        }
        s += "],e=[";
        for (size_t i = 0; i < arrows.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(arrows[i].first) + ">" + std::to_string(arrows[i].second);
        }
        s += "]}";
        return s;
    }
};

inline Quiver quiver_one_vertex_no_arrows() { return Quiver({"1"}, {}); }
inline Quiver quiver_jordan() { return Quiver({"1"}, {{0, 0}}); }

} // namespace cohall
