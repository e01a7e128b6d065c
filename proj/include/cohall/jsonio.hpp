#pragma once

#include <fstream>

#include <json.hpp>

#include "cohall/rmatrix.hpp"

namespace cohall {

using nlohmann::json;

// Quiver spec file: {"vertices": [...], "arrows": [[tail, head], ...]}
// with arrows referring to vertex ids.
inline Quiver quiver_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
        throw input_error("quiver file needs a \"vertices\" array");
    std::vector<std::string> ids;
    for (const auto& v : j["vertices"])
        ids.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    auto index_of = [&](const json& v) {
        std::string id = v.is_string() ? v.get<std::string>() : v.dump();
        for (size_t i = 0; i < ids.size(); ++i)
            if (ids[i] == id) return static_cast<int>(i);
        throw input_error("arrow endpoint '" + id + "' is not a vertex");
    };
    std::vector<std::pair<int, int>> arrows;
    if (j.contains("arrows")) {
        if (!j["arrows"].is_array()) throw input_error("\"arrows\" must be an array of pairs");
        for (const auto& a : j["arrows"]) {
            if (!a.is_array() || a.size() != 2)
                throw input_error("each arrow must be a [tail, head] pair");
            arrows.emplace_back(index_of(a[0]), index_of(a[1]));
        }
    }
    return Quiver(std::move(ids), std::move(arrows));
}

inline Quiver quiver_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open quiver file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw input_error("quiver file " + path + ": " + e.what());
    }
    return quiver_from_json(j);
}

// Restriction-table file:
//   {"points": [{"id": "...", "assign": {"s(1,1)": "a(1,2)+h", ...},
//                "component": j}, ...],
//    "order": [[idLow, idHigh], ...],
//    "components": [{"id": j, "slots": [[v...], ...]}, ...]}
// The order is given on point ids (low before high) and is closed
// transitively here.  The components section carries the slot-wise gauge
// dimensions needed to recompute stable envelopes; it may be omitted when
// only restrictions are wanted.
inline RestrictionTable table_from_json(const json& j, const Quiver& q) {
    if (!j.is_object() || !j.contains("points") || !j["points"].is_array())
        throw input_error("restriction table needs a \"points\" array");
    RestrictionTable table;
    for (const auto& pj : j["points"]) {
        FixedPoint p;
        if (!pj.contains("id")) throw input_error("every point needs an \"id\"");
        p.id = pj["id"].is_string() ? pj["id"].get<std::string>() : pj["id"].dump();
        if (pj.contains("component")) p.component = pj["component"].get<int>();
        if (!pj.contains("assign") || !pj["assign"].is_object())
            throw input_error("point " + p.id + " needs an \"assign\" object");
        for (const auto& [key, val] : pj["assign"].items()) {
            Poly sym_poly = poly_parse(key);
            if (sym_poly.terms().size() != 1 || sym_poly.leading().first.degree() != 1 ||
                sym_poly.leading().second != 1)
                throw input_error("assignment key is not a single symbol: " + key);
            Symbol s = sym_poly.leading().first.factors[0].first;
            if (s.kind != SymKind::Chern)
                throw input_error("assignment key is not a Chern root: " + key);
            Weight w = weight_from_poly(poly_parse(val.get<std::string>()));
            for (const auto& [ws, c] : w.terms)
                if (ws.kind == SymKind::Chern)
                    throw input_error("assigned weight may only use framing symbols and h: " +
                                      val.get<std::string>());
            p.assign.emplace_back(s, std::move(w));
        }
        table.points.push_back(std::move(p));
    }

    size_t n = table.points.size();
    auto point_index = [&](const std::string& id) {
        for (size_t i = 0; i < n; ++i)
            if (table.points[i].id == id) return i;
        throw input_error("order mentions unknown point id '" + id + "'");
    };
    table.leq.assign(n, std::vector<char>(n, 0));
    for (size_t i = 0; i < n; ++i) table.leq[i][i] = 1;
    if (j.contains("order")) {
        for (const auto& rel : j["order"]) {
            if (!rel.is_array() || rel.size() != 2)
                throw input_error("each order relation must be a [low, high] pair");
            std::string lo = rel[0].is_string() ? rel[0].get<std::string>() : rel[0].dump();
            std::string hi = rel[1].is_string() ? rel[1].get<std::string>() : rel[1].dump();
            table.leq[point_index(lo)][point_index(hi)] = 1;
        }
    }
    // Transitive closure.
    for (size_t k = 0; k < n; ++k)
        for (size_t x = 0; x < n; ++x)
            if (table.leq[x][k])
                for (size_t y = 0; y < n; ++y)
                    if (table.leq[k][y]) table.leq[x][y] = 1;
    table.check_order();

    if (j.contains("components")) {
        std::map<int, std::vector<DimVec>> comp;
        for (const auto& cj : j["components"]) {
            std::vector<DimVec> slots;
            for (const auto& sj : cj["slots"]) {
                DimVec v = sj.get<DimVec>();
                q.check_dims(v, "component slot dimension");
                slots.push_back(std::move(v));
            }
            comp[cj["id"].get<int>()] = std::move(slots);
        }
        for (const auto& [id, slots] : comp) {
            if (id != static_cast<int>(table.components.size()))
                throw input_error("component ids must be 0,1,2,... without gaps");
            table.components.push_back(slots);
        }
    }
    for (const auto& p : table.points)
        if (p.component >= static_cast<int>(table.components.size()) && !table.components.empty())
            throw input_error("point " + p.id + " refers to an undeclared component");
    return table;
}

inline RestrictionTable table_from_file(const std::string& path, const Quiver& q) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open restriction table: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw input_error("restriction table " + path + ": " + e.what());
    }
    return table_from_json(j, q);
}

// --- report serialization ---------------------------------------------------

inline json axiom_report_json(const AxiomReport& report) {
    json checks = json::array();
    for (const auto& c : report.checks) {
        json e{{"component", c.component}, {"point", c.point_id}, {"kind", c.kind},
               {"pass", c.pass}};
        if (!c.detail.empty()) e["detail"] = c.detail;
        checks.push_back(std::move(e));
    }
    return json{{"pass", report.all_pass()}, {"checks", std::move(checks)}};
}

inline json ybe_report_json(const YbeReport& report) {
    json checks = json::array();
    for (const auto& c : report.checks) {
        json e{{"name", c.name}, {"pass", c.pass}};
        if (!c.detail.empty()) e["detail"] = c.detail;
        checks.push_back(std::move(e));
    }
    return json{{"pass", report.all_pass()}, {"checks", std::move(checks)}};
}

inline json matrix_json(const StabMatrix& m) {
    json rows = json::array();
    for (const auto& row : m.entries) {
        json r = json::array();
        for (const auto& e : row) r.push_back(ratfun_print(e));
        rows.push_back(std::move(r));
    }
    return json{{"points", m.point_ids}, {"components", m.component_ids},
                {"chamber", m.chamber.word}, {"entries", std::move(rows)}};
}

inline json ratmat_json(const RatMat& m) {
    json rows = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& e : row) r.push_back(ratfun_print(e));
        rows.push_back(std::move(r));
    }
    return rows;
}

} // namespace cohall
