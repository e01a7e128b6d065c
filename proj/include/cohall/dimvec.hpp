#pragma once

#include <string>
#include <vector>

#include "cohall/errors.hpp"

namespace cohall {

// Per-vertex nonnegative integers (dimension and framing vectors).
using DimVec = std::vector<int>;

inline DimVec dim_add(const DimVec& a, const DimVec& b) {
    if (a.size() != b.size()) throw input_error("dimension vectors of different length");
    DimVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline DimVec dim_zero(size_t n) { return DimVec(n, 0); }

inline bool dim_is_zero(const DimVec& v) {
    for (int x : v)
        if (x != 0) return false;
    return true;
}

inline void dim_check_nonneg(const DimVec& v, const char* what) {
    for (int x : v)
        if (x < 0) throw input_error(std::string(what) + ": negative entry");
}

inline std::string dim_print(const DimVec& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s;
}

} // namespace cohall
