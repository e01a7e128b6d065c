#pragma once

#include <gmpxx.h>

#include <string>

#include "cohall/errors.hpp"

namespace cohall {

// Exact arbitrary-precision rational coefficients.
using Rat = mpq_class;

inline Rat rat_of(long n, long d = 1) {
    Rat q(n, d);
    q.canonicalize();
    return q;
}

// Parses "p" or "p/q" with optional leading sign.
inline Rat rat_parse(const std::string& text) {
    if (text.empty()) throw input_error("empty rational literal");
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw input_error("bad rational literal: '" + text + "'");
    if (q.get_den() == 0)
        throw input_error("zero denominator in rational literal: '" + text + "'");
    q.canonicalize();
    return q;
}

inline std::string rat_print(const Rat& q) { return q.get_str(); }

} // namespace cohall
