#pragma once

#include <stdexcept>
#include <string>

namespace cohall {

// Base class for everything thrown by the library.
struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed user input: unparsable text, bad dimensions, invalid files.
struct input_error : error {
    explicit input_error(const std::string& msg) : error(msg) {}
};

// Division by the zero polynomial, or a denominator annihilated by a
// substitution.
struct division_error : error {
    explicit division_error(const std::string& msg) : error(msg) {}
};

// A symmetrization that should have produced a polynomial did not.  The
// message carries a dump of the offending kernel.
struct polynomiality_error : error {
    explicit polynomiality_error(const std::string& msg) : error(msg) {}
};

// A declared symmetry precondition does not hold.
struct symmetry_error : error {
    explicit symmetry_error(const std::string& msg) : error(msg) {}
};

// Inconsistent fixed-point data: uncancelled zero weights, vanishing
// denominators at a point, a non-antisymmetric order relation.
struct table_error : error {
    explicit table_error(const std::string& msg) : error(msg) {}
};

// A quiver outside the built-in fixed-locus enumeration.
struct table_required_error : input_error {
    explicit table_required_error(const std::string& msg) : input_error(msg) {}
};

// Singular restriction matrix.
struct singular_matrix_error : error {
    explicit singular_matrix_error(const std::string& msg) : error(msg) {}
};

} // namespace cohall
