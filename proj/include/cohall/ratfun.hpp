#pragma once

#include <string>

#include "cohall/poly.hpp"
#include "cohall/textio.hpp"

namespace cohall {

// Quotient of two polynomials.  Kept reduced only by exact division and a
// scalar normalization (the denominator is monic in the canonical order);
// no polynomial gcd is attempted.  Equality is decided by cross
// multiplication, never by evaluation.
class RatFun {
public:
    RatFun() : num_(), den_(1L) {}
    RatFun(const Rat& c) : num_(c), den_(1L) {}          // NOLINT(google-explicit-constructor)
    RatFun(const Poly& p) : num_(p), den_(1L) {}         // NOLINT(google-explicit-constructor)
    RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.is_one(); }

    const Poly& as_poly(const char* what = "rational function") const {
        if (!is_poly())
            throw polynomiality_error(std::string(what) + " is not a polynomial: " + print());
        return num_;
    }

    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        if (a.den_ == b.den_) return RatFun(a.num_ + b.num_, a.den_);
        return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) {
        if (a.den_ == b.den_) return RatFun(a.num_ - b.num_, a.den_);
        return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        return RatFun(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFun operator/(const RatFun& a, const RatFun& b) {
        if (b.num_.is_zero()) throw division_error("division by the zero polynomial");
        return RatFun(a.num_ * b.den_, a.den_ * b.num_);
    }

    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

    RatFun operator-() const {
        RatFun r = *this;
        r.num_ = -r.num_;
        return r;
    }

    // Cross-multiplication equality.
    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ * b.den_ == b.num_ * a.den_;
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    RatFun substitute(const std::function<const Poly*(const Symbol&)>& assignment) const {
        Poly n = num_.substitute(assignment);
        Poly d = den_.substitute(assignment);
        if (d.is_zero()) throw division_error("denominator annihilated by substitution");
        return RatFun(std::move(n), std::move(d));
    }

    RatFun rename(const std::function<Symbol(const Symbol&)>& f) const {
        RatFun r;
        r.num_ = num_.rename(f);
        r.den_ = den_.rename(f);
        return r;
    }

    RatFun flip_h() const {
        RatFun r;
        r.num_ = num_.flip_h();
        r.den_ = den_.flip_h();
        r.normalize();
        return r;
    }

    std::string print() const {
        if (is_poly()) return poly_print(num_);
        return "(" + poly_print(num_) + ")/(" + poly_print(den_) + ")";
    }

private:
    void normalize() {
        if (den_.is_zero()) throw division_error("denominator is the zero polynomial");
        if (num_.is_zero()) {
            den_ = Poly(1L);
            return;
        }
        if (auto q = try_divide(num_, den_)) {
            num_ = std::move(*q);
            den_ = Poly(1L);
            return;
        }
        if (auto q = try_divide(den_, num_)) {
            num_ = Poly(1L);
            den_ = std::move(*q);
        }
        Rat lead = den_.leading().second;
        if (lead != 1) {
            Rat inv = 1 / lead;
            num_.scale(inv);
            den_.scale(inv);
        }
    }

    Poly num_, den_;
};

inline std::string ratfun_print(const RatFun& f) { return f.print(); }

// Parses either a plain polynomial or the "(num)/(den)" form emitted by
// ratfun_print.
inline RatFun ratfun_parse(const std::string& text) {
    // Look for a '/' separating two top-level parenthesized groups.
    int depth = 0;
    for (size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '(')
            ++depth;
        else if (c == ')')
            --depth;
        else if (c == '/' && depth == 0) {
            // Not part of a rational coefficient only if both sides parse as
            // parenthesized polynomials.
            size_t l = i;
            while (l > 0 && std::isspace(static_cast<unsigned char>(text[l - 1]))) --l;
            if (l > 0 && text[l - 1] == ')') {
                Poly num = poly_parse(text.substr(0, l));
                Poly den = poly_parse(text.substr(i + 1));
                return RatFun(num, den);
            }
        }
    }
    return RatFun(poly_parse(text));
}

} // namespace cohall
