#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cohall/errors.hpp"
#include "cohall/rational.hpp"
#include "cohall/symbol.hpp"

namespace cohall {

// A monomial is a sparse exponent vector: (symbol, exponent) pairs sorted by
// the significance order, exponents strictly positive.
struct Monomial {
    std::vector<std::pair<Symbol, int>> factors;

    int degree() const {
        int d = 0;
        for (const auto& [sym, e] : factors) d += e;
        return d;
    }

    int degree_of_kind(SymKind k) const {
        int d = 0;
        for (const auto& [sym, e] : factors)
            if (sym.kind == k) d += e;
        return d;
    }

    int exponent(const Symbol& s) const {
        for (const auto& [sym, e] : factors)
            if (sym == s) return e;
        return 0;
    }

    bool empty() const { return factors.empty(); }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors == b.factors; }
};

// Graded-lex comparison: total degree first, ties broken on the exponent of
// the most significant symbol where the monomials differ.
// Returns +1 if a > b, 0 if equal, -1 if a < b.
inline int mono_compare(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db ? 1 : -1;
    auto ia = a.factors.begin(), ib = b.factors.begin();
    while (ia != a.factors.end() || ib != b.factors.end()) {
        if (ib == b.factors.end()) return 1;
        if (ia == a.factors.end()) return -1;
        if (sig_less(ia->first, ib->first)) return 1;   // a has the earlier symbol
        if (sig_less(ib->first, ia->first)) return -1;
        if (ia->second != ib->second) return ia->second > ib->second ? 1 : -1;
        ++ia;
        ++ib;
    }
    return 0;
}

// Largest monomial first, so map iteration yields the canonical term order.
struct MonoGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return mono_compare(a, b) > 0; }
};

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
    Monomial r;
    r.factors.reserve(a.factors.size() + b.factors.size());
    auto ia = a.factors.begin(), ib = b.factors.begin();
    while (ia != a.factors.end() && ib != b.factors.end()) {
        if (sig_less(ia->first, ib->first))
            r.factors.push_back(*ia++);
        else if (sig_less(ib->first, ia->first))
            r.factors.push_back(*ib++);
        else {
            r.factors.emplace_back(ia->first, ia->second + ib->second);
            ++ia;
            ++ib;
        }
    }
    r.factors.insert(r.factors.end(), ia, a.factors.end());
    r.factors.insert(r.factors.end(), ib, b.factors.end());
    return r;
}

// a / b if b divides a exponentwise.
inline std::optional<Monomial> mono_div(const Monomial& a, const Monomial& b) {
    Monomial r;
    auto ia = a.factors.begin();
    for (const auto& [sym, eb] : b.factors) {
        while (ia != a.factors.end() && sig_less(ia->first, sym)) r.factors.push_back(*ia++);
        if (ia == a.factors.end() || ia->first != sym || ia->second < eb) return std::nullopt;
        if (ia->second > eb) r.factors.emplace_back(sym, ia->second - eb);
        ++ia;
    }
    r.factors.insert(r.factors.end(), ia, a.factors.end());
    return r;
}

// Exact multivariate polynomial over Rat.  Terms are kept in canonical
// order; zero coefficients are never stored.
class Poly {
public:
    using TermMap = std::map<Monomial, Rat, MonoGreater>;

    Poly() = default;
    explicit Poly(const Rat& c) {
        if (c != 0) terms_[Monomial{}] = c;
    }
    explicit Poly(long c) : Poly(rat_of(c)) {}

    static Poly var(const Symbol& s, int exp = 1) {
        Poly p;
        if (exp < 0) throw error("negative exponent in Poly::var");
        if (exp == 0) return Poly(1L);
        Monomial m;
        m.factors.emplace_back(s, exp);
        p.terms_[m] = rat_of(1);
        return p;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }

    Rat constant_value() const {
        if (terms_.empty()) return rat_of(0);
        if (!is_constant()) throw error("constant_value on non-constant polynomial");
        return terms_.begin()->second;
    }

    bool is_one() const { return is_constant() && constant_value() == 1; }

    // Leading term in the canonical order.
    const std::pair<const Monomial, Rat>& leading() const {
        if (terms_.empty()) throw error("leading term of zero polynomial");
        return *terms_.begin();
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    int degree_of_kind(SymKind k) const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree_of_kind(k));
        return d;
    }

    void add_term(const Monomial& m, const Rat& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Poly& operator+=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    Poly operator-() const {
        Poly r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        Poly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(mono_mul(ma, mb), ca * cb);
        return r;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly& scale(const Rat& c) {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [m, k] : terms_) k *= c;
        return *this;
    }

    friend Poly operator*(const Rat& c, Poly p) { return p.scale(c); }

    Poly pow(int e) const {
        if (e < 0) throw error("negative power of a polynomial");
        Poly r(1L), base = *this;
        while (e > 0) {
            if (e & 1) r *= base;
            base = (e >>= 1) ? base * base : base;
        }
        return r;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Deterministic total order (used for canonical container keys).
    friend bool operator<(const Poly& a, const Poly& b) {
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        while (ia != a.terms_.end() && ib != b.terms_.end()) {
            int c = mono_compare(ia->first, ib->first);
            if (c != 0) return c < 0;
            if (ia->second != ib->second) return ia->second < ib->second;
            ++ia;
            ++ib;
        }
        return ib != b.terms_.end();
    }

    // Applies a symbol renaming.  The map must be injective on the symbols
    // that actually occur.
    Poly rename(const std::function<Symbol(const Symbol&)>& f) const {
        Poly r;
        for (const auto& [m, c] : terms_) {
            Monomial nm;
            nm.factors.reserve(m.factors.size());
            for (const auto& [sym, e] : m.factors) nm.factors.emplace_back(f(sym), e);
            std::sort(nm.factors.begin(), nm.factors.end(),
                      [](const auto& x, const auto& y) { return sig_less(x.first, y.first); });
            for (size_t i = 1; i < nm.factors.size(); ++i)
                if (nm.factors[i - 1].first == nm.factors[i].first)
                    throw error("non-injective symbol renaming");
            r.add_term(nm, c);
        }
        return r;
    }

    // Swap two symbols (a transposition of variables).
    Poly swapped(const Symbol& x, const Symbol& y) const {
        return rename([&](const Symbol& s) { return s == x ? y : (s == y ? x : s); });
    }

    // Simultaneous substitution of symbols by polynomials.  Substituted
    // values must not mention substituted symbols.
    Poly substitute(const std::function<const Poly*(const Symbol&)>& assignment) const {
        Poly r;
        for (const auto& [m, c] : terms_) {
            Poly term(c);
            Monomial untouched;
            for (const auto& [sym, e] : m.factors) {
                if (const Poly* image = assignment(sym))
                    term *= image->pow(e);
                else
                    untouched.factors.emplace_back(sym, e);
            }
            Poly shell;
            shell.add_term(untouched, rat_of(1));
            r += term * shell;
        }
        return r;
    }

    // The ring automorphism h -> -h.
    Poly flip_h() const {
        Poly r;
        for (const auto& [m, c] : terms_) {
            int eh = 0;
            for (const auto& [sym, e] : m.factors)
                if (sym.kind == SymKind::Hbar) eh = e;
            r.add_term(m, (eh % 2) ? -c : c);
        }
        return r;
    }

    std::vector<Symbol> symbols() const {
        std::vector<Symbol> out;
        for (const auto& [m, c] : terms_)
            for (const auto& [sym, e] : m.factors) out.push_back(sym);
        std::sort(out.begin(), out.end(), canonical_less);
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

private:
    TermMap terms_;
};

// Exact division: returns a/b when b divides a, nullopt otherwise.
inline std::optional<Poly> try_divide(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw division_error("division by the zero polynomial");
    Poly rem = a, quot;
    const auto& [lmb, lcb] = b.leading();
    while (!rem.is_zero()) {
        const auto& [lmr, lcr] = rem.leading();
        auto q = mono_div(lmr, lmb);
        if (!q) return std::nullopt;
        Poly t;
        t.add_term(*q, lcr / lcb);
        rem -= t * b;
        quot += t;
    }
    return quot;
}

inline Poly exact_divide(const Poly& a, const Poly& b, const char* what = "exact division") {
    auto q = try_divide(a, b);
    if (!q) throw polynomiality_error(std::string(what) + ": remainder is nonzero");
    return *q;
}

} // namespace cohall
