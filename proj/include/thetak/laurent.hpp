#pragma once

#include <array>
#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "thetak/rational.hpp"

namespace thetak {

/// Sparse Laurent polynomial over Q in one variable w.
///
/// Invariants: no zero coefficients are stored, so equality of the
/// coefficient maps is equality in the ring.
class Laurent {
public:
    using Terms = std::map<long, Rational>;

    Laurent() = default;

    static Laurent zero() { return {}; }
    static Laurent one() { return constant(Rational(1)); }
    static Laurent w() { return monomial(1, Rational(1)); }

    static Laurent constant(const Rational& c) { return monomial(0, c); }

    static Laurent monomial(long exp, const Rational& c) {
        Laurent f;
        if (c != 0) f.terms_[exp] = c;
        return f;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coeff(long exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    long min_exp() const {
        if (is_zero()) throw std::domain_error("min_exp of zero");
        return terms_.begin()->first;
    }
    long max_exp() const {
        if (is_zero()) throw std::domain_error("max_exp of zero");
        return terms_.rbegin()->first;
    }

    void add_term(long exp, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(exp);
        if (it == terms_.end()) {
            terms_.emplace(exp, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend Laurent operator+(const Laurent& a, const Laurent& b) {
        Laurent r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }
    friend Laurent operator-(const Laurent& a, const Laurent& b) {
        Laurent r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }
    friend Laurent operator-(const Laurent& a) {
        Laurent r;
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, -c);
        return r;
    }
    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent r;
        for (const auto& [e1, c1] : a.terms_)
            for (const auto& [e2, c2] : b.terms_) r.add_term(e1 + e2, c1 * c2);
        return r;
    }
    friend Laurent operator*(const Rational& s, const Laurent& a) {
        Laurent r;
        if (s == 0) return r;
        for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, s * c);
        return r;
    }
    friend Laurent operator/(const Laurent& a, const Rational& s) {
        if (s == 0) throw std::domain_error("division by zero");
        return Rational(1) / s * a;
    }
    friend bool operator==(const Laurent& a, const Laurent& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

    Laurent pow(unsigned long e) const {
        Laurent base = *this, r = one();
        while (e > 0) {
            if (e & 1ul) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    /// Exact evaluation at a rational point; negative exponents need a != 0.
    Rational eval(const Rational& a) const {
        if (a == 0 && !is_zero() && min_exp() < 0)
            throw std::domain_error("eval: negative exponent at 0");
        // Horner over the gap structure, ascending in the exponent
        Rational r(0);
        long prev = 0;
        bool started = false;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (started) r = r * rat_pow(a, prev - it->first);
            r += it->second;
            prev = it->first;
            started = true;
        }
        if (started) r = r * rat_pow(a, prev);
        return r;
    }

    /// f(s*w): scales the argument.  adams(f, a) is scale_arg(1/a).
    Laurent scale_arg(const Rational& s) const {
        Laurent r;
        for (const auto& [e, c] : terms_) r.add_term(e, c * rat_pow(s, e));
        return r;
    }

    /// f(w^k) for k != 0 (k may be negative; k = -1 is the antipode).
    Laurent subst_power(long k) const {
        if (k == 0) throw std::domain_error("subst_power: k must be nonzero");
        Laurent r;
        for (const auto& [e, c] : terms_) r.add_term(e * k, c);
        return r;
    }

    std::string str(const std::string& var = "w") const;

private:
    Terms terms_;
};

/// Sparse Laurent polynomial over Q in two variables (w1, w2).
class Laurent2 {
public:
    using Key = std::pair<long, long>;
    using Terms = std::map<Key, Rational>;

    Laurent2() = default;

    static Laurent2 zero() { return {}; }
    static Laurent2 one() { return monomial(0, 0, Rational(1)); }

    static Laurent2 monomial(long e1, long e2, const Rational& c) {
        Laurent2 f;
        if (c != 0) f.terms_[{e1, e2}] = c;
        return f;
    }

    /// Embeds f(w) as f(w1) or f(w2).
    static Laurent2 embed(const Laurent& f, int slot) {
        Laurent2 r;
        for (const auto& [e, c] : f.terms())
            r.terms_.emplace(slot == 1 ? Key{e, 0} : Key{0, e}, c);
        return r;
    }

    /// f(w1*w2): the coproduct substitution.
    static Laurent2 diagonal(const Laurent& f) {
        Laurent2 r;
        for (const auto& [e, c] : f.terms()) r.terms_.emplace(Key{e, e}, c);
        return r;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(long e1, long e2, const Rational& c) {
        if (c == 0) return;
        Key k{e1, e2};
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    friend Laurent2 operator+(const Laurent2& a, const Laurent2& b) {
        Laurent2 r = a;
        for (const auto& [k, c] : b.terms_) r.add_term(k.first, k.second, c);
        return r;
    }
    friend Laurent2 operator-(const Laurent2& a, const Laurent2& b) {
        Laurent2 r = a;
        for (const auto& [k, c] : b.terms_) r.add_term(k.first, k.second, -c);
        return r;
    }
    friend Laurent2 operator-(const Laurent2& a) {
        Laurent2 r;
        for (const auto& [k, c] : a.terms_) r.terms_.emplace(k, -c);
        return r;
    }
    friend Laurent2 operator*(const Laurent2& a, const Laurent2& b) {
        Laurent2 r;
        for (const auto& [k1, c1] : a.terms_)
            for (const auto& [k2, c2] : b.terms_)
                r.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
        return r;
    }
    friend Laurent2 operator*(const Rational& s, const Laurent2& a) {
        Laurent2 r;
        if (s == 0) return r;
        for (const auto& [k, c] : a.terms_) r.terms_.emplace(k, s * c);
        return r;
    }
    friend Laurent2 operator/(const Laurent2& a, const Rational& s) {
        if (s == 0) throw std::domain_error("division by zero");
        return Rational(1) / s * a;
    }
    friend bool operator==(const Laurent2& a, const Laurent2& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Laurent2& a, const Laurent2& b) { return !(a == b); }

    Laurent2 pow(unsigned long e) const {
        Laurent2 base = *this, r = one();
        while (e > 0) {
            if (e & 1ul) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    Rational eval(const Rational& a1, const Rational& a2) const {
        Rational r(0);
        for (const auto& [k, c] : terms_) r += c * rat_pow(a1, k.first) * rat_pow(a2, k.second);
        return r;
    }

    /// Evaluates the first variable, leaving a Laurent in the second.
    Laurent eval_first(const Rational& a) const {
        Laurent r;
        for (const auto& [k, c] : terms_) r.add_term(k.second, c * rat_pow(a, k.first));
        return r;
    }

    /// Sets the second variable to 1 (the counit direction).
    Laurent counit_second() const {
        Laurent r;
        for (const auto& [k, c] : terms_) r.add_term(k.first, c);
        return r;
    }

    Laurent2 swap_vars() const {
        Laurent2 r;
        for (const auto& [k, c] : terms_) r.terms_.emplace(Key{k.second, k.first}, c);
        return r;
    }

    std::string str(const std::string& v1 = "w1", const std::string& v2 = "w2") const;

private:
    Terms terms_;
};

/// Three-variable terms, just enough for coassociativity checks.
class Laurent3 {
public:
    using Key = std::array<long, 3>;

    static Laurent3 zero() { return {}; }

    void add_term(const Key& k, const Rational& c) {
        if (c == 0) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    /// Expands one slot of F(a, b) into two: slot 1 gives F(v1*v2, v3),
    /// slot 2 gives F(v1, v2*v3).
    static Laurent3 expand_slot(const Laurent2& f, int slot) {
        Laurent3 r;
        for (const auto& [k, c] : f.terms()) {
            if (slot == 1)
                r.add_term({k.first, k.first, k.second}, c);
            else
                r.add_term({k.first, k.second, k.second}, c);
        }
        return r;
    }

    friend bool operator==(const Laurent3& a, const Laurent3& b) { return a.terms_ == b.terms_; }

private:
    std::map<Key, Rational> terms_;
};

inline std::string Laurent::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational abs = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool unit_coeff = (abs == 1) && e != 0;
        if (!unit_coeff) os << to_string(abs);
        if (e != 0) {
            if (!unit_coeff) os << "*";
            os << var;
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

inline std::string Laurent2::str(const std::string& v1, const std::string& v2) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        Rational abs = c < 0 ? Rational(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        bool has_var = k.first != 0 || k.second != 0;
        bool unit_coeff = (abs == 1) && has_var;
        if (!unit_coeff) os << to_string(abs);
        bool printed = !unit_coeff;
        if (k.first != 0) {
            if (printed) os << "*";
            os << v1;
            if (k.first != 1) os << "^" << k.first;
            printed = true;
        }
        if (k.second != 0) {
            if (printed) os << "*";
            os << v2;
            if (k.second != 1) os << "^" << k.second;
        }
    }
    return os.str();
}

}  // namespace thetak
