#pragma once

#include <gmpxx.h>

#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace thetak {

/// Arbitrary-precision integers and rationals, backed by GMP.
/// mpq_class values are kept canonical (lowest terms, positive denominator)
/// by GMP itself, which is exactly the invariant the rest of the library
/// relies on.
using Int = mpz_class;
using Rational = mpq_class;

/// Marker for v_p(0) = +infinity.
inline constexpr long val_infinity = std::numeric_limits<long>::max();

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

/// b^e for integer e; negative e requires b != 0.
inline Rational rat_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    Rational b = base;
    if (e < 0) {
        if (b == 0) throw std::domain_error("rat_pow: 0 to a negative power");
        b = 1 / b;
        e = -e;
    }
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), b.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den_mpz_t(), b.get_den_mpz_t(), static_cast<unsigned long>(e));
    // powers of a canonical num/den pair are still coprime, den still positive
    return r;
}

/// p-adic valuation of a nonzero integer; val_infinity for 0.
inline long valuation(const Int& n, const Int& p) {
    if (n == 0) return val_infinity;
    Int tmp;
    return static_cast<long>(mpz_remove(tmp.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

inline long valuation(const Rational& q, const Int& p) {
    if (q == 0) return val_infinity;
    return valuation(Int(q.get_num()), p) - valuation(Int(q.get_den()), p);
}

inline bool is_p_integral(const Rational& q, const Int& p) {
    if (q == 0) return true;
    return valuation(Int(q.get_den()), p) == 0;
}

/// The scalar correction term (a - a^p)/p appearing in the Q scalar rule.
/// Requires a to be p-local (v_p(a) >= 0); the result is again p-local.
inline Rational fermat_quotient(const Rational& a, const Int& p) {
    if (!is_p_integral(a, p)) throw std::domain_error("fermat_quotient: not p-local");
    if (!p.fits_ulong_p()) throw std::domain_error("fermat_quotient: prime too large");
    Rational ap = rat_pow(a, static_cast<long>(p.get_ui()));
    return (a - ap) / Rational(p);
}

/// Representatives of (Z/p^k)^x: all integers in [1, p^k] coprime to p.
inline std::vector<Int> unit_residues(const Int& p, unsigned k) {
    if (k == 0) throw std::invalid_argument("unit_residues: k must be >= 1");
    Int pk = int_pow(p, k);
    std::vector<Int> out;
    for (Int a = 1; a <= pk; ++a)
        if (a % p != 0) out.push_back(a);
    return out;
}

/// v_p of the multinomial coefficient (p^{r+1}; p^r, ..., p^r) with p equal
/// parts, computed from exact factorials.
inline long multinomial_valuation(const Int& p, unsigned r) {
    if (!p.fits_ulong_p()) throw std::domain_error("multinomial_valuation: prime too large");
    unsigned long pl = p.get_ui();
    Int top = int_pow(p, r + 1);
    Int bot = int_pow(p, r);
    if (!top.fits_ulong_p()) throw std::domain_error("multinomial_valuation: r too large");
    Int tf, bf;
    mpz_fac_ui(tf.get_mpz_t(), top.get_ui());
    mpz_fac_ui(bf.get_mpz_t(), bot.get_ui());
    Int denom = int_pow(bf, pl);
    Int coeff = tf / denom;
    return valuation(coeff, p);
}

inline std::string to_string(const Int& n) { return n.get_str(); }

/// Canonical rational printing: "num" or "num/den".
inline std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace thetak
