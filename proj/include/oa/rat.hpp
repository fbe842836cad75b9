#pragma once
// Exact scalar arithmetic: arbitrary-precision integers and rationals on top
// of GMP. Every Rat is canonical (lowest terms, positive denominator), so
// structural equality is value equality.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace oa {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline std::string rat_to_string(const Rat& r) {
    if (is_integer(r)) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Int to_int(const Rat& r) {
    if (!is_integer(r)) throw std::domain_error("to_int: " + rat_to_string(r) + " is not an integer");
    return r.get_num();
}

// Parses "a" or "a/b" (optional sign on a; b positive after canonicalization).
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("rat_from_string: empty token");
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("rat_from_string: bad token '" + s + "'");
    r.canonicalize();
    if (r.get_den() == 0) throw std::invalid_argument("rat_from_string: zero denominator in '" + s + "'");
    return r;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat rat_pow(const Rat& base, long e) {
    if (e >= 0) {
        Rat r;
        mpq_class b = base;
        mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(b.get_mpq_t()), static_cast<unsigned long>(e));
        mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(b.get_mpq_t()), static_cast<unsigned long>(e));
        return r;
    }
    if (base == 0) throw std::domain_error("rat_pow: zero base with negative exponent");
    return rat_pow(Rat(base.get_den(), base.get_num()), -e);
}

// C(n, k) for nonnegative integer arguments; 0 when k > n.
inline Int binom_int(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int factorial_int(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline bool divides(const Int& d, const Int& a) {
    if (d == 0) return a == 0;
    return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

}  // namespace oa
