#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace jtrace {

// All exact arithmetic in the library runs over GMP rationals. mpq_class
// keeps values canonical (lowest terms, positive denominator) as long as
// nontrivial constructions are canonicalized, which rat() below does.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long n) { return Rational(n); }

// long long differs from long as a type even on LP64; route through long
inline Rational rat_ll(long long n) { return Rational(static_cast<long>(n)); }

inline Rational rat(long n, long d) {
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

inline long long to_longlong(const Integer& z) {
    if (!z.fits_slong_p())
        throw std::overflow_error("integer does not fit in a machine word: " + z.get_str());
    return static_cast<long long>(z.get_si());
}

inline long long to_longlong(const Rational& q) {
    if (!is_integral(q))
        throw std::domain_error("expected an integer, got " + q.get_str());
    return to_longlong(Integer(q.get_num()));
}

inline Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Integer(0);
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline Integer factorial_z(long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

}  // namespace jtrace
