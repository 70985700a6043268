#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace mapcensus {

// All series coefficients are exact rationals; census entries are exact integers.
// GMP keeps mpq values in lowest terms with positive denominator, which is the
// representation invariant we rely on.
using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) {
    return mpz_cmp_ui(r.get_den().get_mpz_t(), 1) == 0;
}

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

inline std::string to_decimal(const Rational& r) {
    if (is_integer(r)) return r.get_num().get_str(10);
    return r.get_num().get_str(10) + "/" + r.get_den().get_str(10);
}

}  // namespace mapcensus
