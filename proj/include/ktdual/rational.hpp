#ifndef KTDUAL_RATIONAL_HPP
#define KTDUAL_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

#include "ktdual/errors.hpp"

namespace ktdual {

// Exact rational scalar; arbitrary-precision throughout.
using Rational = mpq_class;

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// mpq_class(num, den) does not canonicalize; this does.
inline Rational make_rational(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool fits_long(const Rational& q) {
    return is_integer(q) && q.get_num().fits_slong_p();
}

inline long to_long(const Rational& q) {
    if (!fits_long(q)) throw UserError("rational value " + q.get_str() + " is not a machine integer");
    return q.get_num().get_si();
}

// Accepts "p", "p/q" and optional leading '-'.
inline Rational parse_rational(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw UserError("cannot parse rational '" + s + "'");
    if (q.get_den() == 0) throw UserError("zero denominator in rational '" + s + "'");
    q.canonicalize();
    return q;
}

inline std::string rational_str(const Rational& q) { return q.get_str(); }

inline mpz_class binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

} // namespace ktdual

#endif
