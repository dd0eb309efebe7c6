#pragma once

#include <gmpxx.h>

#include <string>

namespace expsolve {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// "3", "-7/2".
inline std::string to_string(const Rational& r) { return r.get_str(); }

} // namespace expsolve
