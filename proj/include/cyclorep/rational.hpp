#pragma once

#include <gmpxx.h>

#include <string>

#include "cyclorep/errors.hpp"

namespace cyclorep {

using Rational = mpq_class;
using Integer = mpz_class;

/// a/b in lowest terms.
inline Rational make_rational(long long a, long long b) {
    if (b == 0) fail(ErrorKind::DivisionByZero, "zero denominator");
    Rational r{Integer(std::to_string(a)), Integer(std::to_string(b))};
    r.canonicalize();
    return r;
}

/// Canonical "p/q" form; integers keep the "/1".
inline std::string rational_to_string(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// Accepts "p/q" or "p".
inline Rational parse_rational(const std::string& s) {
    Rational r;
    if (s.empty() || r.set_str(s, 10) != 0) fail(ErrorKind::ParseError, "bad rational '" + s + "'");
    if (r.get_den() == 0) fail(ErrorKind::DivisionByZero, "zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

inline Integer floor_of(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

/// {r} in [0, 1).
inline Rational frac_of(const Rational& r) { return r - Rational(floor_of(r)); }

/// Multiplicative order of exp(2 pi i t).
inline Integer root_order(const Rational& t) { return Rational(frac_of(t)).get_den(); }

}  // namespace cyclorep
