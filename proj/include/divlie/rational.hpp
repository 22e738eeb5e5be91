#pragma once

#include <gmpxx.h>

#include <string>

#include "divlie/errors.hpp"

namespace divlie {

/// Exact rational coefficients. All arithmetic in the library is over these;
/// nothing is ever rounded.
using Rational = mpq_class;

inline std::string to_string(const Rational& r) { return r.get_str(); }

/// Parses "p", "-p" or "p/q" (q > 0 after canonicalization).
inline Rational rational_from_string(const std::string& s) {
    mpq_class r;
    if (s.empty() || r.set_str(s, 10) != 0) throw ValueError("bad rational literal '" + s + "'");
    if (r.get_den() == 0) throw ValueError("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

}  // namespace divlie
