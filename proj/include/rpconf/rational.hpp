#pragma once

#include <gmpxx.h>

#include <string>

#include "rpconf/errors.hpp"

namespace rpconf {

// Arbitrary-precision rational, canonical form kept by GMP
// (positive denominator, reduced fraction).
using Rat = mpq_class;

inline int sign(const Rat& x) { return sgn(x); }

inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// Parses "p", "p/q" or a plain decimal integer.
inline Rat parse_rat(const std::string& s) {
    try {
        Rat r(s);
        r.canonicalize();
        if (r.get_den() == 0) throw ParseError("zero denominator: " + s);
        return r;
    } catch (const std::invalid_argument&) {
        throw ParseError("bad rational: '" + s + "'");
    }
}

inline std::string to_string(const Rat& x) { return x.get_str(); }

}  // namespace rpconf
