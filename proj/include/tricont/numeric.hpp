#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace tricont {

// Exact coefficient and evaluation types. Counting sequences and the Pell
// scalings overflow 64 bits well inside the ranges exercised here, so all
// coefficient arithmetic is arbitrary precision.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int pow_int(Int base, unsigned exp) {
    Int r = 1;
    while (exp != 0) {
        if (exp & 1u) r *= base;
        base *= base;
        exp >>= 1u;
    }
    return r;
}

inline Rational pow_rational(const Rational& base, unsigned exp) {
    Rational r = 1;
    for (unsigned i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace tricont
