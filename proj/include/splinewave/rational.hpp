// Exact rational arithmetic support: arbitrary-precision integers and
// rationals used for B-spline integer samples, Euler-Frobenius coefficients,
// piecewise-polynomial forms and moments.  Floats appear only at the API
// boundary.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace splinewave {

using BigInt   = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }
inline double to_double(const BigInt& n) { return n.convert_to<double>(); }

inline BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (unsigned i = 0; i < k; ++i) { r *= (n - i); r /= (i + 1); }
    return r;
}

} // namespace splinewave
