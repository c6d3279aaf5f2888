// Cardinal B-splines N_m: exact and floating evaluation, integer samples,
// piecewise-polynomial form, autocorrelation identities, and moments.
//
// N_1 is the half-open indicator of [0,1); N_m = N_{m-1} * N_1 (convolution).
// Evaluation uses the two-term Cox-de Boor style recurrence
//   N_m(x) = [ x*N_{m-1}(x) + (m-x)*N_{m-1}(x-1) ] / (m-1),
// the convolution definition is retained as a test oracle.
#pragma once

#include "rational.hpp"
#include <stdexcept>
#include <vector>

namespace splinewave {

// Exact rationals N_m(k) for k = 0..m.  Palindromic; sums to 1; for m >= 2
// the end samples vanish.
struct RationalSampleVector {
    int m = 0;
    std::vector<Rational> samples;  // size m+1, samples[k] = N_m(k)
};

// Per interval [k, k+1), k = 0..m-1, a coefficient row of degree <= m-1 in
// the global variable x (row[d] multiplies x^d).  Identically 0 outside
// [0, m]; value and derivatives up to order m-2 are continuous at the knots.
struct PiecewisePolynomial {
    int m = 0;
    std::vector<std::vector<Rational>> pieces;  // pieces[k][d]
};

// N_m(x) in double precision.  Exact 0 outside [0, m); right-continuous at
// the knots (half-open convention of N_1).  Rejects m < 1.
double eval_bspline(int m, double x);

// Exact rational integer samples N_m(0..m).  Rejects m < 1.
RationalSampleVector integer_samples(int m);

// Exact piecewise polynomial form of N_m.  Rejects m < 1.
PiecewisePolynomial piecewise_form(int m);

// Evaluate a piecewise form at x (double); 0 outside [0, m).
double eval_piecewise(const PiecewisePolynomial& p, double x);

// Autocorrelation integral inner product of integer shifts:
//   integral N_m(x) N_m(x-n) dx = N_{2m}(m+n).
// Exact rational; 0 for |n| >= m.
Rational autocorrelation_at(int m, long long n);

// Exact moment integral x^p N_m(x) dx via the piecewise form.
Rational moment(int m, int p);

} // namespace splinewave
