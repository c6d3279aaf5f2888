// Euler-Frobenius polynomials and the spectral quantities derived from
// them.  E_{2m-1}(z) = (2m-1)! z^{m-1} sum_k N_{2m}(m+k) z^k has palindromic
// positive integer coefficients and 2m-2 simple negative real roots coming
// in reciprocal pairs; the m-1 roots in (-1, 0) determine
//   mu_i = (lambda_i + 1)^2 / (4 |lambda_i|)
// and the decay exponent
//   alpha0 = ln[(sqrt(mu_{m-1}+1) + sqrt(mu_{m-1})) /
//              (sqrt(mu_{m-1}+1) - sqrt(mu_{m-1}))]  ( = -ln|lambda_{m-1}| ).
#pragma once

#include "rational.hpp"
#include <vector>

namespace splinewave {

struct EFSpectrum {
    int m = 0;
    std::vector<BigInt> coefficients;  // degree 2m-2, ascending powers
    // All 2m-2 roots, sorted 0 > lambda_1 > ... > lambda_{2m-2}.
    std::vector<double> roots;
    std::vector<double> mu;      // mu_1 > ... > mu_{m-1} > 0
    double alpha0 = 0.0;
    // Max relative residual |E(lambda_k)| / scale over reported roots.
    double max_residual = 0.0;
};

// Integer coefficient vector of E_{2m-1} (the z^{m-1} factor stripped):
// entry k-(-m+1) equals (2m-1)! N_{2m}(m+k), k = -m+1..m-1.  Rejects m < 2.
std::vector<BigInt> ef_coefficients(int m);

// All 2m-2 negative roots, descending from 0.  The m-1 roots in (-1, 0) are
// isolated by sign-change bracketing on a logarithmic grid, refined by
// bisection and safeguarded Newton polish; reciprocal partners are formed
// as 1/lambda.  Throws if bracketing does not isolate exactly m-1 roots.
std::vector<double> negative_roots(int m);

// mu_i = (lambda_i+1)^2 / (4|lambda_i|), i = 1..m-1; strictly decreasing.
std::vector<double> mu_values(int m);

// Decay exponent alpha0 > 0 from mu_{m-1}.
double alpha0(int m);

// Full spectrum bundle.
EFSpectrum ef_spectrum(int m);

// Compensated (Kahan-style) Horner evaluation of an ascending-coefficient
// polynomial with double-converted coefficients.
double horner_compensated(const std::vector<double>& coeff, double x);

} // namespace splinewave
