#include "splinewave/euler_frobenius.hpp"
#include "splinewave/bspline.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace splinewave {

std::vector<BigInt> ef_coefficients(int m) {
    if (m < 2) throw std::invalid_argument("ef_coefficients: requires m >= 2");
    auto s = integer_samples(2 * m);
    BigInt f = factorial(static_cast<unsigned>(2 * m - 1));
    std::vector<BigInt> coeff;
    coeff.reserve(static_cast<size_t>(2 * m - 1));
    for (int k = -m + 1; k <= m - 1; ++k) {
        Rational v = Rational(f) * s.samples[static_cast<size_t>(m + k)];
        if (denominator(v) != 1)
            throw std::logic_error("ef_coefficients: non-integer entry");
        coeff.push_back(numerator(v));
    }
    return coeff;
}

double horner_compensated(const std::vector<double>& coeff, double x) {
    // Compensated Horner: track the rounding error of each fma-free step.
    double s = 0.0, comp = 0.0;
    for (size_t i = coeff.size(); i-- > 0;) {
        double p = s * x;
        double ep = std::fma(s, x, -p);  // exact product error
        double t = p + coeff[i];
        double et = (std::abs(p) >= std::abs(coeff[i]))
                        ? (p - t) + coeff[i]
                        : (coeff[i] - t) + p;
        s = t;
        comp = comp * x + (ep + et);
    }
    return s + comp;
}

static double poly_deriv_at(const std::vector<double>& coeff, double x) {
    double s = 0.0;
    for (size_t i = coeff.size(); i-- > 1;)
        s = s * x + coeff[i] * static_cast<double>(i);
    return s;
}

std::vector<double> negative_roots(int m) {
    auto icoeff = ef_coefficients(m);
    std::vector<double> coeff(icoeff.size());
    for (size_t i = 0; i < icoeff.size(); ++i) coeff[i] = to_double(icoeff[i]);

    auto eval = [&](double x) { return horner_compensated(coeff, x); };

    // All m-1 roots in (-1, 0): sign-change bracketing on a logarithmic
    // grid (the small root for larger m is within ~e^{-m}), then bisection
    // to ~1e-15 relative, then two safeguarded Newton polish steps.
    std::vector<double> inner;
    const int grid = 4000;
    double prev_x = -1e-12, prev_f = eval(prev_x);
    for (int i = 1; i <= grid; ++i) {
        // log-spaced from 1e-12 toward 1 in magnitude
        double mag = std::exp(std::log(1e-12) * (1.0 - double(i) / grid));
        double x = -std::min(mag, 1.0 - 1e-15);
        double f = eval(x);
        if ((prev_f < 0) != (f < 0) && prev_f != 0.0) {
            double lo = x, hi = prev_x;  // lo < hi (both negative)
            double flo = f;
            for (int it = 0; it < 120; ++it) {
                double mid = 0.5 * (lo + hi);
                double fm = eval(mid);
                if ((fm < 0) == (flo < 0)) { lo = mid; flo = fm; }
                else hi = mid;
                if (hi - lo <= 1e-16 * std::abs(lo)) break;
            }
            double r = 0.5 * (lo + hi);
            for (int it = 0; it < 2; ++it) {
                double d = poly_deriv_at(coeff, r);
                if (d == 0.0) break;
                double step = eval(r) / d;
                double cand = r - step;
                if (cand > lo - (hi - lo) && cand < hi + (hi - lo)) r = cand;
            }
            inner.push_back(r);
        }
        prev_x = x;
        prev_f = f;
    }
    if (static_cast<int>(inner.size()) != m - 1)
        throw std::runtime_error(
            "negative_roots: bracketing did not isolate exactly m-1 roots in (-1,0)");

    // Sort descending toward -1 and append reciprocal partners.
    std::sort(inner.begin(), inner.end(), std::greater<double>());
    std::vector<double> all = inner;
    for (size_t i = inner.size(); i-- > 0;) all.push_back(1.0 / inner[i]);
    return all;  // 0 > lambda_1 > ... > lambda_{2m-2}
}

std::vector<double> mu_values(int m) {
    auto roots = negative_roots(m);
    std::vector<double> mu;
    mu.reserve(static_cast<size_t>(m - 1));
    for (int i = 0; i < m - 1; ++i) {
        double lam = roots[static_cast<size_t>(i)];
        mu.push_back((lam + 1.0) * (lam + 1.0) / (4.0 * std::abs(lam)));
    }
    return mu;
}

double alpha0(int m) {
    auto mu = mu_values(m);
    double u = mu.back();
    double sp = std::sqrt(u + 1.0), sm = std::sqrt(u);
    return std::log((sp + sm) / (sp - sm));
}

EFSpectrum ef_spectrum(int m) {
    EFSpectrum s;
    s.m = m;
    s.coefficients = ef_coefficients(m);
    s.roots = negative_roots(m);
    s.mu = mu_values(m);
    double u = s.mu.back();
    double sp = std::sqrt(u + 1.0), sm = std::sqrt(u);
    s.alpha0 = std::log((sp + sm) / (sp - sm));

    std::vector<double> coeff(s.coefficients.size());
    for (size_t i = 0; i < coeff.size(); ++i) coeff[i] = to_double(s.coefficients[i]);
    double resid = 0.0;
    for (double r : s.roots) {
        // Relative scale: sum |coeff_i r^i|.
        double scale = 0.0, p = 1.0;
        for (double cv : coeff) { scale += std::abs(cv * p); p *= r; }
        resid = std::max(resid, std::abs(horner_compensated(coeff, r)) / scale);
    }
    s.max_residual = resid;
    return s;
}

} // namespace splinewave
