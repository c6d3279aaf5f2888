#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "splinewave/bspline.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

using namespace splinewave;

namespace {

// Convolution oracle: N_m(x) = integral_0^1 N_{m-1}(x - y) dy, composite
// Simpson split at the knots of the integrand so each panel is smooth.
double convolution_eval(int m, double x) {
    if (m == 1) return eval_bspline(1, x);
    // Integrand y -> N_{m-1}(x - y) has breakpoints where x - y is an
    // integer; collect them inside (0, 1).
    std::vector<double> cuts{0.0, 1.0};
    for (int k = -1; k <= m + 1; ++k) {
        double y = x - k;
        if (y > 0.0 && y < 1.0) cuts.push_back(y);
    }
    std::sort(cuts.begin(), cuts.end());
    // 5-point Gauss-Legendre per smooth segment: exact for the polynomial
    // pieces (degree <= 9 covers m <= 10) and all nodes are interior, so the
    // jump locations themselves are never sampled.
    static const double gx[] = {-0.9061798459386640, -0.5384693101056831, 0.0,
                                0.5384693101056831, 0.9061798459386640};
    static const double gw[] = {0.2369268850561891, 0.4786286704993665,
                                0.5688888888888889, 0.4786286704993665,
                                0.2369268850561891};
    double total = 0.0;
    for (size_t s = 0; s + 1 < cuts.size(); ++s) {
        double a = cuts[s], b = cuts[s + 1];
        if (b - a < 1e-15) continue;
        double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        for (int i = 0; i < 5; ++i)
            total += gw[i] * half * eval_bspline(m - 1, x - (mid + half * gx[i]));
    }
    return total;
}

} // namespace

TEST_CASE("point values at simple arguments") {
    CHECK(eval_bspline(1, 0.5) == 1.0);
    CHECK(eval_bspline(2, 1.0) == 1.0);
    CHECK(eval_bspline(4, 2.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(eval_bspline(3, -0.1) == 0.0);
    CHECK(eval_bspline(1, 1.0) == 0.0);  // right-continuous half-open support
    CHECK(eval_bspline(3, 3.0) == 0.0);
    CHECK_THROWS(eval_bspline(0, 0.5));
}

TEST_CASE("integer samples are exact rationals with the expected values") {
    auto s2 = integer_samples(2);
    REQUIRE(s2.samples.size() == 3);
    CHECK(s2.samples[0] == Rational(0));
    CHECK(s2.samples[1] == Rational(1));
    CHECK(s2.samples[2] == Rational(0));

    auto s4 = integer_samples(4);
    REQUIRE(s4.samples.size() == 5);
    CHECK(s4.samples[1] == Rational(1, 6));
    CHECK(s4.samples[2] == Rational(2, 3));
    CHECK(s4.samples[3] == Rational(1, 6));

    auto s6 = integer_samples(6);
    REQUIRE(s6.samples.size() == 7);
    CHECK(s6.samples[1] == Rational(1, 120));
    CHECK(s6.samples[2] == Rational(26, 120));
    CHECK(s6.samples[3] == Rational(66, 120));
    CHECK(s6.samples[4] == Rational(26, 120));
    CHECK(s6.samples[5] == Rational(1, 120));
}

TEST_CASE("integer samples: palindrome and unit sum") {
    for (int m = 1; m <= 12; ++m) {
        auto s = integer_samples(m);
        REQUIRE((int)s.samples.size() == m + 1);
        Rational sum = 0;
        for (int k = 0; k <= m; ++k) {
            // m = 1 is exempt: the half-open convention gives [1, 0].
            if (m >= 2) CHECK(s.samples[k] == s.samples[m - k]);
            sum += s.samples[k];
        }
        CHECK(sum == Rational(1));
        if (m >= 2) {
            CHECK(s.samples[0] == Rational(0));
            CHECK(s.samples[m] == Rational(0));
        }
    }
}

TEST_CASE("evaluation agrees with the convolution definition") {
    std::mt19937 rng(12345);
    for (int m = 2; m <= 10; ++m) {
        std::uniform_real_distribution<double> dist(-1.0, m + 1.0);
        double worst = 0.0;
        for (int t = 0; t < 100; ++t) {
            double x = dist(rng);
            worst = std::max(worst, std::abs(eval_bspline(m, x) - convolution_eval(m, x)));
        }
        CHECK(worst <= 1e-9);
    }
}

TEST_CASE("partition of unity") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> dist(-20.0, 20.0);
    for (int m = 1; m <= 10; ++m) {
        double worst = 0.0;
        for (int t = 0; t < 1000; ++t) {
            double x = dist(rng);
            double s = 0.0;
            for (long long k = (long long)std::floor(x) - m; k <= (long long)std::ceil(x) + 1; ++k)
                s += eval_bspline(m, x - k);
            worst = std::max(worst, std::abs(s - 1.0));
        }
        CHECK(worst <= 1e-12);
    }
}

TEST_CASE("piecewise form matches direct evaluation") {
    for (int m = 1; m <= 10; ++m) {
        auto p = piecewise_form(m);
        REQUIRE((int)p.pieces.size() == m);
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            double x = m * (i + 0.5) / 1000.0;
            worst = std::max(worst, std::abs(eval_piecewise(p, x) - eval_bspline(m, x)));
        }
        CHECK(worst <= 1e-13);
    }
}

TEST_CASE("piecewise form: explicit low orders") {
    auto p1 = piecewise_form(1);
    REQUIRE(p1.pieces.size() == 1);
    REQUIRE(p1.pieces[0].size() >= 1);
    CHECK(p1.pieces[0][0] == Rational(1));

    auto p2 = piecewise_form(2);  // x on [0,1), 2-x on [1,2)
    CHECK(p2.pieces[0][0] == Rational(0));
    CHECK(p2.pieces[0][1] == Rational(1));
    CHECK(p2.pieces[1][0] == Rational(2));
    CHECK(p2.pieces[1][1] == Rational(-1));
}

TEST_CASE("continuity of value and derivatives up to order m-2 at the knots") {
    for (int m = 2; m <= 10; ++m) {
        auto p = piecewise_form(m);
        // Differentiate coefficient rows symbolically (exact rationals).
        auto derive = [](std::vector<Rational> row) {
            std::vector<Rational> d;
            for (size_t i = 1; i < row.size(); ++i) d.push_back(row[i] * (long long)i);
            if (d.empty()) d.push_back(Rational(0));
            return d;
        };
        auto eval_row = [](const std::vector<Rational>& row, const Rational& x) {
            Rational acc = 0;
            for (size_t i = row.size(); i-- > 0;) acc = acc * x + row[i];
            return acc;
        };
        for (int order = 0; order <= m - 2; ++order) {
            std::vector<std::vector<Rational>> rows = p.pieces;
            for (int d = 0; d < order; ++d)
                for (auto& row : rows) row = derive(row);
            for (int k = 1; k <= m - 1; ++k) {
                Rational left = eval_row(rows[k - 1], Rational(k));
                Rational right = eval_row(rows[k], Rational(k));
                CHECK(std::abs(to_double(left - right)) <= 1e-12);
            }
            // Support-edge continuity: vanishing at x = 0 and x = m.
            CHECK(eval_row(rows[0], Rational(0)) == Rational(0));
            CHECK(eval_row(rows[m - 1], Rational(m)) == Rational(0));
        }
    }
}

TEST_CASE("autocorrelation identities") {
    CHECK(autocorrelation_at(2, 0) == Rational(2, 3));
    CHECK(autocorrelation_at(2, 2) == Rational(0));
    CHECK(autocorrelation_at(3, 1) == Rational(26, 120));
    for (int m = 1; m <= 5; ++m)
        for (long long n = (long long)m; n <= m + 2; ++n) {
            CHECK(autocorrelation_at(m, n) == Rational(0));
            CHECK(autocorrelation_at(m, -n) == Rational(0));
        }
}

TEST_CASE("autocorrelation matches quadrature of the product integral") {
    for (int m = 1; m <= 5; ++m) {
        for (long long n = -(m - 1); n <= m - 1; ++n) {
            // Integrate N_m(x) N_m(x-n) over [max(0,n), min(m, m+n)] with
            // composite Simpson split at integer knots.
            double a = std::max(0.0, (double)n), b = std::min((double)m, (double)(m + n));
            // Per integer cell the integrand is a polynomial of degree
            // 2(m-1) <= 8; 5-point Gauss-Legendre is exact and keeps the
            // nodes away from the knot discontinuities of N_1.
            static const double gx[] = {-0.9061798459386640, -0.5384693101056831,
                                        0.0, 0.5384693101056831, 0.9061798459386640};
            static const double gw[] = {0.2369268850561891, 0.4786286704993665,
                                        0.5688888888888889, 0.4786286704993665,
                                        0.2369268850561891};
            double total = 0.0;
            for (double k = std::floor(a); k < b; k += 1.0) {
                double lo = std::max(a, k), hi = std::min(b, k + 1.0);
                if (hi - lo < 1e-15) continue;
                double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
                for (int i = 0; i < 5; ++i) {
                    double x = mid + half * gx[i];
                    total += gw[i] * half * eval_bspline(m, x) *
                             eval_bspline(m, x - (double)n);
                }
            }
            CHECK(std::abs(total - to_double(autocorrelation_at(m, n))) <= 1e-9);
        }
    }
}

TEST_CASE("moments") {
    for (int m = 1; m <= 8; ++m) CHECK(moment(m, 0) == Rational(1));
    CHECK(moment(1, 1) == Rational(1, 2));
    CHECK(moment(2, 1) == Rational(1));
    // First moment is the centroid m/2 by symmetry about m/2.
    for (int m = 1; m <= 8; ++m) CHECK(moment(m, 1) == Rational(m, 2));
}
