#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "splinewave/bspline.hpp"
#include "splinewave/wavelet_system.hpp"

#include <cmath>

using namespace splinewave;

namespace {

WaveletSystem wide_system(int m, bool series_tail = false) {
    BuildOptions opts;
    opts.window_override = 60;
    opts.series_tail = series_tail;
    return build_system(m, 1e-9, opts);
}

// Least-squares slope of (x, y) pairs.
double slope(const std::vector<double>& xs, const std::vector<double>& ys) {
    double n = (double)xs.size(), sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i]; sy += ys[i]; sxx += xs[i] * xs[i]; sxy += xs[i] * ys[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace

TEST_CASE("window sizing from the tail tolerance") {
    WaveletSystem sys = build_system(2, 1e-9);
    CHECK(sys.c_table.window >= 14);
    CHECK(sys.c_table.window <= 18);
    CHECK(sys.c_table.tail_bound <= 1e-9);
}

TEST_CASE("deep tolerance requires the series path") {
    CHECK_THROWS(build_system(2, 1e-20));
    BuildOptions opts;
    opts.series_tail = true;
    WaveletSystem sys = build_system(2, 1e-20, opts);
    CHECK(sys.c_table.tail_bound <= 1e-20);
}

TEST_CASE("build is deterministic") {
    WaveletSystem s1 = wide_system(2), s2 = wide_system(2);
    REQUIRE(s1.c_table.values.size() == s2.c_table.values.size());
    for (size_t i = 0; i < s1.c_table.values.size(); ++i) {
        CHECK(s1.c_table.values[i] == s2.c_table.values[i]);
        CHECK(s1.b_table.values[i] == s2.b_table.values[i]);
        CHECK(s1.a_table.values[i] == s2.a_table.values[i]);
        CHECK(s1.gamma_table.values[i] == s2.gamma_table.values[i]);
    }
}

TEST_CASE("gram matrix of the scaling-function shifts") {
    for (int m = 2; m <= 5; ++m) {
        WaveletSystem sys = wide_system(m);
        for (long long k = -8; k <= 8; ++k) {
            double target = (k == 0) ? 1.0 : 0.0;
            CHECK(std::abs(gram_phi(sys, k) - target) <= 1e-8);
        }
    }
}

TEST_CASE("two-scale relation residual") {
    for (int m = 2; m <= 4; ++m) {
        WaveletSystem sys = wide_system(m);
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            double x = -8.0 + 16.0 * i / 999.0;
            double lhs = phi_eval(sys, x);
            double rhs = 0.0;
            for (long long j = -sys.a_table.window; j <= sys.a_table.window; ++j)
                if (std::abs(2.0 * x - j) <= sys.c_table.window - m)
                    rhs += sys.a_table.at(j) * phi_eval(sys, 2.0 * x - j);
            worst = std::max(worst, std::abs(lhs - rhs));
        }
        CHECK(worst <= 1e-6);
    }
}

TEST_CASE("the two wavelet evaluation paths agree") {
    for (int m = 2; m <= 4; ++m) {
        WaveletSystem sys = wide_system(m);
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            double x = -6.0 + 12.0 * i / 999.0;
            worst = std::max(worst, std::abs(psi_eval(sys, x) - psi_eval_direct(sys, x)));
        }
        CHECK(worst <= 1e-7);
    }
}

TEST_CASE("wavelet is orthogonal to the scaling shifts") {
    WaveletSystem sys = wide_system(2);
    int m = sys.m;
    for (long long k = -6; k <= 6; ++k) {
        // <psi, phi(.-k)> = sum_{j,p} gamma_j c_p integral N_m(2x-j) N_m(x-p-k) dx;
        // integrate numerically over the common support with Simpson panels
        // split at half-integer knots.
        double lo = -20.0, hi = 20.0;
        double total = 0.0;
        const int panels = 20;  // per half-integer cell; integrand is piecewise smooth
        for (double cell = lo; cell < hi; cell += 0.5) {
            double h = 0.5 / panels;
            auto f = [&](double x) {
                if (std::abs(x) > sys.c_table.window - m - 1) return 0.0;
                return psi_eval(sys, x) * phi_eval(sys, x - (double)k);
            };
            double acc = f(cell) + f(cell + 0.5);
            for (int i = 1; i < panels; ++i)
                acc += (i % 2 ? 4.0 : 2.0) * f(cell + i * h);
            total += acc * h / 3.0;
        }
        CHECK(std::abs(total) <= 1e-7);
    }
}

TEST_CASE("scaling function obeys its exponential envelope") {
    WaveletSystem sys = wide_system(2);
    double a0 = sys.spectrum.alpha0;
    for (double x = 6.0; x <= 12.0; x += 0.25) {
        double v = std::abs(phi_eval(sys, x)) * std::sqrt(x) * std::exp(a0 * x);
        CHECK(v <= 5.0);  // bounded: K_c-scale constant with room for oscillation
    }
}

TEST_CASE("evaluation outside the certified range is rejected") {
    WaveletSystem sys = build_system(2, 1e-9);
    double limit = sys.c_table.window - sys.m;
    CHECK_THROWS(phi_eval(sys, limit + 1.0));
    double psi_limit = (sys.gamma_table.window - sys.m) / 2.0;
    CHECK_THROWS(psi_eval(sys, psi_limit + 1.0));
    CHECK_NOTHROW(phi_eval(sys, limit - 0.5));
    CHECK_NOTHROW(psi_eval(sys, psi_limit - 0.5));
}

TEST_CASE("asymptotic profile reproduces the frozen limit constants") {
    WaveletSystem sys = wide_system(2, true);
    AsymptoticProfile p = asymptotic_profile(sys);
    CHECK(p.alpha0 == doctest::Approx(1.3169578969248168).epsilon(1e-10));
    CHECK(p.K_c == doctest::Approx(0.7425152492856911).epsilon(1e-10));
    CHECK(p.K_b == doctest::Approx(0.42869137905249594).epsilon(1e-10));
    CHECK(p.D.at({+1, 0}) == doctest::Approx(0.2799011806088192).epsilon(1e-6));
    CHECK(p.D.at({+1, 1}) == doctest::Approx(-0.1448875149351775).epsilon(1e-6));
    CHECK(p.D.at({-1, 0}) == doctest::Approx(-1.0446054271306255).epsilon(1e-6));
    CHECK(p.D.at({-1, 1}) == doctest::Approx(0.5407275671204771).epsilon(1e-6));
    CHECK(p.E.at({+1, 0}) == doctest::Approx(0.5250375709870087).epsilon(1e-6));
    CHECK(p.E.at({+1, 1}) == doctest::Approx(-1.4344292949131119).epsilon(1e-6));
}

TEST_CASE("profile entries are deterministic across rebuilds") {
    WaveletSystem s1 = wide_system(2, true), s2 = wide_system(2, true);
    AsymptoticProfile p1 = asymptotic_profile(s1), p2 = asymptotic_profile(s2);
    for (auto& [key, val] : p1.D) CHECK(val == p2.D.at(key));
    for (auto& [key, val] : p1.E) CHECK(val == p2.E.at(key));
}

TEST_CASE("finite-index predictions track the measured coefficients") {
    WaveletSystem sys = wide_system(2, true);
    for (long long j = 14; j <= 20; ++j) {
        double ap = a_predicted(sys, j);
        CHECK(std::abs(sys.a_table.at(j) - ap) <= 0.03 * std::abs(ap));
        double gp = gamma_predicted(sys, j);
        CHECK(std::abs(sys.gamma_table.at(j) - gp) <= 0.05 * std::abs(gp));
        double apn = a_predicted(sys, -j);
        CHECK(std::abs(sys.a_table.at(-j) - apn) <= 0.03 * std::abs(apn));
        double gpn = gamma_predicted(sys, -j);
        CHECK(std::abs(sys.gamma_table.at(-j) - gpn) <= 0.05 * std::abs(gpn));
    }
}

TEST_CASE("decay slope fits are stable under window halving") {
    WaveletSystem sys = wide_system(2, true);
    double a0 = sys.spectrum.alpha0;
    auto fit = [&](int lo, int hi) {
        std::vector<double> xs, ys;
        for (int j = lo; j <= hi; ++j) {
            xs.push_back((double)j);
            ys.push_back(std::log(std::abs(sys.c_table.at(j)) * std::sqrt((double)j)));
        }
        return slope(xs, ys);
    };
    double full = fit(20, 60), front = fit(20, 40), back = fit(40, 60);
    CHECK(std::abs(full + a0) <= 0.005 * a0);
    CHECK(std::abs(front - full) <= 0.001 * a0);
    CHECK(std::abs(back - full) <= 0.001 * a0);
}

TEST_CASE("verification battery passes for the low orders") {
    for (int m = 2; m <= 4; ++m) {
        BuildOptions opts;
        opts.window_override = m >= 4 ? 85 : 60;  // slower decay needs more tail
        opts.series_tail = (m == 2);
        WaveletSystem sys = build_system(m, 1e-9, opts);
        VerificationReport rep = verify(sys);
        for (auto& c : rep.checks) {
            INFO(c.name, " measured=", c.measured, " target=", c.target,
                 " tol=", c.tolerance);
            CHECK(c.pass);
        }
    }
}
