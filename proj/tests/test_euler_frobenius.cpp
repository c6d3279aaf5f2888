#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "splinewave/euler_frobenius.hpp"

#include <cmath>

using namespace splinewave;

TEST_CASE("coefficient vectors at low order") {
    auto e2 = ef_coefficients(2);
    REQUIRE(e2.size() == 3);
    CHECK(e2[0] == 1);
    CHECK(e2[1] == 4);
    CHECK(e2[2] == 1);

    auto e3 = ef_coefficients(3);
    REQUIRE(e3.size() == 5);
    CHECK(e3[0] == 1);
    CHECK(e3[1] == 26);
    CHECK(e3[2] == 66);
    CHECK(e3[3] == 26);
    CHECK(e3[4] == 1);

    CHECK_THROWS(ef_coefficients(1));
}

TEST_CASE("coefficients are positive palindromic integers") {
    for (int m = 2; m <= 8; ++m) {
        auto e = ef_coefficients(m);
        REQUIRE((int)e.size() == 2 * m - 1);
        for (size_t k = 0; k < e.size(); ++k) {
            CHECK(e[k] > 0);
            CHECK(e[k] == e[e.size() - 1 - k]);
        }
    }
}

TEST_CASE("closed-form roots for m = 2") {
    auto r = negative_roots(2);
    REQUIRE(r.size() == 2);
    CHECK(r[0] == doctest::Approx(-2.0 + std::sqrt(3.0)).epsilon(1e-12));
    CHECK(r[1] == doctest::Approx(-2.0 - std::sqrt(3.0)).epsilon(1e-12));
}

TEST_CASE("root structure: count, ordering, pairing, residual") {
    for (int m = 2; m <= 8; ++m) {
        auto spec = ef_spectrum(m);
        REQUIRE((int)spec.roots.size() == 2 * m - 2);
        int inside = 0;
        for (size_t k = 0; k + 1 < spec.roots.size(); ++k)
            CHECK(spec.roots[k] > spec.roots[k + 1]);
        for (double r : spec.roots) {
            CHECK(r < 0.0);
            if (r > -1.0) ++inside;
        }
        CHECK(inside == m - 1);
        // Reciprocal pairing lambda_k * lambda_{2m-1-k} = 1.
        size_t n = spec.roots.size();
        for (size_t k = 0; k < n / 2; ++k)
            CHECK(std::abs(spec.roots[k] * spec.roots[n - 1 - k] - 1.0) <= 1e-10);
        CHECK(spec.max_residual <= 1e-11);
    }
}

TEST_CASE("mu values: m = 2 closed form, strict monotonicity") {
    auto mu2 = mu_values(2);
    REQUIRE(mu2.size() == 1);
    CHECK(mu2[0] == doctest::Approx(0.5).epsilon(1e-12));
    for (int m = 2; m <= 8; ++m) {
        auto mu = mu_values(m);
        REQUIRE((int)mu.size() == m - 1);
        CHECK(mu.back() > 0.0);
        for (size_t i = 0; i + 1 < mu.size(); ++i) CHECK(mu[i] > mu[i + 1]);
    }
}

TEST_CASE("alpha0: closed form and positivity") {
    CHECK(alpha0(2) == doctest::Approx(std::log(2.0 + std::sqrt(3.0))).epsilon(1e-12));
    for (int m = 2; m <= 10; ++m) CHECK(alpha0(m) > 0.0);
}

TEST_CASE("alpha0: the two formula paths agree") {
    for (int m = 2; m <= 10; ++m) {
        double mu = mu_values(m).back();
        double via_mu =
            std::log((std::sqrt(mu + 1.0) + std::sqrt(mu)) / (std::sqrt(mu + 1.0) - std::sqrt(mu)));
        // lambda_{m-1} is the innermost root (closest to -1 from above).
        double lam = negative_roots(m)[m - 2];
        double via_lambda = -std::log(-lam);
        CHECK(std::abs(via_mu - via_lambda) <= 1e-12);
        CHECK(std::abs(alpha0(m) - via_mu) <= 1e-12);
    }
}
