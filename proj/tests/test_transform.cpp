#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "splinewave/transform.hpp"

#include <cmath>
#include <random>

using namespace splinewave;

namespace {

WaveletSystem wide_system(int m) {
    BuildOptions opts;
    opts.window_override = 60;
    return build_system(m, 1e-9, opts);
}

std::vector<double> random_signal(size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::normal_distribution<double> dist(0.0, 1.0);
    std::vector<double> s(n);
    for (auto& v : s) v = dist(rng);
    return s;
}

double rel_l2(const std::vector<double>& a, const std::vector<double>& b) {
    double num = 0.0, den = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        num += (a[i] - b[i]) * (a[i] - b[i]);
        den += a[i] * a[i];
    }
    return std::sqrt(num / den);
}

double energy(const DwtResult& r) {
    double e = 0.0;
    for (auto& band : r.details)
        for (double v : band) e += v * v;
    for (double v : r.approximation) e += v * v;
    return e;
}

} // namespace

TEST_CASE("filter normalization and orthonormality") {
    WaveletSystem sys = wide_system(2);
    FilterPair fp = derive_filters(sys, 1e-9);
    double sum_h = 0.0, sum_g = 0.0;
    for (double v : fp.lowpass) sum_h += v;
    for (double v : fp.highpass) sum_g += v;
    CHECK(std::abs(sum_h - std::sqrt(2.0)) <= 1e-7);
    CHECK(std::abs(sum_g) <= 1e-7);
    for (long long k = -6; k <= 6; ++k) {
        double s = 0.0;
        for (long long j = fp.lo; j < fp.lo + (long long)fp.lowpass.size(); ++j)
            s += fp.h(j) * fp.h(j - 2 * k);
        CHECK(std::abs(s - (k == 0 ? 1.0 : 0.0)) <= 1e-7);
    }
    // Alternating-flip rule g_j = (-1)^j h_{1-j}.
    for (long long j = fp.g_lo; j < fp.g_lo + (long long)fp.highpass.size(); ++j) {
        double expect = ((j % 2 + 2) % 2 == 0 ? 1.0 : -1.0) * fp.h(1 - j);
        CHECK(fp.g(j) == doctest::Approx(expect).epsilon(1e-15));
    }
}

TEST_CASE("round trip and energy preservation") {
    WaveletSystem sys = wide_system(2);
    FilterPair fp = derive_filters(sys, 1e-9);
    auto sig = random_signal(256, 4242);
    DwtResult res = dwt_analyze(fp, sig, 3);
    size_t count = res.approximation.size();
    for (auto& band : res.details) count += band.size();
    CHECK(count == sig.size());
    auto back = dwt_synthesize(fp, res);
    CHECK(rel_l2(sig, back) <= 1e-6);
    double ein = 0.0;
    for (double v : sig) ein += v * v;
    CHECK(std::abs(energy(res) - ein) <= 1e-6 * ein);
}

TEST_CASE("constant signal concentrates in the approximation band") {
    WaveletSystem sys = wide_system(2);
    FilterPair fp = derive_filters(sys, 1e-9);
    std::vector<double> sig(256, 3.5);
    DwtResult res = dwt_analyze(fp, sig, 2);
    for (auto& band : res.details)
        for (double v : band) CHECK(std::abs(v) <= 1e-7 * 3.5);
    for (double v : res.approximation)
        CHECK(v == doctest::Approx(3.5 * 2.0).epsilon(1e-6));  // mean * 2^{levels/2}
}

TEST_CASE("shift-by-2 covariance at one level") {
    WaveletSystem sys = wide_system(2);
    FilterPair fp = derive_filters(sys, 1e-9);
    auto sig = random_signal(128, 77);
    std::vector<double> shifted(sig.size());
    for (size_t i = 0; i < sig.size(); ++i) shifted[(i + 2) % sig.size()] = sig[i];
    DwtResult r1 = dwt_analyze(fp, sig, 1);
    DwtResult r2 = dwt_analyze(fp, shifted, 1);
    size_t n = r1.approximation.size();
    for (size_t i = 0; i < n; ++i) {
        CHECK(std::abs(r2.approximation[(i + 1) % n] - r1.approximation[i]) <= 1e-12);
        CHECK(std::abs(r2.details[0][(i + 1) % n] - r1.details[0][i]) <= 1e-12);
    }
}

TEST_CASE("reconstruction error scales with the truncation tolerance") {
    WaveletSystem sys = wide_system(2);
    auto sig = random_signal(256, 11);
    std::vector<double> epss{1e-6, 1e-9, 1e-12};
    std::vector<double> errs;
    for (double eps : epss) {
        FilterPair fp = derive_filters(sys, eps);
        auto back = dwt_synthesize(fp, dwt_analyze(fp, sig, 3));
        errs.push_back(rel_l2(sig, back));
    }
    // log-log slope of error vs eps should be ~1 (within 20%).
    double s = (std::log(errs[2]) - std::log(errs[0])) /
               (std::log(epss[2]) - std::log(epss[0]));
    CHECK(s >= 0.8);
    CHECK(s <= 1.2);
    CHECK(errs[0] > errs[2]);
}

TEST_CASE("incompatible lengths are rejected") {
    WaveletSystem sys = wide_system(2);
    FilterPair fp = derive_filters(sys, 1e-9);
    std::vector<double> sig(100, 1.0);
    CHECK_THROWS(dwt_analyze(fp, sig, 3));       // 100 not divisible by 8
    std::vector<double> tiny(4, 1.0);
    CHECK_THROWS(dwt_analyze(fp, tiny, 1));      // shorter than the filter
    // A default-width table certifies its tail only to ~eps; asking the
    // filters for far more must be refused.
    WaveletSystem narrow = build_system(2, 1e-9);
    CHECK_THROWS(derive_filters(narrow, 1e-15));
}
