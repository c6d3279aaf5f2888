#include "splinewave/transform.hpp"

#include <cmath>
#include <stdexcept>

namespace splinewave {

FilterPair derive_filters(const WaveletSystem& sys, double eps) {
    if (eps < sys.a_table.tail_bound)
        throw std::invalid_argument("derive_filters: eps below the a-table's certified floor");
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    // Find the smallest symmetric-ish window where dropped mass is below eps.
    int J = sys.a_table.window;
    int lo = -J, hi = J;
    while (lo < 0 && std::abs(sys.a_table.at(lo)) * inv_sqrt2 < eps / (4.0 * J)) ++lo;
    while (hi > 0 && std::abs(sys.a_table.at(hi)) * inv_sqrt2 < eps / (4.0 * J)) --hi;
    FilterPair fp;
    fp.m = sys.m;
    fp.lo = lo;
    fp.truncation_eps = eps;
    for (int j = lo; j <= hi; ++j)
        fp.lowpass.push_back(sys.a_table.at(j) * inv_sqrt2);
    // g_j = (-1)^j h_{1-j}: support of g is 1-hi .. 1-lo.
    fp.g_lo = 1 - hi;
    for (int j = 1 - hi; j <= 1 - lo; ++j) {
        double h = fp.lowpass[static_cast<size_t>((1 - j) - lo)];
        fp.highpass.push_back(((j % 2 + 2) % 2 == 0 ? 1.0 : -1.0) * h);
    }
    double num = 0.0, den = 0.0;
    for (int j = lo; j <= hi; ++j) {
        double h = fp.h(j);
        num += j * h * h;
        den += h * h;
    }
    fp.centroid = num / den;
    return fp;
}

namespace {

// One periodic analysis step: y[n] = sum_j f_j x[(2n + j) mod N].
std::vector<double> down_step(const std::vector<double>& x, const std::vector<double>& f,
                              int f_lo) {
    const long long N = static_cast<long long>(x.size());
    std::vector<double> y(static_cast<size_t>(N / 2), 0.0);
    for (long long n = 0; n < N / 2; ++n) {
        double s = 0.0;
        for (size_t i = 0; i < f.size(); ++i) {
            long long idx = (2 * n + f_lo + static_cast<long long>(i)) % N;
            if (idx < 0) idx += N;
            s += f[i] * x[static_cast<size_t>(idx)];
        }
        y[static_cast<size_t>(n)] = s;
    }
    return y;
}

// Adjoint: x[t] += sum_n f_{t - 2n} y[n]  (periodic).
void up_step(std::vector<double>& x, const std::vector<double>& y,
             const std::vector<double>& f, int f_lo) {
    const long long N = static_cast<long long>(x.size());
    for (long long n = 0; n < static_cast<long long>(y.size()); ++n) {
        for (size_t i = 0; i < f.size(); ++i) {
            long long idx = (2 * n + f_lo + static_cast<long long>(i)) % N;
            if (idx < 0) idx += N;
            x[static_cast<size_t>(idx)] += f[i] * y[static_cast<size_t>(n)];
        }
    }
}

} // namespace

DwtResult dwt_analyze(const FilterPair& fp, const std::vector<double>& signal, int levels) {
    if (levels < 1) throw std::invalid_argument("dwt_analyze: levels must be >= 1");
    long long N = static_cast<long long>(signal.size());
    if (N % (1LL << levels) != 0)
        throw std::invalid_argument("dwt_analyze: signal length must be divisible by 2^levels");
    if (N < static_cast<long long>(fp.lowpass.size()))
        throw std::invalid_argument("dwt_analyze: signal shorter than the filter");
    DwtResult res;
    res.levels = levels;
    std::vector<double> cur = signal;
    for (int l = 0; l < levels; ++l) {
        res.details.push_back(down_step(cur, fp.highpass, fp.g_lo));
        cur = down_step(cur, fp.lowpass, fp.lo);
    }
    res.approximation = std::move(cur);
    return res;
}

std::vector<double> dwt_synthesize(const FilterPair& fp, const DwtResult& res) {
    if (res.details.size() != static_cast<size_t>(res.levels))
        throw std::invalid_argument("dwt_synthesize: inconsistent level count");
    std::vector<double> cur = res.approximation;
    for (int l = res.levels - 1; l >= 0; --l) {
        const auto& det = res.details[static_cast<size_t>(l)];
        if (det.size() != cur.size())
            throw std::invalid_argument("dwt_synthesize: band shape mismatch");
        std::vector<double> up(cur.size() * 2, 0.0);
        up_step(up, cur, fp.lowpass, fp.lo);
        up_step(up, det, fp.highpass, fp.g_lo);
        cur = std::move(up);
    }
    return cur;
}

} // namespace splinewave
