// Orthonormal filter pairs derived from the two-scale coefficients and a
// multi-level periodic discrete wavelet transform with perfect
// reconstruction.
//
//   h_j = a_j / sqrt(2)          (lowpass;  sum h = sqrt(2))
//   g_j = (-1)^j h_{1-j}         (highpass; alternating flip)
#pragma once

#include "wavelet_system.hpp"
#include <vector>

namespace splinewave {

struct FilterPair {
    int m = 0;
    int lo = 0;                  // first index of the stored window
    std::vector<double> lowpass;   // h_{lo..lo+len-1}
    std::vector<double> highpass;  // g over the mirrored window
    int g_lo = 0;
    double truncation_eps = 0.0;
    double centroid = 0.0;       // energy centroid of h (recorded offset)

    double h(long long j) const {
        long long i = j - lo;
        return (i >= 0 && i < (long long)lowpass.size()) ? lowpass[i] : 0.0;
    }
    double g(long long j) const {
        long long i = j - g_lo;
        return (i >= 0 && i < (long long)highpass.size()) ? highpass[i] : 0.0;
    }
};

struct DwtResult {
    int levels = 0;
    std::vector<std::vector<double>> details;  // details[l], l = 0 finest
    std::vector<double> approximation;
};

// Truncate and normalize the filter pair; indices with |h| below
// eps/sqrt(2) outside the core are dropped.  Throws if eps is below the
// certified floor of the a-table.
FilterPair derive_filters(const WaveletSystem& sys, double eps);

// Periodic convolve-and-downsample cascade.  Signal length must be
// divisible by 2^levels and at least the filter length.
DwtResult dwt_analyze(const FilterPair& fp, const std::vector<double>& signal,
                      int levels);

// Adjoint cascade (synthesis); exact inverse up to truncation error.
std::vector<double> dwt_synthesize(const FilterPair& fp, const DwtResult& res);

} // namespace splinewave
