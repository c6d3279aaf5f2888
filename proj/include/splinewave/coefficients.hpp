// The four coefficient sequences that drive the construction:
//   c_j : Fourier coefficients of 1/sqrt(P_m)   (scaling function mix)
//   b_j : Fourier coefficients of   sqrt(P_m)   (convolution inverse of c)
//   a_j : two-scale (refinement) coefficients,  sum_j a_j = 2
//   gamma_j : wavelet mix coefficients
// plus the recurrence constants A, B, C and amplitude constants K_c, K_b,
// and the positive-term series representation used for the deep tail of c.
#pragma once

#include "euler_frobenius.hpp"
#include <optional>
#include <string>
#include <vector>

namespace splinewave {

enum class CoeffKind { c, b, a, gamma };
enum class CoeffMethod { quadrature, series, composed };

std::string to_string(CoeffKind k);
std::string to_string(CoeffMethod m);

// A finite symmetric window of one sequence with a certified tail bound.
struct CoefficientTable {
    CoeffKind kind = CoeffKind::c;
    int m = 0;
    int window = 0;                  // indices -window..window
    std::vector<double> values;      // size 2*window+1, index j+window
    double tail_bound = 0.0;         // bound on |value| for |j| > window
    CoeffMethod method = CoeffMethod::quadrature;
    // Largest |j| at which the stored value is above the double-precision
    // quadrature roundoff floor; beyond it stored values are noise-level.
    int reliable_limit = 0;

    double at(long long j) const {
        if (j > window || j < -window) return 0.0;
        return values[static_cast<size_t>(j + window)];
    }
};

// Limits of the finite-product recurrences of the tail analysis.
struct RecurrenceLimits {
    int m = 0;
    double A = 0.0;                  // 2^{-(m-1)} sqrt((2m-1)!) prod (mu_i+1)^{-1/2}
    std::vector<double> B_table;     // B_k^{m-2}, k = 0..K
    double B = 0.0;                  // deepest table entry
    double B_cauchy_gap = 0.0;       // |B_K - B_{K/2}|
    std::vector<double> C_table;
    double C = 0.0;
    double C_cauchy_gap = 0.0;
    double K_c = 0.0;                // (A(1+B)/sqrt(pi)) (1+1/mu_{m-1})^{1/4}
    double K_b = 0.0;                // ((1+C)/(A sqrt(pi))) (1+1/mu_{m-1})^{-1/4}
};

// P_m(cos theta/2) = sum_k N_{2m}(m+k) cos(k theta), evaluated through the
// root product formula
//   P_m = (1/(2m-1)!) prod_{k=1}^{m-1} (1 - 2 lambda_k cos theta + lambda_k^2)/|lambda_k|.
// Strictly positive, 2*pi periodic, even.  P_1 is identically 1.
double pm_eval(int m, double theta);

// Same quantity through the cosine sum over exact autocorrelation samples;
// used as the cross-validation oracle for pm_eval.
double pm_cosine_sum(int m, double theta);

// Number of trapezoid nodes used for index j (max(4096, 32|j|)).
int quadrature_nodes(long long j);

// c_j = (1/2pi) integral cos(j theta) / sqrt(P_m) dtheta via composite
// trapezoid on the uniform periodic grid with compensated summation.
// Even in j.  Values with |c_j| below ~5e-15 are at the roundoff floor
// (see CoefficientTable::reliable_limit); use c_series beyond.
// nodes_override > 0 replaces the default node count (convergence checks).
double c_quadrature(int m, long long j, int nodes_override = 0);

// b_j = (1/2pi) integral sqrt(P_m) cos(j theta) dtheta, same scheme.
double b_quadrature(int m, long long j, int nodes_override = 0);

// Generalized-binomial helpers of the tail recurrences, via log-gamma.
// R(j,k) = |binom(-1/2,j)| binom(2k, k-j) / (|binom(-1/2,k)| binom(2k,k)) form
// used by the B recurrence; bounded by sqrt(2 e^3).
double R_ratio(long long j, long long k);
// S(i,k) = binom(1/2,i) binom(1/2,k-i) / binom(1/2,k); equals 1 at i = k and
// is negative for 1 <= i < k.
double S_ratio(long long i, long long k);

// B recurrence: B_k^1 = sum_{j=1}^k R(j,k) ((mu_2+1)/(mu_1+1))^j, then
// B_k^{l+1} = sum_j R(j,k) ((mu_{l+2}+1)/(mu_{l+1}+1))^j (1 + B_j^l).
// For m = 2 the recurrence is vacuous and B = 0.
// Returns table B_k^{m-2} (k = 0..K) with the Cauchy gap |B_K - B_{K/2}|.
std::vector<double> recurrence_B(int m, int K, double* cauchy_gap = nullptr);
// Same with S in place of R.
std::vector<double> recurrence_C(int m, int K, double* cauchy_gap = nullptr);

// A, B, C, K_c, K_b for order m (recurrence depth K).
RecurrenceLimits amplitude_constants(int m, int K = 400);

// Deep-tail series for c_j (exact pre-limit form):
//   c_j = (-1)^j A sum_{k>=j} |binom(-1/2,k)| binom(2k,k-j)
//                          (4(mu_{m-1}+1))^{-k} (1 + B_k^{m-2}).
// All terms are positive; the sum is accumulated in log space.  Returns
// sign (+1/-1) and log|c_j|.  Requires B_table depth >= j + margin.
struct LogValue { int sign = 0; double log_magnitude = 0.0; double value() const; };
LogValue c_series(int m, long long j, const RecurrenceLimits& limits);

// Build a c or b table over [-J, J].  c tables use quadrature inside the
// reliable range; if series_tail is set the unreliable portion of a c table
// is replaced by series values (exact sign and log magnitude).
CoefficientTable build_c_table(int m, int J, const RecurrenceLimits& limits,
                               bool series_tail);
CoefficientTable build_b_table(int m, int J, const RecurrenceLimits& limits);

// Two-scale coefficients by composition of the c and b tables:
//   a_j = 2^{1-m} sum_{i=0}^{m} binom(m,i) F(j-i),
//   F(n) = sum_t c_t b_{n-2t}   (F even in n).
// The inner sums are truncated by the decay envelopes; tail_eps is the
// requested certified remainder.
double a_coeff(const CoefficientTable& c, const CoefficientTable& b,
               long long j, double tail_eps);

// Wavelet coefficients gamma_j = (-1)^j sum_k (-1)^k a_{k-j+1} c_k.
double gamma_coeff(const CoefficientTable& a, const CoefficientTable& c,
                   long long j, double tail_eps);

CoefficientTable build_a_table(int m, const CoefficientTable& c,
                               const CoefficientTable& b, int J, double tail_eps);
CoefficientTable build_gamma_table(int m, const CoefficientTable& a,
                                   const CoefficientTable& c, int J, double tail_eps);

} // namespace splinewave
