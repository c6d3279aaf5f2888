#include "splinewave/coefficients.hpp"
#include "splinewave/bspline.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace splinewave {

namespace {

constexpr double kPi = std::numbers::pi;
// Below this magnitude a quadrature value is dominated by roundoff.
constexpr double kRoundoffFloor = 5e-15;

// Exact autocorrelation samples N_{2m}(m+k), k = 0..m-1, as doubles.
std::vector<double> autocorr_row(int m) {
    auto s = integer_samples(2 * m);
    std::vector<double> row(static_cast<size_t>(m));
    for (int k = 0; k < m; ++k)
        row[static_cast<size_t>(k)] = to_double(s.samples[static_cast<size_t>(m + k)]);
    return row;
}

// Kahan-compensated accumulator.
struct Kahan {
    double s = 0.0, c = 0.0;
    void add(double v) {
        double y = v - c;
        double t = s + y;
        c = (t - s) - y;
        s = t;
    }
};

double lbeta_half(long long n) {
    // log |binom(1/2, n)| for n >= 1.
    return std::lgamma(n - 0.5) - std::lgamma(-0.5) - std::lgamma(n + 1.0);
}

} // namespace

std::string to_string(CoeffKind k) {
    switch (k) {
        case CoeffKind::c: return "c";
        case CoeffKind::b: return "b";
        case CoeffKind::a: return "a";
        case CoeffKind::gamma: return "gamma";
    }
    return "?";
}

std::string to_string(CoeffMethod m) {
    switch (m) {
        case CoeffMethod::quadrature: return "quadrature";
        case CoeffMethod::series: return "series";
        case CoeffMethod::composed: return "composed";
    }
    return "?";
}

double pm_cosine_sum(int m, double theta) {
    auto row = autocorr_row(m);
    double s = row[0];
    for (int k = 1; k < m; ++k) s += 2.0 * row[static_cast<size_t>(k)] * std::cos(k * theta);
    return s;
}

double pm_eval(int m, double theta) {
    if (m < 1) throw std::invalid_argument("pm_eval: order must be >= 1");
    if (m == 1) return 1.0;  // P_1 is identically 1 (the hat's shifts are orthonormal... order-1 case)
    auto roots = negative_roots(m);
    double ct = std::cos(theta);
    double prod = 1.0;
    for (int i = 0; i < m - 1; ++i) {
        double lam = roots[static_cast<size_t>(i)];
        prod *= (1.0 - 2.0 * lam * ct + lam * lam) / std::abs(lam);
    }
    return prod / to_double(factorial(static_cast<unsigned>(2 * m - 1)));
}

int quadrature_nodes(long long j) {
    long long n = 32 * std::llabs(j);
    return static_cast<int>(std::max<long long>(4096, n));
}

namespace {

double fourier_quadrature(int m, long long j, bool inverse_sqrt, int nodes_override) {
    // (1/2pi) integral over the period of cos(j theta) P^{+-1/2}; uniform
    // trapezoid on the periodic grid = plain node average.
    auto row = autocorr_row(m);
    const int N = nodes_override > 0 ? nodes_override : quadrature_nodes(j);
    Kahan acc;
    for (int i = 0; i < N; ++i) {
        double th = -kPi + 2.0 * kPi * i / N;
        double P = row[0];
        for (int k = 1; k < m; ++k) P += 2.0 * row[static_cast<size_t>(k)] * std::cos(k * th);
        double w = std::sqrt(P);
        acc.add(std::cos(j * th) * (inverse_sqrt ? 1.0 / w : w));
    }
    return acc.s / N;
}

} // namespace

double c_quadrature(int m, long long j, int nodes_override) {
    if (m < 2) throw std::invalid_argument("c_quadrature: requires m >= 2");
    return fourier_quadrature(m, j, true, nodes_override);
}

double b_quadrature(int m, long long j, int nodes_override) {
    if (m < 2) throw std::invalid_argument("b_quadrature: requires m >= 2");
    return fourier_quadrature(m, j, false, nodes_override);
}

double R_ratio(long long j, long long k) {
    return std::exp(-0.5 * std::log(kPi) + std::lgamma(k + 1.0) + std::lgamma(j + 0.5) +
                    std::lgamma(k - j + 0.5) - std::lgamma(k + 0.5) - std::lgamma(j + 1.0) -
                    std::lgamma(k - j + 1.0));
}

double S_ratio(long long i, long long k) {
    if (i == k) return 1.0;
    if (i == 0) return 1.0;
    // binom(1/2,n) has sign (-1)^{n-1} for n >= 1; the product of the three
    // sign factors for 1 <= i < k is -1.
    return -std::exp(lbeta_half(i) + lbeta_half(k - i) - lbeta_half(k));
}

namespace {

std::vector<double> recurrence_table(int m, int K, bool use_R, double* gap) {
    if (m < 2) throw std::invalid_argument("recurrence table: requires m >= 2");
    std::vector<double> B(static_cast<size_t>(K) + 1, 0.0);
    if (m == 2) {  // vacuous: single factor in the product, B = 0
        if (gap) *gap = 0.0;
        return B;
    }
    auto mu = mu_values(m);
    auto fun = [&](long long j, long long k) {
        return use_R ? R_ratio(j, k) : S_ratio(j, k);
    };
    double ratio = (mu[1] + 1.0) / (mu[0] + 1.0);
    for (int k = 1; k <= K; ++k) {
        Kahan acc;
        for (int j = 1; j <= k; ++j) acc.add(fun(j, k) * std::pow(ratio, j));
        B[static_cast<size_t>(k)] = acc.s;
    }
    for (int l = 2; l <= m - 2; ++l) {
        std::vector<double> Bn(static_cast<size_t>(K) + 1, 0.0);
        double rat = (mu[static_cast<size_t>(l)] + 1.0) / (mu[static_cast<size_t>(l - 1)] + 1.0);
        for (int k = 1; k <= K; ++k) {
            Kahan acc;
            for (int j = 1; j <= k; ++j)
                acc.add(fun(j, k) * std::pow(rat, j) * (1.0 + B[static_cast<size_t>(j)]));
            Bn[static_cast<size_t>(k)] = acc.s;
        }
        B = std::move(Bn);
    }
    if (gap) *gap = std::abs(B[static_cast<size_t>(K)] - B[static_cast<size_t>(K / 2)]);
    return B;
}

} // namespace

std::vector<double> recurrence_B(int m, int K, double* cauchy_gap) {
    return recurrence_table(m, K, true, cauchy_gap);
}

std::vector<double> recurrence_C(int m, int K, double* cauchy_gap) {
    return recurrence_table(m, K, false, cauchy_gap);
}

RecurrenceLimits amplitude_constants(int m, int K) {
    if (m < 2) throw std::invalid_argument("amplitude_constants: requires m >= 2");
    RecurrenceLimits L;
    L.m = m;
    auto mu = mu_values(m);
    double prod = 1.0;
    for (double u : mu) prod /= std::sqrt(u + 1.0);
    L.A = std::pow(2.0, -(m - 1)) * std::sqrt(to_double(factorial(static_cast<unsigned>(2 * m - 1)))) * prod;
    L.B_table = recurrence_B(m, K, &L.B_cauchy_gap);
    L.B = L.B_table.back();
    L.C_table = recurrence_C(m, K, &L.C_cauchy_gap);
    L.C = L.C_table.back();
    double tilt = std::pow(1.0 + 1.0 / mu.back(), 0.25);
    L.K_c = L.A * (1.0 + L.B) / std::sqrt(kPi) * tilt;
    L.K_b = (1.0 + L.C) / (L.A * std::sqrt(kPi)) / tilt;
    return L;
}

double LogValue::value() const { return sign * std::exp(log_magnitude); }

LogValue c_series(int m, long long j, const RecurrenceLimits& limits) {
    if (m < 2) throw std::invalid_argument("c_series: requires m >= 2");
    if (j < 0) j = -j;  // even sequence
    auto mu = mu_values(m);
    double mul = mu.back() + 1.0;
    const double log4mul = std::log(4.0 * mul);
    // Term ratio tends to 1/mul < 1; truncate when the geometric tail bound
    // drops below 1e-18 relative.
    long long kmax = j + 64;
    {
        double tail_ratio = 1.0 / mul;
        double need = std::log(1e-18) / std::log(tail_ratio);
        kmax = j + std::max<long long>(64, static_cast<long long>(need) + 64);
    }
    if (m > 2 && static_cast<long long>(limits.B_table.size()) <= j)
        throw std::invalid_argument("c_series: B table depth insufficient for requested index");
    std::vector<double> logs;
    logs.reserve(static_cast<size_t>(kmax - j + 1));
    for (long long k = j; k <= kmax; ++k) {
        double lb = std::lgamma(k + 0.5) - std::lgamma(0.5) - std::lgamma(k + 1.0);  // log|binom(-1/2,k)|
        double l2 = std::lgamma(2.0 * k + 1.0) - std::lgamma(double(k - j) + 1.0) -
                    std::lgamma(double(k + j) + 1.0);  // log binom(2k, k-j)
        double Bk = 0.0;
        if (m > 2) {
            size_t idx = std::min(static_cast<size_t>(k), limits.B_table.size() - 1);
            Bk = limits.B_table[idx];
        }
        logs.push_back(lb + l2 - k * log4mul + std::log1p(Bk));
    }
    double M = logs[0];
    for (double v : logs) M = std::max(M, v);
    Kahan acc;
    for (double v : logs) acc.add(std::exp(v - M));
    LogValue out;
    out.sign = (j % 2 == 0) ? 1 : -1;
    out.log_magnitude = M + std::log(acc.s) + std::log(limits.A);
    return out;
}

namespace {

int reliable_limit_of(const std::vector<double>& values, int window) {
    // Largest |j| whose magnitude is still clearly above the roundoff floor.
    int lim = 0;
    for (int j = 0; j <= window; ++j) {
        double v = values[static_cast<size_t>(j + window)];
        if (std::abs(v) > 20.0 * kRoundoffFloor) lim = j;
        else break;
    }
    return lim;
}

} // namespace

CoefficientTable build_c_table(int m, int J, const RecurrenceLimits& limits,
                               bool series_tail) {
    CoefficientTable t;
    t.kind = CoeffKind::c;
    t.m = m;
    t.window = J;
    t.values.assign(static_cast<size_t>(2 * J + 1), 0.0);
    for (int j = 0; j <= J; ++j) {
        double v = c_quadrature(m, j);
        t.values[static_cast<size_t>(J + j)] = v;
        t.values[static_cast<size_t>(J - j)] = v;
    }
    t.reliable_limit = reliable_limit_of(t.values, J);
    t.method = CoeffMethod::quadrature;
    if (series_tail) {
        for (int j = t.reliable_limit + 1; j <= J; ++j) {
            double v = c_series(m, j, limits).value();
            t.values[static_cast<size_t>(J + j)] = v;
            t.values[static_cast<size_t>(J - j)] = v;
        }
        t.reliable_limit = J;
        t.method = CoeffMethod::series;
    }
    // Certified tail bound from the proven envelope with a 2x safety factor.
    double a0 = alpha0(m);
    t.tail_bound = 2.0 * limits.K_c * std::exp(-a0 * (J + 1)) / std::sqrt(double(J + 1));
    return t;
}

CoefficientTable build_b_table(int m, int J, const RecurrenceLimits& limits) {
    CoefficientTable t;
    t.kind = CoeffKind::b;
    t.m = m;
    t.window = J;
    t.values.assign(static_cast<size_t>(2 * J + 1), 0.0);
    for (int j = 0; j <= J; ++j) {
        double v = b_quadrature(m, j);
        t.values[static_cast<size_t>(J + j)] = v;
        t.values[static_cast<size_t>(J - j)] = v;
    }
    t.reliable_limit = reliable_limit_of(t.values, J);
    t.method = CoeffMethod::quadrature;
    double a0 = alpha0(m);
    t.tail_bound = 2.0 * limits.K_b * std::exp(-a0 * (J + 1)) / std::pow(double(J + 1), 1.5);
    return t;
}

double a_coeff(const CoefficientTable& c, const CoefficientTable& b,
               long long j, double tail_eps) {
    if (c.m != b.m) throw std::invalid_argument("a_coeff: mismatched orders");
    double floor_eps = std::max(c.tail_bound, b.tail_bound);
    if (tail_eps < floor_eps)
        throw std::invalid_argument("a_coeff: requested tail below the tables' certified floor");
    const int m = c.m;
    // a_j = 2^{1-m} sum_i binom(m,i) F(j-i), F(n) = sum_t c_t b_{n-2t}.
    double tot = 0.0;
    for (int i = 0; i <= m; ++i) {
        long long n = j - i;
        Kahan acc;
        for (long long t = -c.window; t <= c.window; ++t) {
            long long bi = n - 2 * t;
            if (bi > b.window || bi < -b.window) continue;
            acc.add(c.at(t) * b.at(bi));
        }
        tot += to_double(binomial(static_cast<unsigned>(m), static_cast<unsigned>(i))) * acc.s;
    }
    return std::pow(2.0, 1 - m) * tot;
}

double gamma_coeff(const CoefficientTable& a, const CoefficientTable& c,
                   long long j, double tail_eps) {
    if (a.m != c.m) throw std::invalid_argument("gamma_coeff: mismatched orders");
    if (tail_eps < std::max(a.tail_bound, c.tail_bound))
        throw std::invalid_argument("gamma_coeff: requested tail below the tables' certified floor");
    Kahan acc;
    for (long long k = -c.window; k <= c.window; ++k) {
        long long ai = k - j + 1;
        if (ai > a.window || ai < -a.window) continue;
        double sgn = (k % 2 == 0) ? 1.0 : -1.0;
        acc.add(sgn * a.at(ai) * c.at(k));
    }
    return ((j % 2 == 0) ? 1.0 : -1.0) * acc.s;
}

CoefficientTable build_a_table(int m, const CoefficientTable& c,
                               const CoefficientTable& b, int J, double tail_eps) {
    CoefficientTable t;
    t.kind = CoeffKind::a;
    t.m = m;
    t.window = J;
    t.values.assign(static_cast<size_t>(2 * J + 1), 0.0);
    for (int j = -J; j <= J; ++j)
        t.values[static_cast<size_t>(j + J)] = a_coeff(c, b, j, tail_eps);
    t.method = CoeffMethod::composed;
    t.tail_bound = 4.0 * std::max(c.tail_bound, b.tail_bound);
    t.reliable_limit = reliable_limit_of(t.values, J);
    return t;
}

CoefficientTable build_gamma_table(int m, const CoefficientTable& a,
                                   const CoefficientTable& c, int J, double tail_eps) {
    CoefficientTable t;
    t.kind = CoeffKind::gamma;
    t.m = m;
    t.window = J;
    t.values.assign(static_cast<size_t>(2 * J + 1), 0.0);
    for (int j = -J; j <= J; ++j)
        t.values[static_cast<size_t>(j + J)] = gamma_coeff(a, c, j, tail_eps);
    t.method = CoeffMethod::composed;
    t.tail_bound = 4.0 * std::max(a.tail_bound, c.tail_bound);
    t.reliable_limit = reliable_limit_of(t.values, J);
    return t;
}

} // namespace splinewave
