#include "splinewave/bspline.hpp"

#include <cmath>

namespace splinewave {

double eval_bspline(int m, double x) {
    if (m < 1) throw std::invalid_argument("eval_bspline: order must be >= 1");
    if (x < 0.0 || x >= m) return 0.0;
    if (m == 1) return 1.0;
    // Iterative Cox-de Boor on the single row of values N_1(x-k).
    // After pass mm the row holds N_mm(x - k), k = 0..mm-1 shifted so that
    // entry k corresponds to N_mm evaluated at x - k... we keep it simple
    // and recurse on shifted evaluations instead.
    // N_m(x) = [x N_{m-1}(x) + (m-x) N_{m-1}(x-1)] / (m-1).
    // Build bottom-up over the translates that can contribute.
    int k0 = static_cast<int>(std::floor(x));  // N_1(x-k) = 1 iff k = k0
    // vals[k] = N_mm(x - (k0 - k)), k = 0..mm-1 (translate k0-k has support
    // containing x when 0 <= x-(k0-k) < mm).
    std::vector<double> vals(static_cast<size_t>(m), 0.0);
    vals[0] = 1.0;  // N_1(x - k0)
    for (int mm = 2; mm <= m; ++mm) {
        for (int k = mm - 1; k >= 0; --k) {
            double t = x - (k0 - k);  // evaluation point of this translate
            double left = (k >= 1) ? vals[k - 1] : 0.0;   // N_{mm-1}(t-1)... see below
            // vals currently holds N_{mm-1}(x - (k0 - i)) at index i.
            // For translate k: N_mm(t) = [t N_{mm-1}(t) + (mm-t) N_{mm-1}(t-1)]/(mm-1)
            // where N_{mm-1}(t) is vals[k] (same translate) and
            // N_{mm-1}(t-1) = N_{mm-1}(x - (k0-k) - 1) = vals[k-1].
            double self = (k < mm - 1) ? vals[k] : 0.0;
            vals[k] = (t * self + (mm - t) * left) / (mm - 1);
        }
    }
    // The value we want is N_m(x) itself: translate with k0 - k = 0, k = k0.
    if (k0 < 0 || k0 >= m) return 0.0;
    return vals[static_cast<size_t>(k0)];
}

RationalSampleVector integer_samples(int m) {
    if (m < 1) throw std::invalid_argument("integer_samples: order must be >= 1");
    // Integer-sample recurrence: N_m(k) = [k N_{m-1}(k) + (m-k) N_{m-1}(k-1)]/(m-1).
    std::vector<Rational> cur(2, Rational(0));
    cur[0] = 1;  // N_1(0) = 1 (half-open convention), N_1(1) = 0
    for (int mm = 2; mm <= m; ++mm) {
        std::vector<Rational> nxt(static_cast<size_t>(mm) + 1, Rational(0));
        for (int k = 0; k <= mm; ++k) {
            Rational left = (k >= 1 && k - 1 < (int)cur.size()) ? cur[k - 1] : Rational(0);
            Rational self = (k < (int)cur.size()) ? cur[k] : Rational(0);
            nxt[k] = (Rational(k) * self + Rational(mm - k) * left) / Rational(mm - 1);
        }
        cur = std::move(nxt);
    }
    RationalSampleVector out;
    out.m = m;
    out.samples = std::move(cur);
    return out;
}

PiecewisePolynomial piecewise_form(int m) {
    if (m < 1) throw std::invalid_argument("piecewise_form: order must be >= 1");
    // pieces[k][d]: coefficient of x^d on [k, k+1).  Recurrence:
    //   N_m(x) = [x N_{m-1}(x) + (m-x) N_{m-1}(x-1)] / (m-1)
    // with the shifted piece re-expanded in the global variable.
    PiecewisePolynomial cur;
    cur.m = 1;
    cur.pieces = {{Rational(1)}};
    for (int mm = 2; mm <= m; ++mm) {
        PiecewisePolynomial nxt;
        nxt.m = mm;
        nxt.pieces.assign(static_cast<size_t>(mm),
                          std::vector<Rational>(static_cast<size_t>(mm), Rational(0)));
        for (int k = 0; k < mm; ++k) {
            auto& row = nxt.pieces[static_cast<size_t>(k)];
            // x * N_{mm-1} piece on [k, k+1)
            if (k < mm - 1) {
                const auto& p = cur.pieces[static_cast<size_t>(k)];
                for (size_t d = 0; d < p.size(); ++d) row[d + 1] += p[d];
            }
            // (mm - x) * N_{mm-1}(x-1): piece k-1 of N_{mm-1} shifted by 1.
            if (k >= 1) {
                const auto& p = cur.pieces[static_cast<size_t>(k - 1)];
                // q(x) = p(x-1) expanded via binomials.
                std::vector<Rational> q(p.size() + 0, Rational(0));
                q.assign(p.size(), Rational(0));
                for (size_t d = 0; d < p.size(); ++d) {
                    // (x-1)^d = sum_e binom(d,e) x^e (-1)^{d-e}
                    for (size_t e = 0; e <= d; ++e) {
                        Rational term = Rational(binomial((unsigned)d, (unsigned)e));
                        if ((d - e) % 2) term = -term;
                        q[e] += p[d] * term;
                    }
                }
                for (size_t d = 0; d < q.size(); ++d) {
                    row[d] += Rational(mm) * q[d];
                    row[d + 1] -= q[d];
                }
            }
            for (auto& v : row) v /= Rational(mm - 1);
        }
        cur = std::move(nxt);
    }
    return cur;
}

double eval_piecewise(const PiecewisePolynomial& p, double x) {
    if (x < 0.0 || x >= p.m) return 0.0;
    int k = static_cast<int>(std::floor(x));
    if (k >= p.m) return 0.0;
    const auto& row = p.pieces[static_cast<size_t>(k)];
    // Horner in exact rational arithmetic: a double is a binary fraction, so
    // the only rounding is the final conversion.  The monomial coefficients
    // grow like m^m and cancel heavily; floating Horner would lose digits.
    Rational xr(x);
    Rational acc(0);
    for (size_t d = row.size(); d-- > 0;) acc = acc * xr + row[d];
    return to_double(acc);
}

Rational autocorrelation_at(int m, long long n) {
    if (m < 1) throw std::invalid_argument("autocorrelation_at: order must be >= 1");
    if (n >= m || n <= -m) return Rational(0);
    auto s = integer_samples(2 * m);
    return s.samples[static_cast<size_t>(m + n)];
}

Rational moment(int m, int p) {
    if (m < 1) throw std::invalid_argument("moment: order must be >= 1");
    if (p < 0) throw std::invalid_argument("moment: power must be >= 0");
    auto pw = piecewise_form(m);
    Rational total(0);
    for (int k = 0; k < m; ++k) {
        const auto& row = pw.pieces[static_cast<size_t>(k)];
        // integral over [k, k+1) of x^p * sum_d row[d] x^d
        for (size_t d = 0; d < row.size(); ++d) {
            int e = p + static_cast<int>(d) + 1;
            Rational hi = Rational(k + 1), lo = Rational(k);
            Rational hip(1), lop(1);
            for (int i = 0; i < e; ++i) { hip *= hi; lop *= lo; }
            total += row[d] * (hip - lop) / Rational(e);
        }
    }
    return total;
}

} // namespace splinewave
