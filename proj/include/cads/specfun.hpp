#pragma once

#include <cmath>
#include <cstdlib>

#include "cads/jet.hpp"
#include "cads/series.hpp"

namespace cads {

inline double scalar_value(double x) { return x; }
inline double scalar_value(const Jet& x) { return x.value(); }

/// True when x sits on a pole of Gamma (non-positive integer) within tol.
bool is_nonpositive_integer(double x, double tol = 1e-9);

/// Gamma function, >= 12 significant digits on [-30, 30] away from poles.
/// Lanczos rational approximation with reflection for x < 0.5.
double gamma_fn(double x);

/// log Gamma for x > 0.
double log_gamma(double x);

/// Reciprocal Gamma: entire, returns exactly 0 at non-positive integers.
double rgamma(double x);

/// Digamma, >= 10 significant digits away from poles.
double digamma(double x);

/// Pochhammer (a)_n = a (a+1) ... (a+n-1).
double pochhammer(double a, int n);

/// (a)_nu = Gamma(a+nu)/Gamma(a) for real nu where both sides are finite.
double pochhammer_real(double a, double nu);

/// Gauss hypergeometric 2F1(a,b;c;z) for z <= 1.
///
/// Direct series for z <= 1/2, linear 0<->1 connection for 1/2 < z < 1 when
/// c-a-b is not an integer, logarithmic expansions when it is, Gauss sum at
/// z = 1 (requires c-a-b > 0), Pfaff map for z < 0. Terminating parameter
/// cases are summed exactly.
double hyp2f1(double a, double b, double c, double z, const SeriesConfig& cfg = {});

/// Plain Gauss series (templated so profiles can evaluate on Jet).
/// Requires |z| < 1 or a terminating parameter set.
template <typename T>
T hyp2f1_series(double a, double b, double c, const T& z, const SeriesConfig& cfg = {}) {
    T sum(1.0), term(1.0);
    const bool terminates =
        is_nonpositive_integer(a) || is_nonpositive_integer(b);
    int nstop = cfg.max_terms;
    if (is_nonpositive_integer(a)) nstop = static_cast<int>(std::lround(-a));
    if (is_nonpositive_integer(b))
        nstop = std::min(nstop, static_cast<int>(std::lround(-b)));
    for (int n = 0;; ++n) {
        if (terminates && n >= nstop) return sum;
        if (!terminates && n >= cfg.max_terms)
            throw convergence_error("hyp2f1_series: no convergence within max_terms");
        term = term * ((a + n) * (b + n) / ((c + n) * (n + 1.0)));
        term = term * z;
        sum += term;
        if (!terminates) {
            const double t = std::abs(scalar_value(term));
            const double s = std::abs(scalar_value(sum));
            if (t <= cfg.rel_tol * s + cfg.abs_tol && n > 2) return sum;
        }
    }
}

/// Jacobi polynomial P_k^(alpha,beta) by the three-term recurrence.
/// Negative beta is allowed (beta = -1 appears in the gauge-sector limit).
template <typename T>
T jacobi_p(int k, double alpha, double beta, const T& x) {
    if (k == 0) return T(1.0);
    T pm1(1.0);
    T p = x * (0.5 * (alpha + beta + 2.0)) + 0.5 * (alpha - beta);
    for (int n = 2; n <= k; ++n) {
        const double s = alpha + beta;
        const double den = 2.0 * n * (n + s) * (2.0 * n + s - 2.0);
        if (std::abs(den) < 1e-12)
            throw domain_error("jacobi_p: degenerate recurrence coefficients");
        const double aa = (2.0 * n + s - 1.0) * (2.0 * n + s) * (2.0 * n + s - 2.0) / den;
        const double bb =
            (2.0 * n + s - 1.0) * (alpha * alpha - beta * beta) / den;
        const double cc =
            2.0 * (n + alpha - 1.0) * (n + beta - 1.0) * (2.0 * n + s) / den;
        T pn = (x * aa + bb) * p - pm1 * cc;
        pm1 = p;
        p = pn;
    }
    return p;
}

/// Gegenbauer polynomial C_n^alpha.
template <typename T>
T gegenbauer_c(int n, double alpha, const T& x) {
    if (n == 0) return T(1.0);
    T cm1(1.0);
    T c = x * (2.0 * alpha);
    for (int m = 2; m <= n; ++m) {
        T cn = (x * (2.0 * (m + alpha - 1.0)) * c - cm1 * (m + 2.0 * alpha - 2.0)) * (1.0 / m);
        cm1 = c;
        c = cn;
    }
    return c;
}

/// Lerch transcendent Phi(z,s,a) = sum z^n / (n+a)^s for 0 <= z < 1, a > 0.
template <typename T>
T lerch_phi(const T& z, double s, double a, const SeriesConfig& cfg = {}) {
    const double zv = scalar_value(z);
    if (zv < 0.0 || zv >= 1.0) throw domain_error("lerch_phi: need 0 <= z < 1");
    if (a <= 0.0) throw domain_error("lerch_phi: need a > 0");
    T sum = T(1.0) * std::pow(a, -s);
    T zp(1.0);
    for (int n = 1; n < cfg.max_terms; ++n) {
        zp = zp * z;
        sum += zp * std::pow(n + a, -s);
        // tail <= z^(n+1) (n+1+a)^-s / (1-z) for s >= 0
        const double tail =
            std::abs(scalar_value(zp)) * zv * std::pow(n + 1 + a, -s) / (1.0 - zv);
        if (tail <= cfg.rel_tol * std::abs(scalar_value(sum)) + cfg.abs_tol) return sum;
    }
    throw convergence_error("lerch_phi: tolerance unreachable within max_terms");
}

} // namespace cads
