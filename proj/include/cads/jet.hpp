#pragma once

#include <array>
#include <cmath>

namespace cads {

/// Truncated Taylor arithmetic: value plus derivatives up to fourth order.
///
/// Coefficients are stored as c[k] = f^(k)/k!, so products are plain Cauchy
/// convolutions truncated at order four. Radial profiles evaluate on Jet so
/// ODE residuals use exact derivatives instead of finite differences.
class Jet {
public:
    std::array<double, 5> c{};

    Jet() = default;
    explicit Jet(double v) { c[0] = v; }

    static Jet variable(double x0) {
        Jet j;
        j.c[0] = x0;
        j.c[1] = 1.0;
        return j;
    }

    double value() const { return c[0]; }
    double d1() const { return c[1]; }
    double d2() const { return 2.0 * c[2]; }
    double d3() const { return 6.0 * c[3]; }
    double d4() const { return 24.0 * c[4]; }

    Jet& operator+=(const Jet& o) {
        for (int k = 0; k < 5; ++k) c[k] += o.c[k];
        return *this;
    }
    Jet& operator-=(const Jet& o) {
        for (int k = 0; k < 5; ++k) c[k] -= o.c[k];
        return *this;
    }
    Jet& operator*=(double s) {
        for (int k = 0; k < 5; ++k) c[k] *= s;
        return *this;
    }
};

inline Jet operator+(Jet a, const Jet& b) { return a += b; }
inline Jet operator-(Jet a, const Jet& b) { return a -= b; }
inline Jet operator-(const Jet& a) {
    Jet r;
    for (int k = 0; k < 5; ++k) r.c[k] = -a.c[k];
    return r;
}
inline Jet operator*(Jet a, double s) { return a *= s; }
inline Jet operator*(double s, Jet a) { return a *= s; }
inline Jet operator+(Jet a, double s) {
    a.c[0] += s;
    return a;
}
inline Jet operator+(double s, Jet a) {
    a.c[0] += s;
    return a;
}
inline Jet operator-(Jet a, double s) {
    a.c[0] -= s;
    return a;
}
inline Jet operator-(double s, const Jet& a) { return -a + s; }

inline Jet operator*(const Jet& a, const Jet& b) {
    Jet r;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; i + j < 5; ++j) r.c[i + j] += a.c[i] * b.c[j];
    return r;
}

/// Compose outer function with Taylor coefficients b[k] = g^(k)(u0)/k! around
/// u0 = u.c[0] with the inner jet u.
inline Jet jet_compose(const std::array<double, 5>& b, const Jet& u) {
    Jet v = u;
    v.c[0] = 0.0; // nilpotent part
    Jet r(b[0]);
    Jet p(1.0);
    for (int k = 1; k < 5; ++k) {
        p = p * v;
        r += p * b[k];
    }
    return r;
}

inline Jet sin(const Jet& u) {
    const double s = std::sin(u.c[0]), co = std::cos(u.c[0]);
    return jet_compose({s, co, -s / 2.0, -co / 6.0, s / 24.0}, u);
}

inline Jet cos(const Jet& u) {
    const double s = std::sin(u.c[0]), co = std::cos(u.c[0]);
    return jet_compose({co, -s, -co / 2.0, s / 6.0, co / 24.0}, u);
}

inline Jet exp(const Jet& u) {
    const double e = std::exp(u.c[0]);
    return jet_compose({e, e, e / 2.0, e / 6.0, e / 24.0}, u);
}

inline Jet log(const Jet& u) {
    const double x = u.c[0];
    return jet_compose({std::log(x), 1.0 / x, -1.0 / (2.0 * x * x), 1.0 / (3.0 * x * x * x),
                        -1.0 / (4.0 * x * x * x * x)},
                       u);
}

/// u^p for real exponent p; requires u.value() > 0.
inline Jet pow(const Jet& u, double p) {
    const double x = u.c[0];
    std::array<double, 5> b{};
    double coeff = 1.0; // p (p-1) ... / k!
    double xp = std::pow(x, p);
    for (int k = 0; k < 5; ++k) {
        b[k] = coeff * xp;
        coeff *= (p - k) / (k + 1);
        xp /= x;
    }
    return jet_compose(b, u);
}

inline Jet inv(const Jet& u) { return pow(u, -1.0); }

inline Jet operator/(const Jet& a, const Jet& b) { return a * inv(b); }
inline Jet operator/(const Jet& a, double s) { return a * (1.0 / s); }
inline Jet operator/(double s, const Jet& b) { return inv(b) * s; }

inline Jet sqrt(const Jet& u) { return pow(u, 0.5); }
inline Jet tan(const Jet& u) { return sin(u) / cos(u); }
inline Jet atanh(const Jet& u) { return 0.5 * (log(1.0 + u) - log(1.0 - u)); }

} // namespace cads
