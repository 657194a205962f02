#include "cads/geometry.hpp"

#include <cmath>

#include "cads/specfun.hpp"

namespace cads {

namespace {
constexpr double kPi = 3.14159265358979323846;
using cplx = std::complex<double>;
} // namespace

void validate_point(const Point& p, int d) {
    if (d < 2) throw domain_error("point: d >= 2 required");
    if (!(p.r >= 0.0 && p.r < kPi / 2.0))
        throw domain_error("point: r must lie in [0, pi/2)");
    if (static_cast<int>(p.angles.size()) != d - 2)
        throw domain_error("point: expected d-2 angles");
}

std::vector<double> sphere_unit_vector(const std::vector<double>& angles) {
    if (angles.empty()) return {1.0};
    if (angles.size() == 1) return {std::cos(angles[0]), std::sin(angles[0])};
    std::vector<double> inner(angles.begin() + 1, angles.end());
    std::vector<double> m = sphere_unit_vector(inner);
    std::vector<double> out(m.size() + 1);
    const double s = std::sin(angles[0]);
    for (size_t i = 0; i < m.size(); ++i) out[i] = s * m[i];
    out.back() = std::cos(angles[0]);
    return out;
}

double zonal_harmonic(int d, int l, double theta) {
    if (d < 3) throw domain_error("zonal_harmonic: d >= 3 required");
    if (l == 0) return 1.0;
    if (d == 3) return std::cos(l * theta);
    const double alpha = 0.5 * (d - 3);
    const double norm = pochhammer(2.0 * alpha, l) / gamma_fn(l + 1.0); // C_l^alpha(1)
    return gegenbauer_c(l, alpha, std::cos(theta)) / norm;
}

EmbeddingVector embed(const Point& p, int d, double a) {
    validate_point(p, d);
    EmbeddingVector v;
    v.x.assign(d + 1, 0.0);
    const double sec = 1.0 / std::cos(p.r);
    v.x[0] = sec * std::sin(p.t) / a;
    v.x[d] = -sec * std::cos(p.t) / a;
    const auto n = sphere_unit_vector(p.angles);
    const double tn = std::tan(p.r) / a;
    for (int i = 0; i < d - 1; ++i) v.x[1 + i] = tn * n[i];
    return v;
}

double hyperboloid_residual(const EmbeddingVector& v, double a) {
    const int d = static_cast<int>(v.x.size()) - 1;
    double norm = v.x[0] * v.x[0] + v.x[d] * v.x[d];
    for (int i = 1; i < d; ++i) norm -= v.x[i] * v.x[i];
    return a * a * norm - 1.0;
}

double invariant_z(const Point& x, const Point& y, int d, double a) {
    const auto vx = embed(x, d, a), vy = embed(y, d, a);
    double dot = vx.x[0] * vy.x[0] + vx.x[d] * vy.x[d];
    for (int i = 1; i < d; ++i) dot -= vx.x[i] * vy.x[i];
    return a * a * dot;
}

CurvatureConstants curvature(int d, double a) {
    if (d < 2) throw domain_error("curvature: d >= 2 required");
    CurvatureConstants c;
    c.scalar_r = d * (d - 1) * a * a;
    c.ricci_factor = (d - 1) * a * a;
    c.lambda_cosm = 0.5 * (d - 2) * (d - 1) * a * a;
    return c;
}

namespace {

cplx second_diff_t(const Field& f, const Point& p, double h) {
    Point q = p;
    q.t = p.t + h;
    cplx fp = f.eval(q);
    q.t = p.t - h;
    cplx fm = f.eval(q);
    return (fp - 2.0 * f.eval(p) + fm) / (h * h);
}

cplx second_diff_r(const Field& f, const Point& p, double h) {
    Point q = p;
    q.r = p.r + h;
    cplx fp = f.eval(q);
    q.r = p.r - h;
    cplx fm = f.eval(q);
    return (fp - 2.0 * f.eval(p) + fm) / (h * h);
}

cplx first_diff_r(const Field& f, const Point& p, double h) {
    Point q = p;
    q.r = p.r + h;
    cplx fp = f.eval(q);
    q.r = p.r - h;
    cplx fm = f.eval(q);
    return (fp - fm) / (2.0 * h);
}

cplx laplacian_once(const Field& f, const Point& p, int d, double a, double h) {
    const double cr = std::cos(p.r), sr = std::sin(p.r);
    const double cot = cr / sr;
    const int l = *f.zonal_l;
    cplx out = -a * a * cr * cr * (second_diff_t(f, p, h) - second_diff_r(f, p, h));
    out += (d - 2) * a * a * cot * first_diff_r(f, p, h);
    out += a * a * cot * cot * (-static_cast<double>(l) * (l + d - 3)) * f.eval(p);
    return out;
}

} // namespace

std::complex<double> laplacian_apply(const Field& f, const Point& p, int d, double a,
                                     double step) {
    validate_point(p, d);
    if (!f.zonal_l)
        throw domain_error("laplacian_apply: field carries no zonal index");
    if (p.r - step <= 0.0 || p.r + step >= kPi / 2.0)
        throw domain_error("laplacian_apply: stencil leaves the chart");
    const cplx coarse = laplacian_once(f, p, d, a, step);
    const cplx fine = laplacian_once(f, p, d, a, step / 2.0);
    return (4.0 * fine - coarse) / 3.0;
}

std::complex<double> energy_apply(const Field& f, const Point& p, double step) {
    auto once = [&](double h) {
        Point q = p;
        q.t = p.t + h;
        cplx fp = f.eval(q);
        q.t = p.t - h;
        cplx fm = f.eval(q);
        return cplx(0.0, 1.0) * (fp - fm) / (2.0 * h);
    };
    return (4.0 * once(step / 2.0) - once(step)) / 3.0;
}

namespace {

// first derivatives along t, r, theta, phi by central differences
struct Derivs {
    cplx dt, dr, dtheta, dphi;
};

Derivs first_derivs_d4(const Field& f, const Point& p, double h) {
    Derivs d;
    Point q = p;
    q.t = p.t + h;
    cplx fp = f.eval(q);
    q.t = p.t - h;
    d.dt = (fp - f.eval(q)) / (2.0 * h);
    q = p;
    q.r = p.r + h;
    fp = f.eval(q);
    q.r = p.r - h;
    d.dr = (fp - f.eval(q)) / (2.0 * h);
    q = p;
    q.angles[0] = p.angles[0] + h;
    fp = f.eval(q);
    q.angles[0] = p.angles[0] - h;
    d.dtheta = (fp - f.eval(q)) / (2.0 * h);
    q = p;
    q.angles[1] = p.angles[1] + h;
    fp = f.eval(q);
    q.angles[1] = p.angles[1] - h;
    d.dphi = (fp - f.eval(q)) / (2.0 * h);
    return d;
}

cplx ladder_once(const Field& f, const Point& p, LadderDirection dir, int axis, double h) {
    const double r = p.r, theta = p.angles[0], phi = p.angles[1];
    const double sr = std::sin(r), cr = std::cos(r);
    const double st = std::sin(theta), ct = std::cos(theta);
    const double sp = std::sin(phi), cp = std::cos(phi);
    const Derivs dv = first_derivs_d4(f, p, h);

    double zk_over_r = 0.0;
    cplx rk;
    switch (axis) {
        case 1:
            zk_over_r = st * cp;
            rk = st * cp * cr * dv.dr + ct * cp / sr * dv.dtheta - sp / (sr * st) * dv.dphi;
            break;
        case 2:
            zk_over_r = st * sp;
            rk = st * sp * cr * dv.dr + ct * sp / sr * dv.dtheta + cp / (sr * st) * dv.dphi;
            break;
        case 3:
            zk_over_r = ct;
            rk = ct * cr * dv.dr - st / sr * dv.dtheta;
            break;
        default:
            throw domain_error("ladder_apply_d4: axis must be 1, 2, or 3");
    }

    const double sign = (dir == LadderDirection::raise_energy) ? -1.0 : 1.0;
    // M_k^{+-} = -e^{-+ i t} sin r (z^k/r) d_t -+ i e^{-+ i t} R_k
    const cplx phase = std::exp(cplx(0.0, sign * p.t));
    return -phase * sr * zk_over_r * dv.dt + cplx(0.0, sign) * phase * rk;
}

} // namespace

std::complex<double> ladder_apply_d4(const Field& f, const Point& p, LadderDirection dir,
                                     int axis, double step) {
    validate_point(p, 4);
    if (p.r - step <= 0.0 || p.r + step >= kPi / 2.0)
        throw domain_error("ladder_apply_d4: stencil leaves the chart");
    const double margin = 2.0 * step;
    if (p.angles[0] < margin || p.angles[0] > kPi - margin)
        throw domain_error("ladder_apply_d4: theta too close to a coordinate pole");
    const cplx coarse = ladder_once(f, p, dir, axis, step);
    const cplx fine = ladder_once(f, p, dir, axis, step / 2.0);
    return (4.0 * fine - coarse) / 3.0;
}

Field ladder_field_d4(const Field& f, LadderDirection dir, int axis, double step) {
    Field out;
    out.eval = [f, dir, axis, step](const Point& p) {
        return ladder_apply_d4(f, p, dir, axis, step);
    };
    out.zonal_l = std::nullopt;
    return out;
}

} // namespace cads
