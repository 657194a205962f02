#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <vector>

#include "cads/series.hpp"

namespace cads {

/// Global coordinates (t, r, angles) on covering anti-de Sitter space.
/// r lies in [0, pi/2); the last angle is azimuthal in [0, 2pi).
struct Point {
    double t = 0.0;
    double r = 0.0;
    std::vector<double> angles;
};

/// Flat-space embedding X^0..X^d with signature (+, -, ..., -, +).
struct EmbeddingVector {
    std::vector<double> x;
};

struct CurvatureConstants {
    double scalar_r;      // d (d-1) a^2
    double ricci_factor;  // (d-1) a^2
    double lambda_cosm;   // (d-2)(d-1) a^2 / 2
};

/// Scalar field sampled at Points. zonal_l tags fields of the form
/// e^{-i w t} f(r) Y_l so the sphere Laplacian can be applied exactly.
struct Field {
    std::function<std::complex<double>(const Point&)> eval;
    std::optional<int> zonal_l;
};

enum class LadderDirection { raise_energy, lower_energy };

void validate_point(const Point& p, int d);

/// Cartesian unit vector in R^{d-1} for the sphere chart of S^{d-2}.
std::vector<double> sphere_unit_vector(const std::vector<double>& angles);

/// Zonal harmonic on S^{d-2} (d >= 3), normalized to 1 at theta = 0.
double zonal_harmonic(int d, int l, double theta);

EmbeddingVector embed(const Point& p, int d, double a);

/// a^2 eta_AB X^A X'^B; equals sec r cos t against the origin.
double invariant_z(const Point& x, const Point& y, int d, double a);

/// Residual of the hyperboloid constraint, a^2 (X0^2 + Xd^2 - |vec X|^2) - 1.
double hyperboloid_residual(const EmbeddingVector& v, double a);

CurvatureConstants curvature(int d, double a);

/// Apply the wave operator by central differences (one Richardson halving);
/// the sphere Laplacian uses the zonal eigenvalue -l(l+d-3).
std::complex<double> laplacian_apply(const Field& f, const Point& p, int d, double a,
                                     double step = 1e-3);

/// Energy generator i d/dt by central differences.
std::complex<double> energy_apply(const Field& f, const Point& p, double step = 1e-3);

/// d = 4 energy raising/lowering operators along a spatial axis (1..3),
/// derivatives by Richardson-extrapolated central differences.
std::complex<double> ladder_apply_d4(const Field& f, const Point& p, LadderDirection dir,
                                     int axis, double step = 1e-3);

/// Wrap a ladder application as a new Field (for nested commutator checks).
Field ladder_field_d4(const Field& f, LadderDirection dir, int axis, double step = 1e-3);

} // namespace cads
