#pragma once

#include <functional>
#include <string>
#include <utility>

#include "cads/jet.hpp"
#include "cads/series.hpp"

namespace cads {

enum class ModeFamily {
    dirichlet,
    neumann,
    massless_high, // E0 = d/2
    massless_low,  // E0 = d/2 - 1
    degenerate,    // E0 = (d-1)/2 + m
    singleton,     // E0 = (d-3)/2, k = 0
    gauge,         // E0 = (d-3)/2 sector, decay (d+1)/2
    dd2,
    dn2,
    nd2,
    nn2
};

const char* family_name(ModeFamily f);
ModeFamily family_from_name(const std::string& name);

/// Complete label of a mode family member.
struct ModeSpec {
    ModeFamily family = ModeFamily::dirichlet;
    int d = 4;
    double e0 = 2.0;
    int l = 0;
    int k = 0;
    double a = 1.0;
};

/// Evaluable radial function with its endpoint exponents. The jet evaluator
/// carries the normalization constant and exact derivatives to fourth order.
struct RadialProfile {
    std::function<Jet(double)> jet;
    double exponent_origin = 0.0;
    double exponent_boundary = 0.0;
    double normalization = 1.0;

    double value(double r) const { return jet(r).value(); }
};

struct MassParams {
    double m0_sq;       // a^2 E0 (E0 - d + 1)
    double lambda_conf; // a^2 (E0 - d/2)(E0 - d/2 + 1)
    double bf_bound;    // -(d-1)^2 a^2 / 4
};

/// Throws domain_error naming the violated invariant; fills fixed-E0 labels.
void validate(ModeSpec& spec);

/// Canonical E0 for families whose label is fixed by (family, d).
double canonical_e0(const ModeSpec& spec);

/// True when the spec sits in the limit-point regime (no boundary-condition
/// choice; the Dirichlet set below (d-3)/2 equals a Neumann set and vice versa).
bool is_limit_point(const ModeSpec& spec);

MassParams mass_from_e0(double e0, int d, double a);

/// Both indicial roots (E0, d-1-E0); throws below the stability bound.
std::pair<double, double> e0_from_mass(double m0_sq, int d, double a);

double frequency(const ModeSpec& spec);

/// Normalized radial profile of the requested mode.
RadialProfile radial_profile(const ModeSpec& spec);

/// z -> 1 connection coefficients (C1, C2) of the interior solution at
/// frequency omega; degenerate when E0 - (d-1)/2 is an integer.
std::pair<double, double> boundary_coeffs(int d, double e0, int l, double omega);

/// Log-free polynomial mode at E0 = (d-1)/2 + m.
RadialProfile degenerate_profile(int d, int m, int l, int k, double a = 1.0);

/// Limit of the Neumann set at E0 -> (d-3)/2: zero for k = 0, the gauge
/// profile with index k-1 for k >= 1.
RadialProfile neumann_singleton_limit(int d, int l, int k, double a = 1.0);

/// Radial equation residual at r, relative to the largest operator term.
double residual_q(const ModeSpec& spec, double r);

/// Interior solution at generic omega (unit leading coefficient), for
/// boundary-coefficient checks.
RadialProfile interior_solution(int d, double e0, int l, double omega,
                                const SeriesConfig& cfg = {});

} // namespace cads
