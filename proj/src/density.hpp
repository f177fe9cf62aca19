#pragma once

#include <string>
#include <vector>

#include "milnor.hpp"

namespace horopack {

// Closed-form constants of the ideal regular n-simplex and its horoball
// arrangements.
struct GeometricConstants {
    int dim = 0;
    double rho = 0.0;            // in-radius, log sqrt((n+1)/(n-1))
    double s = 0.0;              // incenter-to-edge distance
    double r = 0.0;              // horocyclic ratio log, log sqrt(2n/(n+1))
    double q = 0.0;              // maximal tangency offset, r + rho
    double half_dihedral = 0.0;  // alpha_inf
    double phi = 0.0;            // cot(phi) = sinh(s)
    double v0 = 0.0;             // one-horoball sector volume in B0
};

enum class ArrangementLabel { B0, B1, Both };

struct DensityReport {
    int dim = 0;
    double classical = 0.0;
    double generalized = 0.0;
    ArrangementLabel optimal = ArrangementLabel::Both;
    double simplex_volume = 0.0;
    double volume_uncertainty = 0.0;
    double density_uncertainty = 0.0;
    bool volume_converged = false;
    double ratio = 0.0;  // generalized / classical
};

struct SweepSample {
    double x = 0.0;
    double volume = 0.0;  // V(x)
    double delta = 0.0;   // V(x) / Vol(T_reg^inf)
};

// Bolyai horocycle arc length l(x) = 2 sinh(x/2).
double horocycle_arc_length(double x);

// Horoball sector volume area/(n-1).
double horoball_sector_volume(double area, int n);

// One-horoball sector volume in the all-same-type arrangement.
double v0(int n);

GeometricConstants geometric_constants(int n);

// Two-ball exchange: V(x) = (V(0)/2)(e^{(n-1)x} + e^{-(n-1)x}).
double two_ball_exchange_volume(double v_at_zero, double x, int n);

// Total horoball-in-simplex volume V(x) = V0 (e^{(n-1)x} + n e^{-(n-1)x}),
// x in [0, q_n].
double packing_volume(int n, double x);

double classical_density(int n, double vol_tol = 1e-7, long max_terms = 20000);
double generalized_density(int n, double vol_tol = 1e-7, long max_terms = 20000);

// (sigma^{n-1} + n sigma^{1-n}) / (n+1), sigma = sqrt(2n/(n-1)); equals
// generalized/classical with the simplex volume cancelled.
double density_ratio_closed_form(int n);

ArrangementLabel classify_optimal_arrangement(int n, double tol = 1e-9);

DensityReport density_report(int n, double vol_tol = 1e-7, long max_terms = 20000);

std::vector<SweepSample> density_sweep(int n, int samples, double vol_tol = 1e-7,
                                       long max_terms = 20000);

// Self-verification: oracle and invariant suites runnable from the CLI.
struct VerifyCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

// classical_perturbation is a fault-injection knob (relative error applied to
// the classical-density route only); 0 for a normal run.
std::vector<VerifyCheck> run_verification(double classical_perturbation = 0.0);

}  // namespace horopack
