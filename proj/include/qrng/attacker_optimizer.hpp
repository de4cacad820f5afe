#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "qrng/information_measures.hpp"
#include "qrng/measurement.hpp"

namespace qrng {

enum class OptimizationMethod { analytic, grid };

struct OptimizationResult {
    MeasurementDirection best_direction;    // kappa = +C branch
    MeasurementDirection mirror_direction;  // sign-flipped partner, same value
    double best_value = 0.0;                // bits
    OptimizationMethod method = OptimizationMethod::analytic;
    double grid_resolution = 0.0;           // grid method only
};

struct EllipseSweep {
    double concurrence = 0.0;
    std::vector<double> phi;    // uniform on [0, pi]
    std::vector<double> value;  // mutual information on the ellipse boundary
};

struct ConvexityReport {
    std::size_t combinations = 0;
    double max_violation = 0.0;  // max of I(mix) - mixed I beyond the 1e-10 slack
    bool passed = true;
};

// Closed-form optimum: in the Schmidt frame the best attacker direction mirrors
// the user's through the xz-plane, e_B = (e_Ax, -e_Ay, e_Az); the value is
// i_max(C).  Requires e_A . a_A = 0 within 1e-6.
OptimizationResult optimal_attacker_analytic(const TwoQubitState& state,
                                             const MeasurementDirection& ea);

// Exhaustive scan of the attacker sphere on a (theta, phi) lattice of the given
// angular resolution (poles enter once); ties break toward the lexicographically
// smallest (theta, phi).  The OpenMP variant evaluates rows in parallel and
// reduces deterministically, so both variants return identical results.
OptimizationResult grid_search_attacker(const TwoQubitState& state, const MeasurementDirection& ea,
                                        double resolution);
OptimizationResult grid_search_attacker_serial(const TwoQubitState& state,
                                               const MeasurementDirection& ea, double resolution);

// Worst-case shortfall of a lattice scan against the true optimum: the largest
// principal curvature magnitude at the maximum, (C/2) log2((1+C)/(1-C)), times
// resolution^2 / 2.  Requires 0 < C < 1 and resolution in (0, 0.1].
double grid_error_bound(double concurrence, double resolution);

// Mutual information along the boundary of the alpha = 0 constraint ellipse on
// n_points uniformly spaced phi in [0, pi].
EllipseSweep ellipse_sweep(double concurrence, std::size_t n_points);

// Mutual information and its phi-derivative on the ellipse boundary.
double mi_on_boundary(double concurrence, double phi);
double mi_phase_derivative(double concurrence, double phi);

// Stationary points of the boundary mutual information on [0, pi]: endpoints
// plus every sign change of the derivative found at the scan resolution,
// refined by bisection.
std::vector<double> stationary_points(double concurrence, double scan_resolution = 1e-4,
                                      double tolerance = 1e-10);

// d^2 I / d phi^2 at the boundary maximum: C^2/ln2 - (C/2)(log2(1+C) - log2(1-C)),
// strictly negative on 0 < C < 1.
double second_derivative_at_max(double concurrence);

// Checks I(lambda p + (1-lambda) q) <= lambda I(p) + (1-lambda) I(q) + 1e-10 for
// every pair from `points` and every lambda, at alpha = 0 on the given ellipse.
ConvexityReport verify_convexity(const std::vector<std::pair<double, double>>& points,
                                 const std::vector<double>& lambdas, double concurrence);

namespace detail {

// Maximum of mutual_information_abk(alpha, e . a_b, e . k_vec) over the unit
// sphere lattice; shared by the direct and the outcome-averaged searches.
struct SphereScanResult {
    double value = 0.0;
    double theta = 0.0;
    double phi = 0.0;
};

SphereScanResult scan_sphere_max(const Eigen::Vector3d& a_b, const Eigen::Vector3d& k_vec,
                                 double alpha, double resolution, bool parallel);

}  // namespace detail

}  // namespace qrng
