#pragma once

#include "qrng/measurement.hpp"
#include "qrng/state_algebra.hpp"

namespace qrng {

// Everything below is in bits (log base 2); 0 log 0 := 0 throughout, with log
// arguments under 1e-300 short-circuited to that convention.

struct PrivacyBounds {
    double concurrence = 0.0;
    double purity = 0.0;
    double i_max = 0.0;   // exact attacker maximum of the mutual information
    double holevo = 0.0;  // upper bound
    double jrw = 0.0;     // subentropy lower bound
};

// Attacker states conditioned on the user's outcome, written in the lab frame
// of subsystem B.  overlap = |<psi0|psi1>| = sqrt(1 - C^2).
struct ConditionalStatePair {
    Vector2c psi0;
    Vector2c psi1;
    double overlap = 0.0;
};

double binary_entropy(double p);

// Entropy of the eigenvalue distribution (1 +- |a|)/2.
double shannon_entropy(const QubitDensityMatrix& rho);

// Subentropy of a qubit spectrum {lambda, 1 - lambda}:
//   Q = (-lambda^2 log2 lambda + (1-lambda)^2 log2(1-lambda)) / (2 lambda - 1),
// evaluated by the L'Hopital derivative form when |lambda1 - lambda2| < 1e-6.
double subentropy(const QubitDensityMatrix& rho);
double subentropy_from_eigenvalues(double lambda1, double lambda2);

double mutual_information(const JointDistribution& joint);

// Same quantity from the (alpha, beta, kappa) parameterization, summed directly
// as (1/4) sum n_ab log2(n_ab / (d_a d_b)); negative n_ab beyond rounding noise
// is a domain error.
double mutual_information_abk(double alpha, double beta, double kappa);
double mutual_information_abk(const MeasurementParameters& p);

// Attacker maximum over measurement directions at fixed concurrence:
//   i_max = (1+C)/2 log2(1+C) + (1-C)/2 log2(1-C).
double i_max(double c);

// Small-concurrence expansion C^2 / (2 ln 2).
double i_max_small_c(double c);

// i_max with C recovered from the user-side purity, C = sqrt(2 (1 - P)).
double i_max_from_purity(double p);

// Holevo bound h((1 + sqrt(1-C^2)) / 2) on the attacker information.
double holevo_bound(double c);

// Subentropy lower bound on the attacker's accessible information.
double jrw_bound(double c);

PrivacyBounds privacy_bounds(const TwoQubitState& state);

// States of subsystem B after the user measures along ea (required to be
// perpendicular to the user Bloch vector within 1e-8) and obtains 0 or 1.
// `phase` is the free relative phase of the user's measurement eigenstates in
// the Schmidt frame; it rotates psi0/psi1 but never their overlap.
ConditionalStatePair conditional_attacker_states(const TwoQubitState& state,
                                                 const MeasurementDirection& ea,
                                                 double phase = 0.0);

}  // namespace qrng
