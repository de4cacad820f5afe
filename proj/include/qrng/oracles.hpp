#pragma once

#include <functional>

#include "qrng/state_algebra.hpp"

namespace qrng::oracle {

// Brute-force reference routes, deliberately independent of the closed-form
// implementations they are compared against: probabilities come from explicit
// projector contractions over all indices, reductions from index loops, and
// derivatives from finite differences.

// (1 + (-1)^bit e . sigma) / 2
Matrix2c projector(const Eigen::Vector3d& e, int bit);

// <psi| P_A(a) x P_B(b) |psi> by a four-index contraction.
double born_joint_probability(const TwoQubitState& state, const Eigen::Vector3d& ea,
                              const Eigen::Vector3d& eb, int a, int b);

// <psi| P(bit) x 1 |psi> (or 1 x P(bit)) by the same contraction.
double born_marginal_probability(const TwoQubitState& state, const Eigen::Vector3d& e,
                                 Subsystem subsystem, int bit);

// Reduced density matrix by looping over the traced index.
Matrix2c reduced_density(const TwoQubitState& state, Subsystem keep);

// <psi| sigma_i x sigma_j |psi> by a four-index contraction.
double pauli_expectation(const TwoQubitState& state, int i, int j);

// B state after the user's measurement: (chi^dagger x 1)|psi> renormalized by
// the outcome probability; chi is the user's post-measurement ket.
Vector2c steered_state(const TwoQubitState& state, const Vector2c& chi);

// Central second difference (f(x+h) - 2 f(x) + f(x-h)) / h^2.
double second_difference(const std::function<double(double)>& f, double x, double h);

}  // namespace qrng::oracle
