#pragma once

#include <Eigen/Dense>
#include <array>

#include "qrng/state_algebra.hpp"

namespace qrng {

inline constexpr double direction_tolerance = 1e-9;        // unit-norm validation
inline constexpr double perpendicular_tolerance = 1e-8;    // e_A . a_A for exact-formula paths
inline constexpr double membership_slack = 1e-9;           // ellipse membership rounding slack
inline constexpr double probability_clamp = 1e-12;         // negative rounding noise clamped to 0

// Unit vector on the Bloch sphere selecting a projective measurement.  Inputs
// are validated, never silently normalized.
class MeasurementDirection {
public:
    explicit MeasurementDirection(const Eigen::Vector3d& e);

    // (sin t cos p, sin t sin p, cos t) — always unit by construction.
    static MeasurementDirection from_spherical(double theta, double phi);

    const Eigen::Vector3d& vec() const { return e_; }

private:
    Eigen::Vector3d e_;
};

// Scalar data a joint outcome distribution depends on:
//   alpha = e_A . a_A,  beta = e_B . a_B,  kappa = e_A^T K e_B.
struct MeasurementParameters {
    double alpha = 0.0;
    double beta = 0.0;
    double kappa = 0.0;
};

// Outcome distribution of one measurement per side.  Entries within
// [-probability_clamp, 0) are clamped to 0; more negative input is rejected.
// Marginals are stored and always equal the row/column sums.
class JointDistribution {
public:
    static JointDistribution from_probabilities(const std::array<std::array<double, 2>, 2>& w);

    double w(int a, int b) const { return w_[a][b]; }
    double marginal_a(int a) const { return wa_[a]; }
    double marginal_b(int b) const { return wb_[b]; }

private:
    JointDistribution() = default;
    std::array<std::array<double, 2>, 2> w_{};
    std::array<double, 2> wa_{};
    std::array<double, 2> wb_{};
};

// Rotations taking Schmidt-frame coordinates to lab coordinates for each
// subsystem.  In the Schmidt frame the local Bloch vectors point along +z and
// the correlation matrix is diag(C, -C, 1).
struct SchmidtFrame {
    Eigen::Matrix3d rotation_a = Eigen::Matrix3d::Identity();
    Eigen::Matrix3d rotation_b = Eigen::Matrix3d::Identity();

    Eigen::Vector3d to_lab_a(const Eigen::Vector3d& v) const { return rotation_a * v; }
    Eigen::Vector3d to_lab_b(const Eigen::Vector3d& v) const { return rotation_b * v; }
    Eigen::Vector3d to_schmidt_a(const Eigen::Vector3d& v) const { return rotation_a.transpose() * v; }
    Eigen::Vector3d to_schmidt_b(const Eigen::Vector3d& v) const { return rotation_b.transpose() * v; }
};

SchmidtFrame schmidt_frame(const TwoQubitState& state);

// Probability of outcome `bit` when measuring the kept subsystem along e:
// (1 + (-1)^bit e . a) / 2.
double marginal_probability(const TwoQubitState& state, const MeasurementDirection& e,
                            Subsystem subsystem, int bit);

JointDistribution joint_distribution(const TwoQubitState& state, const MeasurementDirection& ea,
                                     const MeasurementDirection& eb);

JointDistribution joint_from_parameters(const MeasurementParameters& p);

MeasurementParameters parameters(const TwoQubitState& state, const MeasurementDirection& ea,
                                 const MeasurementDirection& eb);

// Region of (kappa, beta) pairs an attacker can realize once the user's
// marginal bias alpha is fixed on a state of the given concurrence:
//   c_kk kappa^2 + 2 c_kb kappa beta + c_bb beta^2 <= 1.
// Degenerate at C = 0 (kappa forced to alpha beta), C = 1 (beta forced to 0)
// and alpha^2 >= 1 - C^2 (user measures along the Bloch vector).
class ConstraintEllipse {
public:
    ConstraintEllipse(double concurrence, double alpha);

    double concurrence() const { return c_; }
    double alpha() const { return alpha_; }
    double c_kk() const { return c_kk_; }
    double c_kb() const { return c_kb_; }
    double c_bb() const { return c_bb_; }

    double form_value(double kappa, double beta) const {
        return c_kk_ * kappa * kappa + 2.0 * c_kb_ * kappa * beta + c_bb_ * beta * beta;
    }

    bool contains(double kappa, double beta) const {
        return form_value(kappa, beta) <= 1.0 + membership_slack;
    }

private:
    double c_ = 0.0;
    double alpha_ = 0.0;
    double c_kk_ = 0.0;
    double c_kb_ = 0.0;
    double c_bb_ = 0.0;
};

ConstraintEllipse constraint_ellipse(double concurrence, double alpha);

bool membership(const ConstraintEllipse& ellipse, double kappa, double beta);

// Boundary of the alpha = 0 ellipse: kappa = C cos(phi), beta = sqrt(1-C^2) sin(phi).
std::pair<double, double> ellipse_boundary_point(double concurrence, double phi);

}  // namespace qrng
