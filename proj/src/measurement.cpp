#include "qrng/measurement.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qrng {

namespace {

std::string describe(double value) {
    std::ostringstream os;
    os.precision(17);
    os << value;
    return os.str();
}

// SO(3) rotation induced on Bloch vectors by the basis change U (columns =
// new basis kets): R(i, j) = tr(sigma_i U sigma_j U^dagger) / 2.
Eigen::Matrix3d bloch_rotation(const Matrix2c& u) {
    Eigen::Matrix3d r;
    for (int j = 0; j < 3; ++j) {
        const Matrix2c m = u * pauli::sigma(j) * u.adjoint();
        for (int i = 0; i < 3; ++i) {
            r(i, j) = (pauli::sigma(i) * m).trace().real() / 2.0;
        }
    }
    return r;
}

void check_bit(int bit) {
    if (bit != 0 && bit != 1) {
        throw precondition_error("outcome bit must be 0 or 1");
    }
}

}  // namespace

MeasurementDirection::MeasurementDirection(const Eigen::Vector3d& e) : e_(e) {
    const double n = e_.norm();
    if (std::abs(n - 1.0) > direction_tolerance) {
        throw validation_error("measurement direction has norm " + describe(n) +
                               ", expected a unit vector within 1e-9");
    }
}

MeasurementDirection MeasurementDirection::from_spherical(double theta, double phi) {
    const double st = std::sin(theta);
    Eigen::Vector3d e(st * std::cos(phi), st * std::sin(phi), std::cos(theta));
    e /= e.norm();  // kill last-ulp drift so the validating constructor is happy
    return MeasurementDirection(e);
}

SchmidtFrame schmidt_frame(const TwoQubitState& state) {
    const SchmidtDecomposition sd = schmidt_decompose(state);
    Matrix2c ua, ub;
    ua.col(0) = sd.basis_a[0];
    ua.col(1) = sd.basis_a[1];
    ub.col(0) = sd.basis_b[0];
    ub.col(1) = sd.basis_b[1];
    SchmidtFrame frame;
    frame.rotation_a = bloch_rotation(ua);
    frame.rotation_b = bloch_rotation(ub);
    return frame;
}

double marginal_probability(const TwoQubitState& state, const MeasurementDirection& e,
                            Subsystem subsystem, int bit) {
    check_bit(bit);
    const BlochVector a = bloch_vector(partial_trace(state, subsystem));
    const double sign = bit == 0 ? 1.0 : -1.0;
    return (1.0 + sign * e.vec().dot(a.v)) / 2.0;
}

JointDistribution JointDistribution::from_probabilities(
    const std::array<std::array<double, 2>, 2>& w) {
    JointDistribution d;
    double sum = 0.0;
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            double p = w[a][b];
            if (p < -probability_clamp) {
                throw std::domain_error("joint probability w(" + std::to_string(a) + "," +
                                        std::to_string(b) + ") = " + describe(p) + " is negative");
            }
            p = std::max(p, 0.0);
            d.w_[a][b] = p;
            sum += p;
        }
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        throw validation_error("joint probabilities sum to " + describe(sum) + ", expected 1");
    }
    for (int a = 0; a < 2; ++a) d.wa_[a] = d.w_[a][0] + d.w_[a][1];
    for (int b = 0; b < 2; ++b) d.wb_[b] = d.w_[0][b] + d.w_[1][b];
    return d;
}

MeasurementParameters parameters(const TwoQubitState& state, const MeasurementDirection& ea,
                                 const MeasurementDirection& eb) {
    MeasurementParameters p;
    p.alpha = ea.vec().dot(bloch_vector(partial_trace(state, Subsystem::A)).v);
    p.beta = eb.vec().dot(bloch_vector(partial_trace(state, Subsystem::B)).v);
    p.kappa = ea.vec().dot(correlation_matrix(state) * eb.vec());
    return p;
}

JointDistribution joint_from_parameters(const MeasurementParameters& p) {
    std::array<std::array<double, 2>, 2> w;
    for (int a = 0; a < 2; ++a) {
        const double sa = a == 0 ? 1.0 : -1.0;
        for (int b = 0; b < 2; ++b) {
            const double sb = b == 0 ? 1.0 : -1.0;
            w[a][b] = (1.0 + sa * p.alpha + sb * p.beta + sa * sb * p.kappa) / 4.0;
        }
    }
    return JointDistribution::from_probabilities(w);
}

JointDistribution joint_distribution(const TwoQubitState& state, const MeasurementDirection& ea,
                                     const MeasurementDirection& eb) {
    return joint_from_parameters(parameters(state, ea, eb));
}

ConstraintEllipse::ConstraintEllipse(double concurrence, double alpha)
    : c_(concurrence), alpha_(alpha) {
    if (!(concurrence > 0.0)) {
        throw std::domain_error("constraint ellipse degenerates at C = 0: kappa is forced to alpha*beta");
    }
    if (!(concurrence < 1.0)) {
        throw std::domain_error("constraint ellipse degenerates at C = 1: beta is forced to 0");
    }
    const double residual = 1.0 - concurrence * concurrence - alpha * alpha;
    if (!(residual > 0.0)) {
        throw std::domain_error(
            "constraint ellipse degenerates when alpha^2 >= 1 - C^2 (user measures along the "
            "Bloch vector); got alpha = " + describe(alpha) + " at C = " + describe(concurrence));
    }
    const double denom = concurrence * concurrence * residual;
    c_kk_ = (1.0 - concurrence * concurrence) / denom;
    c_kb_ = -alpha / denom;
    c_bb_ = (concurrence * concurrence + alpha * alpha) / denom;
}

ConstraintEllipse constraint_ellipse(double concurrence, double alpha) {
    return ConstraintEllipse(concurrence, alpha);
}

bool membership(const ConstraintEllipse& ellipse, double kappa, double beta) {
    return ellipse.contains(kappa, beta);
}

std::pair<double, double> ellipse_boundary_point(double concurrence, double phi) {
    if (!(concurrence > 0.0 && concurrence < 1.0)) {
        throw precondition_error("boundary parameterization requires 0 < C < 1");
    }
    const double kappa = concurrence * std::cos(phi);
    const double beta = std::sqrt(1.0 - concurrence * concurrence) * std::sin(phi);
    return {kappa, beta};
}

}  // namespace qrng
