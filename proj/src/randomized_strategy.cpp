#include "qrng/randomized_strategy.hpp"

#include <cmath>
#include <stdexcept>

#include "qrng/information_measures.hpp"

namespace qrng {

RandomMeasurementConfig::RandomMeasurementConfig(const MeasurementDirection& first,
                                                 const MeasurementDirection& second)
    : e1(first), e2(second) {
    const double cross = first.vec().cross(second.vec()).norm();
    const double dot = first.vec().dot(second.vec());
    gamma = std::atan2(cross, dot);  // in [0, pi]
}

JointDistribution averaged_joint(const TwoQubitState& state, const RandomMeasurementConfig& config,
                                 const MeasurementDirection& eb) {
    const BlochVector a = bloch_vector(partial_trace(state, Subsystem::A));
    for (const MeasurementDirection* e : {&config.e1, &config.e2}) {
        if (std::abs(e->vec().dot(a.v)) > perpendicular_tolerance) {
            throw precondition_error(
                "both randomized directions must be perpendicular to the user Bloch vector");
        }
    }
    const JointDistribution w1 = joint_distribution(state, config.e1, eb);
    const JointDistribution w2 = joint_distribution(state, config.e2, eb);
    std::array<std::array<double, 2>, 2> w;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            w[i][j] = (w1.w(i, j) + w2.w(i, j)) / 2.0;
        }
    }
    return JointDistribution::from_probabilities(w);
}

double effective_concurrence(double c, double gamma) {
    if (!(c >= 0.0 && c <= 1.0)) {
        throw std::domain_error("concurrence must lie in [0, 1]");
    }
    if (!(gamma >= 0.0 && gamma <= 3.1415926535897932384626433832795 + 1e-12)) {
        throw std::domain_error("opening angle must lie in [0, pi]");
    }
    return c * std::cos(gamma / 2.0);
}

double i_max_random(double c, double gamma) {
    return i_max(effective_concurrence(c, gamma));
}

}  // namespace qrng
