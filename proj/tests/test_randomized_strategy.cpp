#include <cmath>

#include <doctest.h>

#include "qrng/attacker_optimizer.hpp"
#include "qrng/oracles.hpp"
#include "qrng/randomized_strategy.hpp"
#include "test_support.hpp"

using namespace qrng;
using test_support::schmidt_state;

namespace {

const double pi = 3.14159265358979323846;

// Two directions in the user's perpendicular plane with opening angle gamma.
RandomMeasurementConfig planar_config(const TwoQubitState& state, double gamma) {
    const SchmidtFrame frame = schmidt_frame(state);
    const Eigen::Vector3d e1(1.0, 0.0, 0.0);
    const Eigen::Vector3d e2(std::cos(gamma), std::sin(gamma), 0.0);
    return RandomMeasurementConfig(
        MeasurementDirection(Eigen::Vector3d(frame.to_lab_a(e1).normalized())),
        MeasurementDirection(Eigen::Vector3d(frame.to_lab_a(e2).normalized())));
}

}  // namespace

TEST_CASE("config derives gamma from the stored directions") {
    const TwoQubitState state = schmidt_state(0.8);
    for (const double gamma : {0.0, 0.3, pi / 2.0, 2.5, pi}) {
        const RandomMeasurementConfig cfg = planar_config(state, gamma);
        CHECK(std::abs(cfg.gamma - gamma) < 1e-9);
        // |e1 + e2| = 2 cos(gamma / 2)
        CHECK(std::abs((cfg.e1.vec() + cfg.e2.vec()).norm() - 2.0 * std::cos(gamma / 2.0)) <
              1e-10);
    }
}

TEST_CASE("averaged joint reduces correctly at the gamma extremes") {
    const TwoQubitState state = schmidt_state(0.8);
    const SchmidtFrame frame = schmidt_frame(state);
    const MeasurementDirection eb(Eigen::Vector3d(frame.to_lab_b(Eigen::Vector3d::UnitX()).normalized()));

    // gamma = 0: indistinguishable from the single-direction joint.
    const RandomMeasurementConfig same = planar_config(state, 0.0);
    const JointDistribution avg0 = averaged_joint(state, same, eb);
    const JointDistribution single = joint_distribution(state, same.e1, eb);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) CHECK(std::abs(avg0.w(a, b) - single.w(a, b)) < 1e-15);

    // gamma = pi: the correlation cancels, leaving w = (1 + (-1)^b beta) / 4.
    const RandomMeasurementConfig opposite = planar_config(state, pi);
    const JointDistribution avg_pi = averaged_joint(state, opposite, eb);
    const double beta = parameters(state, opposite.e1, eb).beta;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            CHECK(std::abs(avg_pi.w(a, b) - 0.25 * (1.0 + (b == 0 ? beta : -beta))) < 1e-12);
    CHECK(std::abs(mutual_information(avg_pi)) < 1e-12);

    // Intermediate gamma: cell-by-cell average of the two Born-rule joints.
    const RandomMeasurementConfig halfway = planar_config(state, pi / 2.0);
    const JointDistribution avg = averaged_joint(state, halfway, eb);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            const double w1 =
                oracle::born_joint_probability(state, halfway.e1.vec(), eb.vec(), a, b);
            const double w2 =
                oracle::born_joint_probability(state, halfway.e2.vec(), eb.vec(), a, b);
            CHECK(std::abs(avg.w(a, b) - 0.5 * (w1 + w2)) < 1e-10);
        }

    // Directions that bias the user's bit are rejected.
    const MeasurementDirection tilted(
        Eigen::Vector3d(frame.to_lab_a(Eigen::Vector3d(0.0, 0.6, 0.8)).normalized()));
    CHECK_THROWS_AS(averaged_joint(state, RandomMeasurementConfig(tilted, same.e1), eb),
                    precondition_error);
}

TEST_CASE("effective concurrence shrinks with the opening angle") {
    CHECK(effective_concurrence(0.8, 0.0) == 0.8);
    CHECK(std::abs(effective_concurrence(0.8, pi)) < 1e-15);
    CHECK(std::abs(effective_concurrence(0.8, pi / 2.0) - 0.56568542494923802) < 1e-14);
    CHECK_THROWS_AS(effective_concurrence(1.2, 0.5), std::domain_error);
    CHECK_THROWS_AS(effective_concurrence(0.5, -0.1), std::domain_error);
    CHECK_THROWS_AS(effective_concurrence(0.5, 3.5), std::domain_error);
}

TEST_CASE("attacker maximum against the randomized strategy") {
    CHECK(std::abs(i_max_random(0.7, 0.0) - i_max(0.7)) < 1e-15);
    for (const double c : {0.1, 0.5, 0.9, 1.0}) {
        CHECK(std::abs(i_max_random(c, pi)) < 1e-12);
    }
    CHECK(std::abs(i_max_random(0.9, pi / 3.0) - 0.49921424585154183) < 1e-14);

    // Non-increasing in gamma.
    for (const double c : {0.3, 0.8}) {
        double last = i_max_random(c, 0.0);
        for (int k = 1; k <= 100; ++k) {
            const double value = i_max_random(c, pi * k / 100.0);
            CHECK(value <= last + 1e-12);
            last = value;
        }
    }
}

TEST_CASE("grid search over the averaged joint lands on i_max of C_eff") {
    CounterRng rng(55);
    for (int k = 0; k < 6; ++k) {
        const double c = 0.2 + 0.6 * rng.next_uniform();
        const double gamma = 0.2 + 2.5 * rng.next_uniform();
        const TwoQubitState state = random_state_with_concurrence(c, 700 + k);
        const RandomMeasurementConfig cfg = planar_config(state, gamma);

        // Scan the attacker sphere against the averaged distribution.
        const Eigen::Vector3d a_b = bloch_vector(partial_trace(state, Subsystem::B)).v;
        const Eigen::Matrix3d k_lab = correlation_matrix(state);
        const Eigen::Vector3d k_vec =
            0.5 * (k_lab.transpose() * (cfg.e1.vec() + cfg.e2.vec()));
        const auto scan = detail::scan_sphere_max(a_b, k_vec, 0.0, 5e-3, true);
        CHECK(std::abs(scan.value - i_max_random(c, gamma)) < 5e-4);
    }
}
