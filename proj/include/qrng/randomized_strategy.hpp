#pragma once

#include "qrng/measurement.hpp"

namespace qrng {

// User strategy that flips a fair coin between two measurement directions,
// both perpendicular to the user Bloch vector.  gamma is the opening angle
// between them, derived from the directions.
struct RandomMeasurementConfig {
    MeasurementDirection e1;
    MeasurementDirection e2;
    double gamma = 0.0;

    RandomMeasurementConfig(const MeasurementDirection& first, const MeasurementDirection& second);
};

// Attacker-visible outcome distribution once the coin is averaged out:
// (w_1 + w_2) / 2 cell by cell.
JointDistribution averaged_joint(const TwoQubitState& state, const RandomMeasurementConfig& config,
                                 const MeasurementDirection& eb);

// Averaging shrinks the usable correlation to C cos(gamma / 2).
double effective_concurrence(double c, double gamma);

// Attacker maximum against the randomized strategy: i_max(C cos(gamma / 2)).
double i_max_random(double c, double gamma);

}  // namespace qrng
