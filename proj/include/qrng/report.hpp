#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "qrng/measurement.hpp"
#include "qrng/state_algebra.hpp"

namespace qrng {

// Unreadable or schema-violating input file (distinct from physicality errors).
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad command-line values (empty ranges, too few steps, ...).
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// 12 significant digits, scientific notation below 1e-4, plain "0" for zero.
// Every number the tool emits goes through this, which keeps outputs byte-stable.
std::string format_number(double x);

std::string fnv1a64_hex(const std::string& bytes);

// State file: {"amplitudes": [[re, im], [re, im], [re, im], [re, im]]},
// row-major over |00>, |01>, |10>, |11>.  Parse only; physical validation is
// the TwoQubitState constructor's job.
Matrix2c load_state_amplitudes(const std::string& json_text);

// Density file: {"rho": [[[re, im], [re, im]], [[re, im], [re, im]]]}.
Matrix2c load_density_matrix(const std::string& json_text);

struct PrivacyReport {
    std::string input_digest;
    double concurrence = 0.0;
    double purity = 0.0;
    double i_max = 0.0;
    double holevo = 0.0;
    double jrw = 0.0;
    bool has_directions = false;
    Eigen::Vector3d direction_schmidt = Eigen::Vector3d::Zero();
    Eigen::Vector3d direction_lab = Eigen::Vector3d::Zero();
    bool has_grid = false;
    double grid_i_max = 0.0;
    double grid_resolution = 0.0;

    std::string to_json() const;
};

// Full pure-state analysis: bounds plus the optimal attacker direction for the
// user direction (default: Schmidt-frame +x).  A user direction must satisfy
// e_A . a_A = 0 within 1e-6.  grid_resolution additionally certifies the
// closed-form maximum by lattice search.
PrivacyReport analyze_state(const TwoQubitState& state,
                            const std::optional<MeasurementDirection>& user_direction,
                            const std::string& digest,
                            std::optional<double> grid_resolution = std::nullopt);

// Bounds from a reduced density matrix alone (concurrence via the purity);
// no lab-frame directions are available in this mode.
PrivacyReport analyze_density(const QubitDensityMatrix& rho, const std::string& digest);

// CSV "C,purity,i_max,holevo,jrw[,i_max_random]" over an inclusive concurrence
// range; the last column appears when gamma is given.
std::string sweep_csv(double c_min, double c_max, int steps, std::optional<double> gamma);

// CSV "phi,mutual_information" along the constraint-ellipse boundary.
std::string ellipse_csv(double concurrence, std::size_t n_points);

}  // namespace qrng
