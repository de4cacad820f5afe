#include "qrng/report.hpp"

#include <cmath>
#include <cstdio>

#include <json.hpp>

#include "qrng/attacker_optimizer.hpp"
#include "qrng/information_measures.hpp"
#include "qrng/randomized_strategy.hpp"

namespace qrng {

namespace {

using nlohmann::json;

complexd parse_complex(const json& node) {
    if (!node.is_array() || node.size() != 2 || !node[0].is_number() || !node[1].is_number()) {
        throw parse_error("complex entries must be [re, im] number pairs");
    }
    return {node[0].get<double>(), node[1].get<double>()};
}

json parse_document(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
}

std::string vector_json(const Eigen::Vector3d& v) {
    return "[" + format_number(v.x()) + ", " + format_number(v.y()) + ", " +
           format_number(v.z()) + "]";
}

}  // namespace

std::string format_number(double x) {
    if (x == 0.0) return "0";
    char buf[40];
    if (std::abs(x) < 1e-4) {
        std::snprintf(buf, sizeof(buf), "%.11e", x);
    } else {
        std::snprintf(buf, sizeof(buf), "%.12g", x);
    }
    return buf;
}

std::string fnv1a64_hex(const std::string& bytes) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (const unsigned char b : bytes) {
        h ^= b;
        h *= 0x100000001b3ULL;
    }
    char buf[20];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a64:") + buf;
}

Matrix2c load_state_amplitudes(const std::string& json_text) {
    const json doc = parse_document(json_text);
    if (!doc.is_object() || !doc.contains("amplitudes")) {
        throw parse_error("state file must be an object with an \"amplitudes\" key");
    }
    const json& amps = doc["amplitudes"];
    if (!amps.is_array() || amps.size() != 4) {
        throw parse_error("\"amplitudes\" must list four [re, im] pairs "
                          "(row-major |00>, |01>, |10>, |11>)");
    }
    Matrix2c m;
    for (int k = 0; k < 4; ++k) {
        m(k / 2, k % 2) = parse_complex(amps[k]);
    }
    return m;
}

Matrix2c load_density_matrix(const std::string& json_text) {
    const json doc = parse_document(json_text);
    if (!doc.is_object() || !doc.contains("rho")) {
        throw parse_error("density file must be an object with a \"rho\" key");
    }
    const json& rows = doc["rho"];
    if (!rows.is_array() || rows.size() != 2) {
        throw parse_error("\"rho\" must be a 2x2 matrix of [re, im] pairs");
    }
    Matrix2c m;
    for (int r = 0; r < 2; ++r) {
        if (!rows[r].is_array() || rows[r].size() != 2) {
            throw parse_error("\"rho\" must be a 2x2 matrix of [re, im] pairs");
        }
        for (int c = 0; c < 2; ++c) {
            m(r, c) = parse_complex(rows[r][c]);
        }
    }
    return m;
}

std::string PrivacyReport::to_json() const {
    std::string out = "{\n";
    out += "  \"input_digest\": \"" + input_digest + "\",\n";
    out += "  \"concurrence\": " + format_number(concurrence) + ",\n";
    out += "  \"purity\": " + format_number(purity) + ",\n";
    out += "  \"i_max\": " + format_number(i_max) + ",\n";
    out += "  \"holevo\": " + format_number(holevo) + ",\n";
    out += "  \"jrw\": " + format_number(jrw);
    if (has_directions) {
        out += ",\n  \"optimal_direction_schmidt\": " + vector_json(direction_schmidt);
        out += ",\n  \"optimal_direction_lab\": " + vector_json(direction_lab);
    }
    if (has_grid) {
        out += ",\n  \"grid_i_max\": " + format_number(grid_i_max);
        out += ",\n  \"grid_resolution\": " + format_number(grid_resolution);
    }
    out += "\n}\n";
    return out;
}

PrivacyReport analyze_state(const TwoQubitState& state,
                            const std::optional<MeasurementDirection>& user_direction,
                            const std::string& digest, std::optional<double> grid_resolution) {
    const PrivacyBounds bounds = privacy_bounds(state);
    PrivacyReport report;
    report.input_digest = digest;
    report.concurrence = bounds.concurrence;
    report.purity = bounds.purity;
    report.i_max = bounds.i_max;
    report.holevo = bounds.holevo;
    report.jrw = bounds.jrw;

    const SchmidtFrame frame = schmidt_frame(state);
    MeasurementDirection ea = user_direction.has_value()
                                  ? *user_direction
                                  : MeasurementDirection(
                                        Eigen::Vector3d(frame.to_lab_a(Eigen::Vector3d::UnitX())
                                                            .normalized()));
    const Eigen::Vector3d a_a = bloch_vector(partial_trace(state, Subsystem::A)).v;
    if (std::abs(ea.vec().dot(a_a)) > 1e-6) {
        throw precondition_error("user direction must be perpendicular to the user Bloch vector "
                                 "within 1e-6");
    }

    const OptimizationResult opt = optimal_attacker_analytic(state, ea);
    report.has_directions = true;
    report.direction_lab = opt.best_direction.vec();
    report.direction_schmidt = frame.to_schmidt_b(opt.best_direction.vec());

    if (grid_resolution.has_value()) {
        const OptimizationResult grid = grid_search_attacker(state, ea, *grid_resolution);
        report.has_grid = true;
        report.grid_i_max = grid.best_value;
        report.grid_resolution = *grid_resolution;
    }
    return report;
}

PrivacyReport analyze_density(const QubitDensityMatrix& rho, const std::string& digest) {
    const double p = purity(rho);
    const double c = std::sqrt(std::max(0.0, std::min(1.0, 2.0 * (1.0 - p))));
    PrivacyReport report;
    report.input_digest = digest;
    report.concurrence = c;
    report.purity = p;
    report.i_max = i_max(c);
    report.holevo = holevo_bound(c);
    report.jrw = jrw_bound(c);
    return report;
}

std::string sweep_csv(double c_min, double c_max, int steps, std::optional<double> gamma) {
    if (!(c_min >= 0.0 && c_max <= 1.0 && c_min < c_max)) {
        throw usage_error("sweep range must satisfy 0 <= c_min < c_max <= 1");
    }
    if (steps < 2) {
        throw usage_error("sweep needs at least 2 steps");
    }
    if (gamma.has_value() && !(*gamma >= 0.0 && *gamma <= 3.1415926535897932384626433832795)) {
        throw usage_error("gamma must lie in [0, pi]");
    }
    std::string out = gamma.has_value() ? "C,purity,i_max,holevo,jrw,i_max_random\n"
                                        : "C,purity,i_max,holevo,jrw\n";
    for (int k = 0; k < steps; ++k) {
        const double c =
            c_min + (c_max - c_min) * static_cast<double>(k) / static_cast<double>(steps - 1);
        out += format_number(c) + "," + format_number(1.0 - c * c / 2.0) + "," +
               format_number(i_max(c)) + "," + format_number(holevo_bound(c)) + "," +
               format_number(jrw_bound(c));
        if (gamma.has_value()) {
            out += "," + format_number(i_max_random(c, *gamma));
        }
        out += "\n";
    }
    return out;
}

std::string ellipse_csv(double concurrence, std::size_t n_points) {
    if (!(concurrence > 0.0 && concurrence < 1.0)) {
        throw usage_error("ellipse needs a concurrence strictly between 0 and 1");
    }
    if (n_points < 3) {
        throw usage_error("ellipse needs at least 3 points");
    }
    const EllipseSweep sweep = ellipse_sweep(concurrence, n_points);
    std::string out = "phi,mutual_information\n";
    for (std::size_t k = 0; k < sweep.phi.size(); ++k) {
        out += format_number(sweep.phi[k]) + "," + format_number(sweep.value[k]) + "\n";
    }
    return out;
}

}  // namespace qrng
