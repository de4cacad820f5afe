// Acceptance gate: one check per release criterion, each printing a single
// [PASS]/[FAIL] line.  Tolerances are pinned here on purpose; loosening them
// is a release decision, not a test tweak.
#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qrng/attacker_optimizer.hpp"
#include "qrng/empirical_sampler.hpp"
#include "qrng/information_measures.hpp"
#include "qrng/measurement.hpp"
#include "qrng/oracles.hpp"
#include "qrng/randomized_strategy.hpp"
#include "qrng/state_algebra.hpp"
#include "qrng/verify.hpp"

using namespace qrng;

namespace {

const double pi = 3.14159265358979323846;

int g_failures = 0;

void run_criterion(const std::string& name, const std::function<void()>& body) {
    try {
        body();
        std::cout << "[PASS] " << name << std::endl;
    } catch (const std::exception& e) {
        std::cout << "[FAIL] " << name << ": " << e.what() << std::endl;
        ++g_failures;
    } catch (...) {
        std::cout << "[FAIL] " << name << ": unknown error" << std::endl;
        ++g_failures;
    }
}

void require(bool condition, const std::string& message) {
    if (!condition) throw std::runtime_error(message);
}

void require_close(double actual, double expected, double tol, const std::string& what) {
    if (!(std::abs(actual - expected) <= tol)) {
        std::ostringstream msg;
        msg.precision(15);
        msg << what << ": expected " << expected << " +- " << tol << ", got " << actual;
        throw std::runtime_error(msg.str());
    }
}

MeasurementDirection user_direction(const TwoQubitState& state, double azimuth) {
    const SchmidtFrame frame = schmidt_frame(state);
    const Eigen::Vector3d schmidt_dir(std::cos(azimuth), std::sin(azimuth), 0.0);
    return MeasurementDirection(Eigen::Vector3d(frame.to_lab_a(schmidt_dir).normalized()));
}

MeasurementDirection random_direction(CounterRng& rng) {
    while (true) {
        const Eigen::Vector3d v(rng.next_gaussian(), rng.next_gaussian(), rng.next_gaussian());
        if (v.norm() > 1e-6) return MeasurementDirection(v.normalized());
    }
}

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

CommandResult run_cli(const std::string& args) {
    const std::string command = std::string(QRNG_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(command.c_str(), "r");
    require(pipe != nullptr, "failed to launch CLI");
    CommandResult result;
    char buffer[4096];
    size_t got;
    while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) result.output.append(buffer, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string write_temp(const std::string& name, const std::string& content) {
    const char* base = std::getenv("TMPDIR");
    const std::string path = std::string(base ? base : "/tmp") + "/" + name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    require(out.good(), "cannot write " + path);
    out << content;
    return path;
}

// 1. Grid search reproduces the closed-form maximum across the concurrence range.
void criterion_grid_reproduces_maximum() {
    const auto start = std::chrono::steady_clock::now();
    for (int k = 1; k <= 9; ++k) {
        const double c = k / 10.0;
        const TwoQubitState state = random_state_with_concurrence(c, 1000 + k);
        const MeasurementDirection ea = user_direction(state, 0.61 * k);
        const OptimizationResult grid = grid_search_attacker(state, ea, 5e-3);
        require_close(grid.best_value, i_max(c), 5e-4,
                      "grid optimum at C=" + std::to_string(c));
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    require(elapsed < 30.0, "runtime " + std::to_string(elapsed) + " s exceeds the 30 s budget");
}

// 2. Separable and maximally entangled endpoints.
void criterion_endpoints() {
    Matrix2c product = Matrix2c::Zero();
    product(0, 0) = 1.0;
    const TwoQubitState separable{product};
    CounterRng rng(2);
    for (int k = 0; k < 25; ++k) {
        const double mi =
            mutual_information(joint_distribution(separable, random_direction(rng),
                                                  random_direction(rng)));
        require_close(mi, 0.0, 1e-12, "information leak from a separable state");
    }

    require_close(mutual_information_abk(0.0, 0.0, 1.0), 1.0, 1e-12, "kappa=+1 information");
    require_close(mutual_information_abk(0.0, 0.0, -1.0), 1.0, 1e-12, "kappa=-1 information");

    Matrix2c bell_amp = Matrix2c::Zero();
    bell_amp(0, 0) = bell_amp(1, 1) = 1.0 / std::sqrt(2.0);
    const TwoQubitState bell{bell_amp};
    const MeasurementDirection x(Eigen::Vector3d(1, 0, 0));
    const OptimizationResult best = optimal_attacker_analytic(bell, x);
    const MeasurementParameters p = parameters(bell, x, best.best_direction);
    require_close(std::abs(p.kappa), 1.0, 1e-12, "correlation at the Bell optimum");
    require_close(mutual_information(joint_distribution(bell, x, best.best_direction)), 1.0,
                  1e-12, "Bell-state information");
}

// 3. Subentropy / Holevo sandwich with interior strictness of the upper bound.
void criterion_bound_sandwich() {
    for (int k = 1; k <= 999; ++k) {
        const double c = k * 1e-3;
        const double lower = jrw_bound(c);
        const double mid = i_max(c);
        const double upper = holevo_bound(c);
        require(lower <= mid + 1e-12, "lower bound above the maximum at C=" + std::to_string(c));
        require(mid <= upper + 1e-12, "maximum above the upper bound at C=" + std::to_string(c));
        if (c >= 0.01 && c <= 0.99) {
            require(upper - mid > 1e-6,
                    "upper bound not strict at C=" + std::to_string(c));
        }
    }
    require_close(holevo_bound(0.0), i_max(0.0), 1e-9, "upper-bound equality at C=0");
    require_close(holevo_bound(1.0), i_max(1.0), 1e-9, "upper-bound equality at C=1");
}

// 4. Constraint-ellipse geometry: boundary maxima at the kappa axis.
void criterion_ellipse_geometry() {
    for (const double c : {0.3, 0.7, 0.9}) {
        const EllipseSweep sweep = ellipse_sweep(c, 181);
        std::size_t argmax = 0;
        for (std::size_t i = 1; i < sweep.value.size(); ++i)
            if (sweep.value[i] > sweep.value[argmax]) argmax = i;
        require(argmax == 0 || argmax == sweep.value.size() - 1,
                "interior maximum at C=" + std::to_string(c));
        require_close(sweep.value[argmax], i_max(c), 1e-9,
                      "boundary maximum at C=" + std::to_string(c));
        require_close(sweep.value[90], 0.0, 1e-12,
                      "information at kappa=0 for C=" + std::to_string(c));
    }
}

// 5. Small-concurrence and near-pure-purity asymptotics.
void criterion_asymptotics() {
    const double ratio = i_max(0.05) * 2.0 * std::log(2.0) / (0.05 * 0.05);
    require(std::abs(ratio - 1.0) <= 0.01,
            "quadratic law off by " + std::to_string(std::abs(ratio - 1.0)));

    const double p = 0.995;
    const double linear = (1.0 - p) / std::log(2.0);
    const double rel = std::abs(i_max_from_purity(p) - linear) / linear;
    require(rel <= 0.02, "purity-linear form off by " + std::to_string(rel));
}

// 6. Geometry suites: Schmidt frame, membership, convexity, curvature.
void criterion_geometry_suites() {
    for (uint64_t seed = 0; seed < 1000; ++seed) {
        const TwoQubitState state = random_pure_state(seed);
        const double c = concurrence(state);
        const SchmidtFrame frame = schmidt_frame(state);
        const Eigen::Matrix3d k_schmidt =
            frame.rotation_a.transpose() * correlation_matrix(state) * frame.rotation_b;
        const Eigen::Matrix3d expected = Eigen::Vector3d(c, -c, 1.0).asDiagonal();
        if ((k_schmidt - expected).norm() > 1e-8) {
            throw std::runtime_error("Schmidt-frame correlation matrix off for seed " +
                                     std::to_string(seed));
        }
    }

    const TwoQubitState half = random_state_with_concurrence(0.5, 424242);
    const std::size_t violations = membership_violations(half, 1000000, 77);
    require(violations == 0,
            std::to_string(violations) + " constraint-ellipse membership violations");

    CounterRng rng(6);
    const ConstraintEllipse ellipse(0.8, 0.0);
    std::size_t convexity_failures = 0;
    for (int k = 0; k < 10000; ++k) {
        std::pair<double, double> p1;
        std::pair<double, double> p2;
        do {
            p1 = {1.6 * rng.next_uniform() - 0.8, 1.2 * rng.next_uniform() - 0.6};
        } while (!ellipse.contains(p1.first, p1.second));
        do {
            p2 = {1.6 * rng.next_uniform() - 0.8, 1.2 * rng.next_uniform() - 0.6};
        } while (!ellipse.contains(p2.first, p2.second));
        const ConvexityReport report = verify_convexity({p1, p2}, {rng.next_uniform()}, 0.8);
        if (!report.passed) ++convexity_failures;
    }
    require(convexity_failures == 0, std::to_string(convexity_failures) + " convexity violations");

    for (int k = 1; k <= 999; ++k) {
        const double c = k * 1e-3;
        const double closed = second_derivative_at_max(c);
        require(closed < 0.0, "non-negative curvature at C=" + std::to_string(c));
        const double fd = oracle::second_difference(
            [c](double phi) { return mi_on_boundary(c, phi); }, 0.0, 1e-4);
        require_close(closed, fd, 1e-5, "curvature mismatch at C=" + std::to_string(c));
    }
}

// 7. Randomized two-direction strategy and its effective concurrence.
void criterion_randomized_strategy() {
    for (int k = 0; k <= 100; ++k) {
        require_close(i_max_random(k / 100.0, pi), 0.0, 1e-12,
                      "opposite directions leak at C=" + std::to_string(k / 100.0));
    }

    CounterRng rng(777);
    for (int k = 0; k < 50; ++k) {
        const double c = 0.1 + 0.8 * rng.next_uniform();
        const double gamma = pi * rng.next_uniform();
        const TwoQubitState state = random_state_with_concurrence(c, 9000 + k);
        const SchmidtFrame frame = schmidt_frame(state);
        const MeasurementDirection e1(
            Eigen::Vector3d(frame.to_lab_a(Eigen::Vector3d(1, 0, 0)).normalized()));
        const MeasurementDirection e2(Eigen::Vector3d(
            frame.to_lab_a(Eigen::Vector3d(std::cos(gamma), std::sin(gamma), 0)).normalized()));
        const RandomMeasurementConfig cfg(e1, e2);

        const Eigen::Vector3d a_b = bloch_vector(partial_trace(state, Subsystem::B)).v;
        const Eigen::Vector3d k_vec =
            0.5 * (correlation_matrix(state).transpose() * (cfg.e1.vec() + cfg.e2.vec()));
        const auto scan = detail::scan_sphere_max(a_b, k_vec, 0.0, 5e-3, true);
        require_close(scan.value, i_max_random(c, gamma), 5e-4,
                      "randomized-strategy certification at C=" + std::to_string(c) +
                          ", gamma=" + std::to_string(gamma));
    }
}

// 8. Closed-form joint distribution equals the Born-rule contraction.
void criterion_oracle_equivalence() {
    CounterRng rng(8);
    for (int k = 0; k < 10000; ++k) {
        const TwoQubitState state = random_pure_state(20000 + k);
        const MeasurementDirection ea = random_direction(rng);
        const MeasurementDirection eb = random_direction(rng);
        const JointDistribution w = joint_distribution(state, ea, eb);
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                const double born =
                    oracle::born_joint_probability(state, ea.vec(), eb.vec(), a, b);
                if (std::abs(w.w(a, b) - born) > 1e-10) {
                    throw std::runtime_error("Born mismatch at sample " + std::to_string(k));
                }
            }
    }
}

// 9. Monte-Carlo sampling at the optimal attacker setting for C = 0.7.
void criterion_monte_carlo() {
    const double c = 0.7;
    const double l1 = (1.0 + std::sqrt(1.0 - c * c)) / 2.0;
    Matrix2c amp = Matrix2c::Zero();
    amp(0, 0) = std::sqrt(l1);
    amp(1, 1) = std::sqrt(1.0 - l1);
    const TwoQubitState state{amp};
    const MeasurementDirection ea(Eigen::Vector3d(1, 0, 0));
    const OptimizationResult best = optimal_attacker_analytic(state, ea);
    const JointDistribution joint = joint_distribution(state, ea, best.best_direction);
    require_close(joint.w(0, 0), 0.425, 1e-12, "optimal joint cell (0,0)");
    require_close(joint.w(0, 1), 0.075, 1e-12, "optimal joint cell (0,1)");

    const uint64_t n = 1000000;
    const uint64_t seed = 20240801;
    const BitRecord record = sample_bits(joint, n, seed);
    require_close(empirical_mi(record), i_max(c), 2e-3, "empirical mutual information");

    const BitRecord repeat = sample_bits(joint, n, seed);
    require(record.counts == repeat.counts, "counts changed between identical runs");
    const BitRecord sharded = sample_bits_parallel(joint, n, seed, 8);
    require(record.counts == sharded.counts, "sharded counts differ from the serial ones");
}

// 10. CLI round-trip on the Bell state and the tomography route.
void criterion_cli_round_trip() {
    const std::string bell = write_temp(
        "acceptance_bell.json",
        R"({"amplitudes": [[0.7071067811865476, 0], [0, 0], [0, 0], [0.7071067811865476, 0]]})");
    const CommandResult first = run_cli("analyze " + bell);
    require(first.exit_code == 0, "analyze exited with " + std::to_string(first.exit_code));
    const CommandResult second = run_cli("analyze " + bell);
    require(first.output == second.output, "analyze output not byte-stable");

    const std::string rho = write_temp("acceptance_rho.json",
                                       R"({"rho": [[[0.8, 0], [0, 0]], [[0, 0], [0.2, 0]]]})");
    const CommandResult tomo = run_cli("tomography " + rho);
    require(tomo.exit_code == 0, "tomography exited with " + std::to_string(tomo.exit_code));
    require(tomo.output.find("\"concurrence\": 0.8,") != std::string::npos,
            "tomography concurrence is not 0.8");
    require(tomo.output.find("\"i_max\": 0.531004406411,") != std::string::npos,
            "tomography i_max does not match i_max(0.8)");
    const CommandResult tomo2 = run_cli("tomography " + rho);
    require(tomo.output == tomo2.output, "tomography output not byte-stable");

    require(first.output.find("\"i_max\": 1,") != std::string::npos, "Bell i_max is not 1");
    require(first.output.find("\"holevo\": 1,") != std::string::npos, "Bell holevo is not 1");
    require(first.output.find("\"jrw\": 1\n") != std::string::npos ||
                first.output.find("\"jrw\": 1,") != std::string::npos,
            "Bell jrw is not 1 (the subentropy limit at C=1 is 1 - 1/(2 ln 2) "
            "= 0.278652479556, and the report says so)");
}

}  // namespace

int main() {
    run_criterion("1. grid search reproduces i_max(C) within 5e-4 for C=0.1..0.9",
                  criterion_grid_reproduces_maximum);
    run_criterion("2. endpoint cases C=0 and C=1 within 1e-12", criterion_endpoints);
    run_criterion("3. jrw <= i_max <= holevo with interior strictness", criterion_bound_sandwich);
    run_criterion("4. ellipse-boundary maxima at phi in {0, pi} equal i_max",
                  criterion_ellipse_geometry);
    run_criterion("5. quadratic small-C law and linear purity law", criterion_asymptotics);
    run_criterion("6. Schmidt frame, membership, convexity and curvature suites",
                  criterion_geometry_suites);
    run_criterion("7. randomized strategy: gamma=pi kills the leak; C_eff certified",
                  criterion_randomized_strategy);
    run_criterion("8. joint distribution equals the Born contraction on 1e4 samples",
                  criterion_oracle_equivalence);
    run_criterion("9. 1e6-sample empirical information within 2e-3 at C=0.7",
                  criterion_monte_carlo);
    run_criterion("10. CLI round-trip: Bell analyze and diag(0.8,0.2) tomography",
                  criterion_cli_round_trip);

    if (g_failures != 0) {
        std::cout << g_failures << " criterion(s) failed" << std::endl;
    }
    return g_failures;
}
