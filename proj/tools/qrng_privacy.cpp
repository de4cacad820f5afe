// Command-line front end: privacy reports for two-qubit source states, bound
// sweeps, ellipse scans, and the self-verification suites.
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qrng/errors.hpp"
#include "qrng/report.hpp"
#include "qrng/verify.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw qrng::parse_error("cannot open input file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

int run_analyze(const std::string& path, const std::vector<double>& direction,
                std::optional<double> resolution) {
    const std::string text = read_file(path);
    const qrng::TwoQubitState state(qrng::load_state_amplitudes(text));

    std::optional<qrng::MeasurementDirection> ea;
    if (!direction.empty()) {
        Eigen::Vector3d raw(direction[0], direction[1], direction[2]);
        if (raw.norm() < 1e-12) {
            throw qrng::precondition_error("--direction must be a nonzero 3-vector");
        }
        ea.emplace(Eigen::Vector3d(raw.normalized()));
    }
    const qrng::PrivacyReport report =
        qrng::analyze_state(state, ea, qrng::fnv1a64_hex(text), resolution);
    std::cout << report.to_json();
    return 0;
}

int run_tomography(const std::string& path) {
    const std::string text = read_file(path);
    const qrng::QubitDensityMatrix rho =
        qrng::QubitDensityMatrix::clamped(qrng::load_density_matrix(text));
    std::cout << qrng::analyze_density(rho, qrng::fnv1a64_hex(text)).to_json();
    return 0;
}

int run_verify(uint64_t seed, int states, bool inject_fault, double fault_offset) {
    qrng::VerifyOptions options;
    options.seed = seed;
    options.n_states = states;
    options.fault_offset = inject_fault ? fault_offset : 0.0;

    const std::vector<qrng::VerifySuiteResult> results = qrng::run_verification(options);
    std::printf("%-22s %8s %9s %12s\n", "suite", "checks", "failures", "worst");
    for (const auto& suite : results) {
        std::printf("%-22s %8zu %9zu %12.3e\n", suite.name.c_str(), suite.checks,
                    suite.failures, suite.worst);
    }
    const bool ok = qrng::all_passed(results);
    std::printf("RESULT: %s\n", ok ? "PASS" : "FAIL");
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Privacy bounds for bits generated by measuring one qubit of an imperfect\n"
        "two-qubit source while an attacker measures the other.\n\n"
        "Exit codes: 0 success, 1 verification failure, 2 parse/usage error,\n"
        "3 unphysical input, 4 violated precondition."};
    app.require_subcommand(1);

    auto* analyze = app.add_subcommand(
        "analyze", "Report privacy bounds and the optimal attacker direction for a state file");
    std::string analyze_path;
    analyze->add_option("file", analyze_path, "JSON file with an \"amplitudes\" array")
        ->required();
    std::vector<double> direction;
    analyze
        ->add_option("--direction", direction,
                     "user measurement direction (3 components; must be orthogonal to the "
                     "user Bloch vector)")
        ->expected(3);
    double resolution = 0.0;
    auto* resolution_opt = analyze->add_option(
        "--resolution", resolution, "also certify the optimum by grid search at this angular "
                                    "resolution in radians");

    auto* tomography = app.add_subcommand(
        "tomography", "Upper-bound privacy from a measured single-qubit density matrix");
    std::string tomography_path;
    tomography->add_option("file", tomography_path, "JSON file with a 2x2 \"rho\" matrix")
        ->required();

    auto* sweep = app.add_subcommand(
        "sweep", "CSV of privacy bounds over a concurrence range (figure data)");
    double c_min = 0.0;
    double c_max = 1.0;
    int steps = 101;
    sweep->add_option("--c-min", c_min, "lowest concurrence (default 0)");
    sweep->add_option("--c-max", c_max, "highest concurrence (default 1)");
    sweep->add_option("--steps", steps, "number of rows (default 101)");
    double gamma = 0.0;
    auto* gamma_opt = sweep->add_option(
        "--gamma", gamma, "also tabulate the randomized two-direction strategy with this "
                          "angle between the directions (radians)");

    auto* ellipse = app.add_subcommand(
        "ellipse", "CSV of mutual information along the constraint-ellipse boundary");
    double ellipse_c = 0.0;
    ellipse->add_option("--concurrence", ellipse_c, "concurrence in (0,1)")->required();
    std::size_t ellipse_points = 181;
    ellipse->add_option("--points", ellipse_points, "number of samples (default 181)");

    auto* verify = app.add_subcommand("verify", "Run the self-check suites and print a table");
    uint64_t seed = 20240801;
    verify->add_option("--seed", seed, "base seed for the random-state suites");
    int states = 200;
    verify->add_option("--states", states, "random states per suite");
    bool inject_fault = false;
    verify->add_flag("--inject-fault", inject_fault,
                     "corrupt one internal formula so the suites must fail (sensitivity "
                     "fixture)");
    double fault_offset = 1e-3;
    verify->add_option("--fault-offset", fault_offset,
                       "offset used by --inject-fault (default 1e-3)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (analyze->parsed()) {
            std::optional<double> res;
            if (resolution_opt->count() > 0) res = resolution;
            return run_analyze(analyze_path, direction, res);
        }
        if (tomography->parsed()) {
            return run_tomography(tomography_path);
        }
        if (sweep->parsed()) {
            std::optional<double> g;
            if (gamma_opt->count() > 0) g = gamma;
            std::cout << qrng::sweep_csv(c_min, c_max, steps, g);
            return 0;
        }
        if (ellipse->parsed()) {
            std::cout << qrng::ellipse_csv(ellipse_c, ellipse_points);
            return 0;
        }
        if (verify->parsed()) {
            return run_verify(seed, states, inject_fault, fault_offset);
        }
    } catch (const qrng::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const qrng::usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const qrng::validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const qrng::precondition_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
