// Timing comparison of the OpenMP kernels against their serial reference
// implementations.  Both variants must agree exactly; the table reports the
// wall time of each and the speedup.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include <omp.h>

#include "qrng/attacker_optimizer.hpp"
#include "qrng/empirical_sampler.hpp"
#include "qrng/measurement.hpp"
#include "qrng/state_algebra.hpp"
#include "qrng/verify.hpp"

namespace {

double seconds(const std::chrono::steady_clock::time_point& t0,
               const std::chrono::steady_clock::time_point& t1) {
    return std::chrono::duration<double>(t1 - t0).count();
}

template <typename F>
double time_call(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    return seconds(t0, t1);
}

void report(const char* name, double serial, double parallel, bool identical) {
    std::printf("%-24s %10.3f s %10.3f s %7.2fx   %s\n", name, serial, parallel,
                serial / parallel, identical ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    const double resolution = argc > 1 ? std::atof(argv[1]) : 2e-3;
    const std::size_t n_samples = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 20000000ULL;
    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-24s %12s %12s %9s\n", "kernel", "serial", "parallel", "speedup");

    const qrng::TwoQubitState state = qrng::random_state_with_concurrence(0.7, 99);
    const qrng::SchmidtFrame frame = qrng::schmidt_frame(state);
    const qrng::MeasurementDirection ea(
        Eigen::Vector3d(frame.to_lab_a(Eigen::Vector3d::UnitX()).normalized()));

    qrng::OptimizationResult serial_grid = qrng::grid_search_attacker_serial(state, ea, resolution);
    qrng::OptimizationResult parallel_grid = serial_grid;
    const double t_grid_serial =
        time_call([&] { serial_grid = qrng::grid_search_attacker_serial(state, ea, resolution); });
    const double t_grid_parallel =
        time_call([&] { parallel_grid = qrng::grid_search_attacker(state, ea, resolution); });
    report("grid_search", t_grid_serial, t_grid_parallel,
           serial_grid.best_value == parallel_grid.best_value &&
               serial_grid.best_direction.vec() == parallel_grid.best_direction.vec());

    const qrng::JointDistribution joint = qrng::joint_distribution(
        state, ea, qrng::grid_search_attacker(state, ea, 5e-3).best_direction);
    qrng::BitRecord serial_rec = qrng::sample_bits(joint, 1, 7);
    qrng::BitRecord parallel_rec = serial_rec;
    const double t_sample_serial =
        time_call([&] { serial_rec = qrng::sample_bits(joint, n_samples, 7); });
    const double t_sample_parallel = time_call(
        [&] { parallel_rec = qrng::sample_bits_parallel(joint, n_samples, 7, omp_get_max_threads()); });
    report("sample_bits", t_sample_serial, t_sample_parallel,
           serial_rec.counts == parallel_rec.counts);

    std::size_t serial_violations = 0;
    std::size_t parallel_violations = 0;
    const double t_member_serial = time_call(
        [&] { serial_violations = qrng::membership_violations_serial(state, 2000000, 5); });
    const double t_member_parallel =
        time_call([&] { parallel_violations = qrng::membership_violations(state, 2000000, 5); });
    report("ellipse_membership", t_member_serial, t_member_parallel,
           serial_violations == parallel_violations);
    return 0;
}
