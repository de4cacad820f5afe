#include "qrng/verify.hpp"

#include <cmath>

#include "qrng/attacker_optimizer.hpp"
#include "qrng/information_measures.hpp"
#include "qrng/measurement.hpp"
#include "qrng/oracles.hpp"
#include "qrng/rng.hpp"

namespace qrng {

namespace {

Eigen::Vector3d sample_sphere(CounterRng& rng) {
    const double z = 1.0 - 2.0 * rng.next_uniform();
    const double phi = 2.0 * 3.1415926535897932384626433832795 * rng.next_uniform();
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    return {r * std::cos(phi), r * std::sin(phi), z};
}

void track(VerifySuiteResult& suite, double deviation, double tolerance) {
    ++suite.checks;
    if (deviation > suite.worst) suite.worst = deviation;
    if (deviation > tolerance) ++suite.failures;
}

// joint_distribution and marginal_probability against explicit projector
// contractions; the fault offset shifts the implementation side.
VerifySuiteResult oracle_equivalence_suite(const VerifyOptions& options) {
    VerifySuiteResult suite{"oracle_equivalence", 0, 0, 0.0};
    CounterRng rng(options.seed);
    for (int k = 0; k < options.n_states; ++k) {
        const TwoQubitState state = random_pure_state(options.seed + 1000 + k);
        const Eigen::Vector3d va = sample_sphere(rng);
        const Eigen::Vector3d vb = sample_sphere(rng);
        const MeasurementDirection ea(va), eb(vb);
        const JointDistribution joint = joint_distribution(state, ea, eb);
        for (int a = 0; a < 2; ++a) {
            for (int b = 0; b < 2; ++b) {
                const double reference = oracle::born_joint_probability(state, va, vb, a, b);
                track(suite, std::abs(joint.w(a, b) + options.fault_offset - reference), 1e-10);
            }
        }
        for (int bit = 0; bit < 2; ++bit) {
            track(suite,
                  std::abs(marginal_probability(state, ea, Subsystem::A, bit) +
                           options.fault_offset -
                           oracle::born_marginal_probability(state, va, Subsystem::A, bit)),
                  1e-10);
            track(suite,
                  std::abs(marginal_probability(state, eb, Subsystem::B, bit) +
                           options.fault_offset -
                           oracle::born_marginal_probability(state, vb, Subsystem::B, bit)),
                  1e-10);
        }
    }
    return suite;
}

// Schmidt machinery: diagonal correlation matrix, equal Bloch lengths,
// concurrence/purity identities, reconstruction of the state.
VerifySuiteResult schmidt_frame_suite(const VerifyOptions& options) {
    VerifySuiteResult suite{"schmidt_frame", 0, 0, 0.0};
    for (int k = 0; k < options.n_states; ++k) {
        const TwoQubitState state = random_pure_state(options.seed + 5000 + k);
        const double c = concurrence(state);
        const SchmidtFrame frame = schmidt_frame(state);
        const Eigen::Matrix3d k_schmidt =
            frame.rotation_a.transpose() * correlation_matrix(state) * frame.rotation_b;
        Eigen::Matrix3d expected = Eigen::Matrix3d::Zero();
        expected(0, 0) = c;
        expected(1, 1) = -c;
        expected(2, 2) = 1.0;
        track(suite, (k_schmidt - expected).cwiseAbs().maxCoeff(), 1e-8);

        const double la = bloch_vector(partial_trace(state, Subsystem::A)).length();
        const double lb = bloch_vector(partial_trace(state, Subsystem::B)).length();
        track(suite, std::abs(la - lb), 1e-9);
        track(suite, std::abs(c * c + la * la - 1.0), 1e-9);
        track(suite, std::abs(purity(partial_trace(state, Subsystem::A)) - (1.0 - c * c / 2.0)),
              1e-9);

        const SchmidtDecomposition sd = schmidt_decompose(state);
        Matrix2c rebuilt = Matrix2c::Zero();
        for (int s = 0; s < 2; ++s) {
            rebuilt += std::sqrt(std::max(sd.lambda1 * (s == 0) + sd.lambda2 * (s == 1), 0.0)) *
                       sd.basis_a[s] * sd.basis_b[s].transpose();
        }
        // equality up to a global phase: |<rebuilt | state>| = 1
        const complexd overlap = (rebuilt.conjugate().cwiseProduct(state.amplitudes())).sum();
        track(suite, std::abs(std::abs(overlap) - 1.0), 1e-8);
    }
    return suite;
}

// jrw <= i_max <= holevo on a dense concurrence grid, strict upper bound on the
// interior, equalities at the endpoints, and the binary-entropy identity.
VerifySuiteResult bound_ordering_suite(const VerifyOptions& options) {
    VerifySuiteResult suite{"bound_ordering", 0, 0, 0.0};
    for (int k = 0; k <= 1000; ++k) {
        const double c = static_cast<double>(k) / 1000.0;
        const double value = i_max(c) + options.fault_offset;
        const double upper = holevo_bound(c);
        const double lower = jrw_bound(c);
        track(suite, lower - value, 1e-12);
        track(suite, value - upper, 1e-12);
        track(suite, std::abs(value - (1.0 - binary_entropy((1.0 + c) / 2.0))), 1e-12);
        if (c >= 0.01 && c <= 0.99) {
            // strictly below the Holevo bound on the interior
            track(suite, 1e-6 - (upper - value), 0.0);
        }
    }
    track(suite, std::abs(holevo_bound(0.0) - i_max(0.0) - options.fault_offset), 1e-9);
    track(suite, std::abs(holevo_bound(1.0) - i_max(1.0) - options.fault_offset), 1e-9);
    return suite;
}

// Mixing two attainable (kappa, beta) settings never beats mixing their
// information values.
VerifySuiteResult convexity_suite(const VerifyOptions& options) {
    VerifySuiteResult suite{"convexity", 0, 0, 0.0};
    const double c = 0.8;
    const double s = std::sqrt(1.0 - c * c);
    CounterRng rng(options.seed + 42);
    for (int k = 0; k < 10000; ++k) {
        double p[3][2];
        for (auto& point : p) {
            const double r = std::sqrt(rng.next_uniform());
            const double t = 2.0 * 3.1415926535897932384626433832795 * rng.next_uniform();
            point[0] = c * r * std::cos(t);
            point[1] = s * r * std::sin(t);
        }
        const double lambda = rng.next_uniform();
        const double mixed = mutual_information_abk(
            0.0, lambda * p[0][1] + (1.0 - lambda) * p[1][1],
            lambda * p[0][0] + (1.0 - lambda) * p[1][0]);
        const double bound = lambda * mutual_information_abk(0.0, p[0][1], p[0][0]) +
                             (1.0 - lambda) * mutual_information_abk(0.0, p[1][1], p[1][0]) +
                             options.fault_offset;
        track(suite, mixed - bound - 1e-10, 0.0);
    }
    return suite;
}

std::size_t run_membership(const TwoQubitState& state, std::size_t n_pairs, uint64_t seed,
                           bool parallel) {
    const double c = concurrence(state);
    const Eigen::Vector3d a_a = bloch_vector(partial_trace(state, Subsystem::A)).v;
    const Eigen::Vector3d a_b = bloch_vector(partial_trace(state, Subsystem::B)).v;
    const Eigen::Matrix3d k_mat = correlation_matrix(state);
    long violations = 0;
    const long n = static_cast<long>(n_pairs);
#pragma omp parallel for schedule(static) reduction(+ : violations) if (parallel)
    for (long i = 0; i < n; ++i) {
        // 4 draws per pair, indexed so every thread count sees the same stream
        const uint64_t base = 4 * static_cast<uint64_t>(i);
        const double za = 1.0 - 2.0 * uniform_draw(seed, base);
        const double pa = 2.0 * 3.1415926535897932384626433832795 * uniform_draw(seed, base + 1);
        const double zb = 1.0 - 2.0 * uniform_draw(seed, base + 2);
        const double pb = 2.0 * 3.1415926535897932384626433832795 * uniform_draw(seed, base + 3);
        const double ra = std::sqrt(std::max(0.0, 1.0 - za * za));
        const double rb = std::sqrt(std::max(0.0, 1.0 - zb * zb));
        const Eigen::Vector3d ea(ra * std::cos(pa), ra * std::sin(pa), za);
        const Eigen::Vector3d eb(rb * std::cos(pb), rb * std::sin(pb), zb);
        const double alpha = ea.dot(a_a);
        const double beta = eb.dot(a_b);
        const double kappa = ea.dot(k_mat * eb);
        const ConstraintEllipse ellipse(c, alpha);
        if (!ellipse.contains(kappa, beta)) ++violations;
    }
    return static_cast<std::size_t>(violations);
}

}  // namespace

std::vector<VerifySuiteResult> run_verification(const VerifyOptions& options) {
    return {oracle_equivalence_suite(options), schmidt_frame_suite(options),
            bound_ordering_suite(options), convexity_suite(options)};
}

bool all_passed(const std::vector<VerifySuiteResult>& results) {
    for (const auto& suite : results) {
        if (suite.failures != 0) return false;
    }
    return true;
}

std::size_t membership_violations(const TwoQubitState& state, std::size_t n_pairs, uint64_t seed) {
    return run_membership(state, n_pairs, seed, true);
}

std::size_t membership_violations_serial(const TwoQubitState& state, std::size_t n_pairs,
                                         uint64_t seed) {
    return run_membership(state, n_pairs, seed, false);
}

}  // namespace qrng
