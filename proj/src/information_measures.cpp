#include "qrng/information_measures.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qrng {

namespace {

constexpr double kLn2 = 0.69314718055994530941723212145818;
constexpr double kLogFloor = 1e-300;  // below this, treat x log x terms as 0

double plog2p(double x) {
    if (x < kLogFloor) return 0.0;
    return x * std::log2(x);
}

std::string describe(double value) {
    std::ostringstream os;
    os.precision(17);
    os << value;
    return os.str();
}

}  // namespace

double binary_entropy(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::domain_error("binary entropy argument " + describe(p) + " outside [0, 1]");
    }
    return -plog2p(p) - plog2p(1.0 - p);
}

double shannon_entropy(const QubitDensityMatrix& rho) {
    return binary_entropy(rho.eigenvalues()[0]);
}

double subentropy_from_eigenvalues(double lambda1, double lambda2) {
    if (lambda1 < -1e-12 || lambda2 < -1e-12 || std::abs(lambda1 + lambda2 - 1.0) > 1e-9) {
        throw precondition_error("subentropy expects a qubit spectrum summing to 1");
    }
    const double l = std::min(std::max(lambda1, 0.0), 1.0);
    const double m = 1.0 - l;
    if (std::abs(lambda1 - lambda2) < 1e-6) {
        // L'Hopital at the degenerate point: Q -> f'(l) / 2 with
        // f(l) = -l^2 log2 l + (1-l)^2 log2(1-l).
        const double fp = -2.0 * plog2p(l) - l / kLn2 - 2.0 * plog2p(m) - m / kLn2;
        return fp / 2.0;
    }
    const double numerator = -l * plog2p(l) + m * plog2p(m);
    return numerator / (l - m);
}

double subentropy(const QubitDensityMatrix& rho) {
    const auto ev = rho.eigenvalues();
    return subentropy_from_eigenvalues(ev[0], ev[1]);
}

double mutual_information(const JointDistribution& joint) {
    double i = 0.0;
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            const double w = joint.w(a, b);
            if (w < kLogFloor) continue;
            const double denom = joint.marginal_a(a) * joint.marginal_b(b);
            if (denom < kLogFloor) continue;
            i += w * std::log2(w / denom);
        }
    }
    return i;
}

double mutual_information_abk(double alpha, double beta, double kappa) {
    double i = 0.0;
    for (int a = 0; a < 2; ++a) {
        const double sa = a == 0 ? 1.0 : -1.0;
        const double da = 1.0 + sa * alpha;
        for (int b = 0; b < 2; ++b) {
            const double sb = b == 0 ? 1.0 : -1.0;
            const double db = 1.0 + sb * beta;
            double n = 1.0 + sa * alpha + sb * beta + sa * sb * kappa;
            if (n < -4.0 * probability_clamp) {
                throw std::domain_error("parameters (alpha, beta, kappa) = (" + describe(alpha) +
                                        ", " + describe(beta) + ", " + describe(kappa) +
                                        ") yield the negative probability " + describe(n / 4.0));
            }
            n = std::max(n, 0.0);
            if (n < kLogFloor || da < kLogFloor || db < kLogFloor) continue;
            i += n * std::log2(n / (da * db)) / 4.0;
        }
    }
    return i;
}

double mutual_information_abk(const MeasurementParameters& p) {
    return mutual_information_abk(p.alpha, p.beta, p.kappa);
}

double i_max(double c) {
    if (!(c >= 0.0 && c <= 1.0)) {
        throw std::domain_error("concurrence " + describe(c) + " outside [0, 1]");
    }
    return plog2p(1.0 + c) / 2.0 + plog2p(1.0 - c) / 2.0;
}

double i_max_small_c(double c) {
    return c * c / (2.0 * kLn2);
}

double i_max_from_purity(double p) {
    if (!(p >= 0.5 - 1e-12 && p <= 1.0 + 1e-12)) {
        throw std::domain_error("single-qubit purity " + describe(p) + " outside [1/2, 1]");
    }
    const double c2 = std::max(0.0, std::min(1.0, 2.0 * (1.0 - p)));
    return i_max(std::sqrt(c2));
}

double holevo_bound(double c) {
    if (!(c >= 0.0 && c <= 1.0)) {
        throw std::domain_error("concurrence " + describe(c) + " outside [0, 1]");
    }
    return binary_entropy((1.0 + std::sqrt(1.0 - c * c)) / 2.0);
}

double jrw_bound(double c) {
    if (!(c >= 0.0 && c <= 1.0)) {
        throw std::domain_error("concurrence " + describe(c) + " outside [0, 1]");
    }
    const double lambda1 = (1.0 + std::sqrt(1.0 - c * c)) / 2.0;
    return subentropy_from_eigenvalues(lambda1, 1.0 - lambda1);
}

PrivacyBounds privacy_bounds(const TwoQubitState& state) {
    PrivacyBounds b;
    b.concurrence = std::min(concurrence(state), 1.0);
    b.purity = purity(partial_trace(state, Subsystem::A));
    b.i_max = i_max(b.concurrence);
    b.holevo = holevo_bound(b.concurrence);
    b.jrw = jrw_bound(b.concurrence);
    return b;
}

ConditionalStatePair conditional_attacker_states(const TwoQubitState& state,
                                                 const MeasurementDirection& ea, double phase) {
    const BlochVector a = bloch_vector(partial_trace(state, Subsystem::A));
    if (std::abs(ea.vec().dot(a.v)) > perpendicular_tolerance) {
        throw precondition_error("user direction must be perpendicular to the user Bloch vector "
                                 "(e_A . a_A = " + describe(ea.vec().dot(a.v)) + ")");
    }
    const SchmidtDecomposition sd = schmidt_decompose(state);
    const double r1 = std::sqrt(sd.lambda1);
    const double r2 = std::sqrt(std::max(sd.lambda2, 0.0));
    const complexd rot = std::exp(complexd(0.0, -phase));
    ConditionalStatePair pair;
    // Measuring in the Schmidt-frame equator steers B into
    // sqrt(lambda1)|up> +- e^{-i phase} sqrt(lambda2)|down>.
    pair.psi0 = r1 * sd.basis_b[0] + r2 * rot * sd.basis_b[1];
    pair.psi1 = r1 * sd.basis_b[0] - r2 * rot * sd.basis_b[1];
    pair.overlap = sd.lambda1 - sd.lambda2;
    return pair;
}

}  // namespace qrng
