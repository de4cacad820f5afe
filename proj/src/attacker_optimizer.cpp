#include "qrng/attacker_optimizer.hpp"

#include <cmath>
#include <limits>

namespace qrng {

namespace {

constexpr double kLn2 = 0.69314718055994530941723212145818;
constexpr double kPi = 3.1415926535897932384626433832795;
constexpr double kLogFloor = 1e-300;

// Non-throwing fast path of mutual_information_abk for lattice scans: negative
// rounding noise in the cell probabilities is clamped and cells under a
// vanishing marginal are dropped, matching the library convention.  Without
// the marginal guard a pole node (|beta| = 1, cell holding rounding noise)
// would multiply that noise by an infinite log.
double mi_abk_fast(double alpha, double beta, double kappa) {
    const double da0 = 1.0 + alpha;
    const double da1 = 1.0 - alpha;
    const double la0 = std::log2(da0);
    const double la1 = std::log2(da1);
    const double db0 = 1.0 + beta;
    const double db1 = 1.0 - beta;
    const double lb0 = std::log2(db0);
    const double lb1 = std::log2(db1);
    double i = 0.0;
    for (int a = 0; a < 2; ++a) {
        const double sa = a == 0 ? 1.0 : -1.0;
        const double da = a == 0 ? da0 : da1;
        const double la = a == 0 ? la0 : la1;
        for (int b = 0; b < 2; ++b) {
            const double sb = b == 0 ? 1.0 : -1.0;
            const double db = b == 0 ? db0 : db1;
            const double lb = b == 0 ? lb0 : lb1;
            const double n = 1.0 + sa * alpha + sb * beta + sa * sb * kappa;
            if (n < kLogFloor || da < kLogFloor || db < kLogFloor) continue;
            i += n * (std::log2(n) - la - lb);
        }
    }
    return i / 4.0;
}

void check_perpendicular(const TwoQubitState& state, const MeasurementDirection& ea,
                         double tolerance) {
    const BlochVector a = bloch_vector(partial_trace(state, Subsystem::A));
    if (std::abs(ea.vec().dot(a.v)) > tolerance) {
        throw precondition_error(
            "user direction must be perpendicular to the user Bloch vector");
    }
}

OptimizationResult run_grid_search(const TwoQubitState& state, const MeasurementDirection& ea,
                                   double resolution, bool parallel) {
    if (!(resolution > 0.0 && resolution <= 0.1)) {
        throw precondition_error("grid resolution must lie in (0, 0.1] radians");
    }
    const Eigen::Vector3d a_b = bloch_vector(partial_trace(state, Subsystem::B)).v;
    const Eigen::Vector3d k_vec = correlation_matrix(state).transpose() * ea.vec();
    const double alpha = ea.vec().dot(bloch_vector(partial_trace(state, Subsystem::A)).v);
    const auto scan = detail::scan_sphere_max(a_b, k_vec, alpha, resolution, parallel);
    OptimizationResult result{MeasurementDirection::from_spherical(scan.theta, scan.phi),
                              MeasurementDirection::from_spherical(kPi - scan.theta,
                                                                   scan.phi + kPi),
                              scan.value, OptimizationMethod::grid, resolution};
    return result;
}

}  // namespace

namespace detail {

SphereScanResult scan_sphere_max(const Eigen::Vector3d& a_b, const Eigen::Vector3d& k_vec,
                                 double alpha, double resolution, bool parallel) {
    const long n_theta = static_cast<long>(std::ceil(kPi / resolution));
    const long n_phi = static_cast<long>(std::ceil(2.0 * kPi / resolution));
    struct RowBest {
        double value = -std::numeric_limits<double>::infinity();
        long phi_index = 0;
    };
    std::vector<RowBest> rows(n_theta + 1);

#pragma omp parallel for schedule(static) if (parallel)
    for (long ti = 0; ti <= n_theta; ++ti) {
        const double theta = std::min(ti * resolution, kPi);
        const double st = std::sin(theta);
        const double ct = std::cos(theta);
        const bool pole = ti == 0 || ti == n_theta;  // poles contribute one point
        const long row_points = pole ? 1 : n_phi;
        RowBest best;
        for (long pi = 0; pi < row_points; ++pi) {
            const double phi = pi * resolution;
            const Eigen::Vector3d e(st * std::cos(phi), st * std::sin(phi), ct);
            const double value = mi_abk_fast(alpha, e.dot(a_b), e.dot(k_vec));
            if (value > best.value) {
                best.value = value;
                best.phi_index = pi;
            }
        }
        rows[ti] = best;
    }

    long best_row = 0;
    for (long ti = 1; ti <= n_theta; ++ti) {
        if (rows[ti].value > rows[best_row].value) best_row = ti;
    }
    SphereScanResult out;
    out.value = rows[best_row].value;
    out.theta = std::min(best_row * resolution, kPi);
    out.phi = rows[best_row].phi_index * resolution;
    return out;
}

}  // namespace detail

OptimizationResult optimal_attacker_analytic(const TwoQubitState& state,
                                             const MeasurementDirection& ea) {
    check_perpendicular(state, ea, 1e-6);
    const double c = std::min(concurrence(state), 1.0);
    const SchmidtFrame frame = schmidt_frame(state);
    const Eigen::Vector3d ea_s = frame.to_schmidt_a(ea.vec());
    // Mirror through the Schmidt xz-plane; kappa becomes +C, beta vanishes.
    Eigen::Vector3d eb_s(ea_s.x(), -ea_s.y(), ea_s.z());
    Eigen::Vector3d eb = frame.to_lab_b(eb_s);
    eb /= eb.norm();
    OptimizationResult result{MeasurementDirection(eb), MeasurementDirection(Eigen::Vector3d(-eb)),
                              i_max(c), OptimizationMethod::analytic, 0.0};
    return result;
}

OptimizationResult grid_search_attacker(const TwoQubitState& state, const MeasurementDirection& ea,
                                        double resolution) {
    return run_grid_search(state, ea, resolution, true);
}

OptimizationResult grid_search_attacker_serial(const TwoQubitState& state,
                                               const MeasurementDirection& ea, double resolution) {
    return run_grid_search(state, ea, resolution, false);
}

double grid_error_bound(double concurrence, double resolution) {
    if (!(concurrence > 0.0 && concurrence < 1.0)) {
        throw precondition_error("grid error bound requires 0 < C < 1");
    }
    if (!(resolution > 0.0 && resolution <= 0.1)) {
        throw precondition_error("grid resolution must lie in (0, 0.1] radians");
    }
    // Both principal curvatures of the objective at its maximum are bounded in
    // magnitude by the transverse one, t = (C/2) log2((1+C)/(1-C)); the
    // curvature along the constraint boundary is t - C^2/ln2, which is smaller
    // since log2((1+C)/(1-C)) > 2C/ln2.  The nearest lattice node lies within
    // resolution/2 in each angle, so the quadratic shortfall is at most
    // t * resolution^2 / 4; the extra factor 2 absorbs quartic terms.
    const double c = concurrence;
    const double t = (c / 2.0) * (std::log2(1.0 + c) - std::log2(1.0 - c));
    return t * resolution * resolution / 2.0;
}

EllipseSweep ellipse_sweep(double concurrence, std::size_t n_points) {
    if (!(concurrence > 0.0 && concurrence < 1.0)) {
        throw precondition_error("ellipse sweep requires 0 < C < 1");
    }
    if (n_points < 3) {
        throw precondition_error("ellipse sweep needs at least 3 points");
    }
    EllipseSweep sweep;
    sweep.concurrence = concurrence;
    sweep.phi.reserve(n_points);
    sweep.value.reserve(n_points);
    for (std::size_t i = 0; i < n_points; ++i) {
        const double phi = static_cast<double>(i) * kPi / static_cast<double>(n_points - 1);
        const auto [kappa, beta] = ellipse_boundary_point(concurrence, phi);
        sweep.phi.push_back(phi);
        sweep.value.push_back(mutual_information_abk(0.0, beta, kappa));
    }
    return sweep;
}

double mi_on_boundary(double concurrence, double phi) {
    const auto [kappa, beta] = ellipse_boundary_point(concurrence, phi);
    return mutual_information_abk(0.0, beta, kappa);
}

double mi_phase_derivative(double concurrence, double phi) {
    if (!(concurrence > 0.0 && concurrence < 1.0)) {
        throw precondition_error("boundary derivative requires 0 < C < 1");
    }
    const double s = std::sqrt(1.0 - concurrence * concurrence);
    const double kappa = concurrence * std::cos(phi);
    const double beta = s * std::sin(phi);
    // d n_ab / d phi, with cos/sin rewritten through kappa and beta.
    const double dkappa = -concurrence * std::sin(phi);
    const double dbeta = s * std::cos(phi);
    double d = 0.0;
    for (int a = 0; a < 2; ++a) {
        const double sa = a == 0 ? 1.0 : -1.0;
        for (int b = 0; b < 2; ++b) {
            const double sb = b == 0 ? 1.0 : -1.0;
            const double n = 1.0 + sb * beta + sa * sb * kappa;
            const double db = 1.0 + sb * beta;
            if (n < kLogFloor || db < kLogFloor) continue;
            const double dn = sb * dbeta + sa * sb * dkappa;
            d += dn * std::log2(n / db);
        }
    }
    return d / 4.0;
}

std::vector<double> stationary_points(double concurrence, double scan_resolution,
                                      double tolerance) {
    if (!(concurrence > 0.0 && concurrence < 1.0)) {
        throw precondition_error("stationary point scan requires 0 < C < 1");
    }
    if (!(scan_resolution > 0.0 && scan_resolution < kPi)) {
        throw precondition_error("scan resolution must lie in (0, pi)");
    }
    std::vector<double> roots{0.0};  // endpoints are stationary by the mirror symmetries
    double prev_phi = scan_resolution;
    double prev_val = mi_phase_derivative(concurrence, prev_phi);
    for (double phi = 2.0 * scan_resolution; phi < kPi - scan_resolution / 2.0;
         phi += scan_resolution) {
        const double val = mi_phase_derivative(concurrence, phi);
        if ((prev_val < 0.0 && val > 0.0) || (prev_val > 0.0 && val < 0.0) || prev_val == 0.0) {
            double lo = prev_phi, hi = phi, flo = prev_val;
            while (hi - lo > tolerance) {
                const double mid = (lo + hi) / 2.0;
                const double fmid = mi_phase_derivative(concurrence, mid);
                if ((flo <= 0.0) == (fmid <= 0.0)) {
                    lo = mid;
                    flo = fmid;
                } else {
                    hi = mid;
                }
            }
            roots.push_back((lo + hi) / 2.0);
        }
        prev_phi = phi;
        prev_val = val;
    }
    roots.push_back(kPi);
    return roots;
}

double second_derivative_at_max(double concurrence) {
    if (!(concurrence > 0.0 && concurrence < 1.0)) {
        throw precondition_error("curvature formula requires 0 < C < 1");
    }
    const double c = concurrence;
    return c * c / kLn2 - (c / 2.0) * (std::log2(1.0 + c) - std::log2(1.0 - c));
}

ConvexityReport verify_convexity(const std::vector<std::pair<double, double>>& points,
                                 const std::vector<double>& lambdas, double concurrence) {
    const ConstraintEllipse ellipse(concurrence, 0.0);
    for (const auto& [kappa, beta] : points) {
        if (!ellipse.contains(kappa, beta)) {
            throw precondition_error("convexity sample lies outside the constraint ellipse");
        }
    }
    ConvexityReport report;
    std::vector<double> values;
    values.reserve(points.size());
    for (const auto& [kappa, beta] : points) {
        values.push_back(mutual_information_abk(0.0, beta, kappa));
    }
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            for (const double lambda : lambdas) {
                if (!(lambda >= 0.0 && lambda <= 1.0)) {
                    throw precondition_error("mixing weight must lie in [0, 1]");
                }
                const double kappa = lambda * points[i].first + (1.0 - lambda) * points[j].first;
                const double beta = lambda * points[i].second + (1.0 - lambda) * points[j].second;
                const double mixed = mutual_information_abk(0.0, beta, kappa);
                const double bound = lambda * values[i] + (1.0 - lambda) * values[j];
                const double violation = mixed - bound - 1e-10;
                ++report.combinations;
                if (violation > report.max_violation) report.max_violation = violation;
                if (violation > 0.0) report.passed = false;
            }
        }
    }
    return report;
}

}  // namespace qrng
