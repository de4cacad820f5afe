#include "qrng/state_algebra.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <sstream>

namespace qrng {

namespace {

std::string describe(double value) {
    std::ostringstream os;
    os.precision(17);
    os << value;
    return os.str();
}

}  // namespace

TwoQubitState::TwoQubitState(const Matrix2c& amplitudes) : amp_(amplitudes) {
    const double n = amp_.norm();
    if (std::abs(n - 1.0) > norm_tolerance) {
        throw validation_error("two-qubit state norm is " + describe(n) +
                               ", expected 1 within 1e-9; rescale explicitly with "
                               "TwoQubitState::normalized if that is intended");
    }
}

TwoQubitState TwoQubitState::normalized(const Matrix2c& amplitudes) {
    const double n = amplitudes.norm();
    if (n == 0.0) {
        throw validation_error("cannot normalize a zero amplitude table");
    }
    return TwoQubitState(Matrix2c(amplitudes / n));
}

QubitDensityMatrix::QubitDensityMatrix(const Matrix2c& rho) : rho_(rho) {
    const double herm = (rho_ - rho_.adjoint()).norm();
    if (herm > 1e-9) {
        throw validation_error("density matrix is not hermitian (deviation " + describe(herm) + ")");
    }
    const double tr = rho_.trace().real();
    if (std::abs(tr - 1.0) > 1e-9 || std::abs(rho_.trace().imag()) > 1e-9) {
        throw validation_error("density matrix trace is " + describe(tr) + ", expected 1");
    }
    // Hermitian 2x2 eigenvalues: (tr +- sqrt((d0-d1)^2 + 4|o|^2)) / 2.
    const double d0 = rho_(0, 0).real();
    const double d1 = rho_(1, 1).real();
    const double off = std::abs(rho_(0, 1));
    const double disc = std::sqrt((d0 - d1) * (d0 - d1) + 4.0 * off * off);
    const double lambda_min = (tr - disc) / 2.0;
    if (lambda_min < -1e-9) {
        throw validation_error("density matrix has negative eigenvalue " + describe(lambda_min));
    }
}

QubitDensityMatrix QubitDensityMatrix::clamped(const Matrix2c& rho) {
    const double herm = (rho - rho.adjoint()).norm();
    if (herm > 1e-9) {
        throw validation_error("density matrix is not hermitian (deviation " + describe(herm) + ")");
    }
    const Matrix2c h = (rho + rho.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Matrix2c> solver(h);
    Eigen::Vector2d ev = solver.eigenvalues();
    for (int i = 0; i < 2; ++i) {
        if (ev(i) < -1e-9) {
            throw validation_error("density matrix has negative eigenvalue " + describe(ev(i)));
        }
        ev(i) = std::max(ev(i), 0.0);
    }
    const double sum = ev.sum();
    if (sum <= 0.0) {
        throw validation_error("density matrix has zero trace after clamping");
    }
    ev /= sum;
    QubitDensityMatrix out;
    out.rho_ = solver.eigenvectors() * ev.asDiagonal() * solver.eigenvectors().adjoint();
    return out;
}

std::array<double, 2> QubitDensityMatrix::eigenvalues() const {
    const double a = bloch_vector(*this).length();
    return {(1.0 + a) / 2.0, (1.0 - a) / 2.0};
}

QubitDensityMatrix partial_trace(const TwoQubitState& state, Subsystem keep) {
    const Matrix2c& psi = state.amplitudes();
    Matrix2c rho;
    if (keep == Subsystem::A) {
        // rho_A(i, k) = sum_j psi(i, j) conj(psi(k, j))
        rho = psi * psi.adjoint();
    } else {
        // rho_B(j, l) = sum_i psi(i, j) conj(psi(i, l))
        rho = (psi.adjoint() * psi).transpose();
    }
    return QubitDensityMatrix(rho);
}

BlochVector bloch_vector(const QubitDensityMatrix& rho) {
    BlochVector a;
    for (int i = 0; i < 3; ++i) {
        a.v(i) = (rho.matrix() * pauli::sigma(i)).trace().real();
    }
    return a;
}

double concurrence(const TwoQubitState& state) {
    return 2.0 * std::abs(state.amplitudes().determinant());
}

double purity(const QubitDensityMatrix& rho) {
    return (rho.matrix() * rho.matrix()).trace().real();
}

SchmidtDecomposition schmidt_decompose(const TwoQubitState& state) {
    Eigen::JacobiSVD<Matrix2c> svd(state.amplitudes(), Eigen::ComputeFullU | Eigen::ComputeFullV);
    SchmidtDecomposition out;
    const double s1 = svd.singularValues()(0);
    const double s2 = svd.singularValues()(1);
    out.lambda1 = s1 * s1;
    out.lambda2 = s2 * s2;
    for (int k = 0; k < 2; ++k) {
        Vector2c a = svd.matrixU().col(k);
        // psi = sum_k s_k |a_k> |b_k>  with  b_k = conj(v_k)
        Vector2c b = svd.matrixV().col(k).conjugate();
        // Deterministic phases: leading component of the A vector real positive,
        // B vector absorbs the inverse so the pair contributes unchanged.
        const complexd lead = std::abs(a(0)) > 1e-12 ? a(0) : a(1);
        const complexd phase = lead / std::abs(lead);
        a *= std::conj(phase);
        b *= phase;
        out.basis_a[k] = a;
        out.basis_b[k] = b;
    }
    return out;
}

Eigen::Matrix3d correlation_matrix(const TwoQubitState& state) {
    const Matrix2c& psi = state.amplitudes();
    Eigen::Matrix3d k;
    for (int i = 0; i < 3; ++i) {
        const Matrix2c left = pauli::sigma(i) * psi;
        for (int j = 0; j < 3; ++j) {
            // <sigma_i x sigma_j> = tr(sigma_i psi sigma_j^T psi^dagger)
            k(i, j) = (left * pauli::sigma(j).transpose() * psi.adjoint()).trace().real();
        }
    }
    return k;
}

TwoQubitState random_pure_state(uint64_t seed) {
    CounterRng rng(seed);
    Matrix2c amp;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const double re = rng.next_gaussian();
            const double im = rng.next_gaussian();
            amp(i, j) = complexd(re, im);
        }
    }
    return TwoQubitState::normalized(amp);
}

Matrix2c random_unitary2(CounterRng& rng) {
    Vector2c g1, g2;
    for (int i = 0; i < 2; ++i) {
        g1(i) = complexd(rng.next_gaussian(), rng.next_gaussian());
        g2(i) = complexd(rng.next_gaussian(), rng.next_gaussian());
    }
    const Vector2c q1 = g1 / g1.norm();
    Vector2c q2 = g2 - q1.dot(g2) * q1;
    q2 /= q2.norm();
    Matrix2c u;
    u.col(0) = q1;
    u.col(1) = q2;
    return u;
}

TwoQubitState random_state_with_concurrence(double c, uint64_t seed) {
    if (!(c >= 0.0 && c <= 1.0)) {
        throw precondition_error("concurrence must lie in [0, 1]");
    }
    const double lambda1 = (1.0 + std::sqrt(1.0 - c * c)) / 2.0;
    const double lambda2 = 1.0 - lambda1;
    Matrix2c d = Matrix2c::Zero();
    d(0, 0) = std::sqrt(lambda1);
    d(1, 1) = std::sqrt(std::max(lambda2, 0.0));
    CounterRng rng(seed);
    const Matrix2c ua = random_unitary2(rng);
    const Matrix2c ub = random_unitary2(rng);
    // (U_A x U_B) applied to the Schmidt-form amplitude table
    return TwoQubitState::normalized(ua * d * ub.transpose());
}

}  // namespace qrng
