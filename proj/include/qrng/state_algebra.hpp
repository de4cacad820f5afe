#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>

#include "qrng/errors.hpp"
#include "qrng/pauli.hpp"
#include "qrng/rng.hpp"

namespace qrng {

inline constexpr double norm_tolerance = 1e-9;

// Pure state of the source qubit pair.  amplitudes()(i, j) multiplies |i>_A |j>_B,
// so row index = user qubit, column index = attacker qubit.  The Frobenius norm
// must be 1 within norm_tolerance; inputs that fail are rejected, never repaired.
class TwoQubitState {
public:
    explicit TwoQubitState(const Matrix2c& amplitudes);

    // Explicit rescale for callers that hold an unnormalized amplitude table.
    static TwoQubitState normalized(const Matrix2c& amplitudes);

    const Matrix2c& amplitudes() const { return amp_; }

private:
    Matrix2c amp_;
};

// Single-qubit density matrix: hermitian, unit trace, positive semidefinite,
// all within 1e-9.
class QubitDensityMatrix {
public:
    explicit QubitDensityMatrix(const Matrix2c& rho);

    // Accepts eigenvalues down to -1e-9, clamps them to 0 and renormalizes the
    // trace; anything more negative is rejected as unphysical.
    static QubitDensityMatrix clamped(const Matrix2c& rho);

    const Matrix2c& matrix() const { return rho_; }

    // Eigenvalues (lambda1 >= lambda2) computed from the Bloch length.
    std::array<double, 2> eigenvalues() const;

private:
    QubitDensityMatrix() = default;
    Matrix2c rho_;
};

struct BlochVector {
    Eigen::Vector3d v = Eigen::Vector3d::Zero();
    double length() const { return v.norm(); }
};

// Schmidt form sqrt(lambda1)|up,up> + sqrt(lambda2)|down,down> with real
// non-negative coefficients.  basis_a/basis_b hold {|up>, |down>} per subsystem.
// Phase convention: the first non-vanishing component of each subsystem-A basis
// vector is made real positive; the compensating phase is absorbed into the
// paired subsystem-B vector so the coefficients stay real.
struct SchmidtDecomposition {
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    std::array<Vector2c, 2> basis_a;
    std::array<Vector2c, 2> basis_b;
};

enum class Subsystem { A, B };

QubitDensityMatrix partial_trace(const TwoQubitState& state, Subsystem keep);

BlochVector bloch_vector(const QubitDensityMatrix& rho);

// 2 |det amplitudes|; 0 for product states, 1 for maximally entangled ones.
double concurrence(const TwoQubitState& state);

// tr(rho^2); 1/2 for the maximally mixed state, 1 for pure states.
double purity(const QubitDensityMatrix& rho);

SchmidtDecomposition schmidt_decompose(const TwoQubitState& state);

// Lab-frame matrix K(i, j) = <sigma_i x sigma_j>.
Eigen::Matrix3d correlation_matrix(const TwoQubitState& state);

// Normalized vector of four independent standard complex Gaussians (uniform on
// the pure-state sphere); bit-reproducible for a fixed seed.
TwoQubitState random_pure_state(uint64_t seed);

// Schmidt-form state of the requested concurrence, scrambled by independent
// random local unitaries on both qubits (local frames are Haar random while the
// entanglement is pinned).
TwoQubitState random_state_with_concurrence(double c, uint64_t seed);

// Haar-random 2x2 unitary (Gram-Schmidt on complex Gaussian columns).
Matrix2c random_unitary2(CounterRng& rng);

}  // namespace qrng
