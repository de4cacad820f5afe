#include "qrng/oracles.hpp"

#include <cmath>

namespace qrng::oracle {

Matrix2c projector(const Eigen::Vector3d& e, int bit) {
    const double sign = bit == 0 ? 1.0 : -1.0;
    return (pauli::identity() + sign * pauli::along(e)) / 2.0;
}

namespace {

// <psi| M_A x M_B |psi> = sum conj(psi_ij) MA_ik MB_jl psi_kl
double sandwich(const TwoQubitState& state, const Matrix2c& ma, const Matrix2c& mb) {
    const Matrix2c& psi = state.amplitudes();
    complexd acc(0.0, 0.0);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            for (int k = 0; k < 2; ++k) {
                for (int l = 0; l < 2; ++l) {
                    acc += std::conj(psi(i, j)) * ma(i, k) * mb(j, l) * psi(k, l);
                }
            }
        }
    }
    return acc.real();
}

}  // namespace

double born_joint_probability(const TwoQubitState& state, const Eigen::Vector3d& ea,
                              const Eigen::Vector3d& eb, int a, int b) {
    return sandwich(state, projector(ea, a), projector(eb, b));
}

double born_marginal_probability(const TwoQubitState& state, const Eigen::Vector3d& e,
                                 Subsystem subsystem, int bit) {
    if (subsystem == Subsystem::A) {
        return sandwich(state, projector(e, bit), pauli::identity());
    }
    return sandwich(state, pauli::identity(), projector(e, bit));
}

Matrix2c reduced_density(const TwoQubitState& state, Subsystem keep) {
    const Matrix2c& psi = state.amplitudes();
    Matrix2c rho = Matrix2c::Zero();
    for (int t = 0; t < 2; ++t) {  // traced index
        for (int r = 0; r < 2; ++r) {
            for (int c = 0; c < 2; ++c) {
                if (keep == Subsystem::A) {
                    rho(r, c) += psi(r, t) * std::conj(psi(c, t));
                } else {
                    rho(r, c) += psi(t, r) * std::conj(psi(t, c));
                }
            }
        }
    }
    return rho;
}

double pauli_expectation(const TwoQubitState& state, int i, int j) {
    return sandwich(state, pauli::sigma(i), pauli::sigma(j));
}

Vector2c steered_state(const TwoQubitState& state, const Vector2c& chi) {
    const Matrix2c& psi = state.amplitudes();
    Vector2c out = Vector2c::Zero();
    for (int jb = 0; jb < 2; ++jb) {
        for (int ia = 0; ia < 2; ++ia) {
            out(jb) += std::conj(chi(ia)) * psi(ia, jb);
        }
    }
    return out / out.norm();
}

double second_difference(const std::function<double(double)>& f, double x, double h) {
    return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

}  // namespace qrng::oracle
