#pragma once

#include <Eigen/Dense>
#include <complex>

namespace qrng {

using complexd = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;
using Vector2c = Eigen::Vector2cd;

namespace pauli {

inline const Matrix2c& x() {
    static const Matrix2c m = (Matrix2c() << 0, 1, 1, 0).finished();
    return m;
}

inline const Matrix2c& y() {
    static const Matrix2c m =
        (Matrix2c() << complexd(0, 0), complexd(0, -1), complexd(0, 1), complexd(0, 0)).finished();
    return m;
}

inline const Matrix2c& z() {
    static const Matrix2c m = (Matrix2c() << 1, 0, 0, -1).finished();
    return m;
}

inline const Matrix2c& identity() {
    static const Matrix2c m = Matrix2c::Identity();
    return m;
}

inline const Matrix2c& sigma(int i) {
    switch (i) {
        case 0: return x();
        case 1: return y();
        default: return z();
    }
}

// e . sigma for a real 3-vector e
inline Matrix2c along(const Eigen::Vector3d& e) {
    return e.x() * x() + e.y() * y() + e.z() * z();
}

}  // namespace pauli
}  // namespace qrng
