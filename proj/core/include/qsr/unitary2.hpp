#pragma once

#include <cmath>
#include <complex>

namespace qsr {

/// 2x2 unitary acting on a two-level block of a qudit.
struct Unitary2 {
    std::complex<double> a00{1.0, 0.0}, a01{0.0, 0.0};
    std::complex<double> a10{0.0, 0.0}, a11{1.0, 0.0};

    bool is_unitary(double tol = 1e-12) const {
        using std::abs;
        const std::complex<double> c00 = std::conj(a00) * a00 + std::conj(a10) * a10;
        const std::complex<double> c01 = std::conj(a00) * a01 + std::conj(a10) * a11;
        const std::complex<double> c11 = std::conj(a01) * a01 + std::conj(a11) * a11;
        return abs(c00 - 1.0) <= tol && abs(c01) <= tol && abs(c11 - 1.0) <= tol;
    }
};

inline Unitary2 u2_identity() { return {}; }

inline Unitary2 u2_x() {
    Unitary2 u;
    u.a00 = 0.0;
    u.a01 = 1.0;
    u.a10 = 1.0;
    u.a11 = 0.0;
    return u;
}

inline Unitary2 u2_z() {
    Unitary2 u;
    u.a11 = -1.0;
    return u;
}

inline Unitary2 u2_h() {
    const double s = 1.0 / std::sqrt(2.0);
    Unitary2 u;
    u.a00 = s;
    u.a01 = s;
    u.a10 = s;
    u.a11 = -s;
    return u;
}

}  // namespace qsr
