#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

namespace cosserat {

/// Dense 3x3 real matrix with value semantics. Row-major storage.
/// All algebra below rejects non-finite entries at the few entry points
/// where garbage could otherwise propagate silently (see is_finite()).
struct Matrix3 {
    std::array<double, 9> a{};

    double& operator()(int i, int j) { return a[3 * i + j]; }
    double operator()(int i, int j) const { return a[3 * i + j]; }

    static Matrix3 zero() { return Matrix3{}; }

    static Matrix3 identity() {
        Matrix3 m;
        m(0, 0) = m(1, 1) = m(2, 2) = 1.0;
        return m;
    }

    static Matrix3 diag(double d0, double d1, double d2) {
        Matrix3 m;
        m(0, 0) = d0;
        m(1, 1) = d1;
        m(2, 2) = d2;
        return m;
    }

    Matrix3 transpose() const {
        Matrix3 t;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                t(i, j) = (*this)(j, i);
        return t;
    }

    double trace() const { return a[0] + a[4] + a[8]; }

    Matrix3& operator+=(const Matrix3& o) {
        for (int i = 0; i < 9; ++i) a[i] += o.a[i];
        return *this;
    }
    Matrix3& operator-=(const Matrix3& o) {
        for (int i = 0; i < 9; ++i) a[i] -= o.a[i];
        return *this;
    }
    Matrix3& operator*=(double s) {
        for (int i = 0; i < 9; ++i) a[i] *= s;
        return *this;
    }

    friend Matrix3 operator+(Matrix3 l, const Matrix3& r) { return l += r; }
    friend Matrix3 operator-(Matrix3 l, const Matrix3& r) { return l -= r; }
    friend Matrix3 operator*(Matrix3 m, double s) { return m *= s; }
    friend Matrix3 operator*(double s, Matrix3 m) { return m *= s; }

    friend Matrix3 operator*(const Matrix3& l, const Matrix3& r) {
        Matrix3 p;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double s = 0.0;
                for (int k = 0; k < 3; ++k) s += l(i, k) * r(k, j);
                p(i, j) = s;
            }
        return p;
    }
};

inline bool is_finite(const Matrix3& m) {
    for (double x : m.a)
        if (!std::isfinite(x)) return false;
    return true;
}

/// (M + M^T)/2
inline Matrix3 sym(const Matrix3& m) { return (m + m.transpose()) * 0.5; }

/// (M - M^T)/2
inline Matrix3 skew(const Matrix3& m) { return (m - m.transpose()) * 0.5; }

/// M - tr(M) 1/3
inline Matrix3 dev(const Matrix3& m) {
    Matrix3 d = m;
    const double t = m.trace() / 3.0;
    d(0, 0) -= t;
    d(1, 1) -= t;
    d(2, 2) -= t;
    return d;
}

/// Frobenius product <A,B> = tr(A B^T).
inline double frobenius(const Matrix3& a, const Matrix3& b) {
    double s = 0.0;
    for (int i = 0; i < 9; ++i) s += a.a[i] * b.a[i];
    return s;
}

/// Squared Frobenius norm ||M||^2 = <M,M>.
inline double norm_sq(const Matrix3& m) { return frobenius(m, m); }

inline double norm(const Matrix3& m) { return std::sqrt(norm_sq(m)); }

inline double det(const Matrix3& m) {
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
           m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

Matrix3 inverse(const Matrix3& m);

/// Rotation by phi about the z-axis:
///   ( cos -sin  0 )
///   ( sin  cos  0 )
///   (  0    0   1 )
Matrix3 rotation_z(double phi);

struct PolarDecomposition {
    Matrix3 rotation;  ///< R, orthogonal with det +1
    Matrix3 stretch;   ///< U, symmetric positive definite; F = R U
    int iterations = 0;
    double orthogonality_residual = 0.0;  ///< ||R^T R - 1|| at convergence
};

/// Classical polar decomposition F = R U by Newton (Heron) iteration
/// R <- (R + R^{-T})/2 with Higham norm scaling. Converges quadratically;
/// iteration stops when ||R_{k+1} - R_k|| <= 1e-14 ||R_k|| or after 100 steps.
/// Requires det F > 0; throws std::domain_error otherwise.
PolarDecomposition polar_decompose(const Matrix3& f);

}  // namespace cosserat
