#include "cosserat/matrix3.hpp"

namespace cosserat {

Matrix3 inverse(const Matrix3& m) {
    const double d = det(m);
    if (d == 0.0 || !std::isfinite(d))
        throw std::domain_error("Matrix3 inverse: singular or non-finite matrix");
    Matrix3 inv;
    inv(0, 0) = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
    inv(0, 1) = m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2);
    inv(0, 2) = m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1);
    inv(1, 0) = m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2);
    inv(1, 1) = m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0);
    inv(1, 2) = m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2);
    inv(2, 0) = m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0);
    inv(2, 1) = m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1);
    inv(2, 2) = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    return inv * (1.0 / d);
}

Matrix3 rotation_z(double phi) {
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    Matrix3 r;
    r(0, 0) = c;
    r(0, 1) = -s;
    r(1, 0) = s;
    r(1, 1) = c;
    r(2, 2) = 1.0;
    return r;
}

PolarDecomposition polar_decompose(const Matrix3& f) {
    if (!is_finite(f)) throw std::domain_error("polar_decompose: non-finite input");
    if (det(f) <= 0.0)
        throw std::domain_error("polar_decompose: det F <= 0, rotation factor undefined");

    Matrix3 r = f;
    int it = 0;
    for (; it < 100; ++it) {
        const Matrix3 rinv_t = inverse(r).transpose();
        // Higham scaling keeps convergence fast for stretched inputs.
        const double gamma = std::sqrt(std::sqrt(norm_sq(rinv_t) / norm_sq(r)));
        const Matrix3 next = (r * gamma + rinv_t * (1.0 / gamma)) * 0.5;
        const double delta = norm(next - r);
        r = next;
        if (delta <= 1e-14 * norm(r)) break;
    }

    PolarDecomposition pd;
    pd.rotation = r;
    pd.stretch = sym(r.transpose() * f);  // symmetrize: kills O(eps) asymmetry
    pd.iterations = it + 1;
    pd.orthogonality_residual = norm(r.transpose() * r - Matrix3::identity());
    return pd;
}

}  // namespace cosserat
