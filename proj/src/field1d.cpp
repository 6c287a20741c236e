#include "cosserat/field1d.hpp"

#include <stdexcept>

namespace cosserat {

void validate_grid(std::size_t n, double h) {
    if (n < 5) throw std::invalid_argument("grid: need at least 5 samples for 2nd-order stencils");
    if (!(h > 0.0)) throw std::invalid_argument("grid: spacing h must be > 0");
}

std::vector<double> d_dz(const std::vector<double>& f, double h, GridBoundary bc) {
    const std::size_t n = f.size();
    validate_grid(n, h);
    std::vector<double> d(n);
    const double inv2h = 1.0 / (2.0 * h);
    for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (f[i + 1] - f[i - 1]) * inv2h;
    if (bc == GridBoundary::Periodic) {
        d[0] = (f[1] - f[n - 1]) * inv2h;
        d[n - 1] = (f[0] - f[n - 2]) * inv2h;
    } else {
        d[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) * inv2h;
        d[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) * inv2h;
    }
    return d;
}

std::vector<double> d2_dz2(const std::vector<double>& f, double h, GridBoundary bc) {
    const std::size_t n = f.size();
    validate_grid(n, h);
    std::vector<double> d(n);
    const double invh2 = 1.0 / (h * h);
    for (std::size_t i = 1; i + 1 < n; ++i)
        d[i] = (f[i + 1] - 2.0 * f[i] + f[i - 1]) * invh2;
    if (bc == GridBoundary::Periodic) {
        d[0] = (f[1] - 2.0 * f[0] + f[n - 1]) * invh2;
        d[n - 1] = (f[0] - 2.0 * f[n - 1] + f[n - 2]) * invh2;
    } else {
        d[0] = (2.0 * f[0] - 5.0 * f[1] + 4.0 * f[2] - f[3]) * invh2;
        d[n - 1] = (2.0 * f[n - 1] - 5.0 * f[n - 2] + 4.0 * f[n - 3] - f[n - 4]) * invh2;
    }
    return d;
}

namespace {

// d/dz applied entrywise to a matrix field.
MatrixField1D d_dz_field(const MatrixField1D& field, GridBoundary bc) {
    const std::size_t n = field.size();
    validate_grid(n, field.h);
    for (const Matrix3& m : field.samples)
        if (!is_finite(m))
            throw std::invalid_argument("matrix field: non-finite sample");
    MatrixField1D out;
    out.h = field.h;
    out.samples.assign(n, Matrix3::zero());
    std::vector<double> comp(n);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            for (std::size_t s = 0; s < n; ++s) comp[s] = field.samples[s](i, j);
            const std::vector<double> dc = d_dz(comp, field.h, bc);
            for (std::size_t s = 0; s < n; ++s) out.samples[s](i, j) = dc[s];
        }
    return out;
}

}  // namespace

MatrixField1D matrix_curl(const MatrixField1D& field, GridBoundary bc) {
    const MatrixField1D dz = d_dz_field(field, bc);
    MatrixField1D out;
    out.h = field.h;
    out.samples.assign(field.size(), Matrix3::zero());
    for (std::size_t s = 0; s < field.size(); ++s) {
        const Matrix3& dm = dz.samples[s];
        Matrix3& c = out.samples[s];
        for (int i = 0; i < 3; ++i) {
            c(i, 0) = -dm(i, 1);  // eps_{1 3 2} = -1
            c(i, 1) = dm(i, 0);   // eps_{2 3 1} = +1
        }
    }
    return out;
}

MatrixField1D grad_star(const std::vector<double>& f, double h, GridBoundary bc) {
    const std::vector<double> df = d_dz(f, h, bc);
    MatrixField1D out;
    out.h = h;
    out.samples.assign(f.size(), Matrix3::zero());
    for (std::size_t s = 0; s < f.size(); ++s) {
        out.samples[s](0, 1) = -df[s];  // eps_{1 3 2}
        out.samples[s](1, 0) = df[s];   // eps_{2 3 1}
    }
    return out;
}

double trapezoid(const std::vector<double>& f, double h) {
    if (f.size() < 2) return 0.0;
    double s = 0.5 * (f.front() + f.back());
    for (std::size_t i = 1; i + 1 < f.size(); ++i) s += f[i];
    return s * h;
}

}  // namespace cosserat
