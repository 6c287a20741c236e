#pragma once

#include <vector>

#include "cosserat/matrix3.hpp"

namespace cosserat {

/// How d/dz stencils treat the ends of the grid.
enum class GridBoundary {
    OneSided,  ///< central interior, 2nd-order one-sided at the ends
    Periodic   ///< wrap-around central stencil everywhere
};

/// Matrix-valued samples on a uniform z-grid.
struct MatrixField1D {
    std::vector<Matrix3> samples;
    double h = 0.0;  ///< grid spacing, > 0

    std::size_t size() const { return samples.size(); }
};

void validate_grid(std::size_t n, double h);

/// 2nd-order d/dz of a scalar field. One-sided 2nd-order stencils at the
/// boundary for GridBoundary::OneSided.
std::vector<double> d_dz(const std::vector<double>& f, double h,
                         GridBoundary bc = GridBoundary::OneSided);

/// 2nd-order d2/dz2 of a scalar field (one-sided variants at the ends).
std::vector<double> d2_dz2(const std::vector<double>& f, double h,
                           GridBoundary bc = GridBoundary::OneSided);

/// Matrix Curl for z-dependent fields, (Curl M)_ij = eps_jrs d_r M_is.
/// With only d_z nonzero this is column-wise:
///   (Curl M) col 1 = -d_z (M col 2),  (Curl M) col 2 = +d_z (M col 1),
///   (Curl M) col 3 = 0.
MatrixField1D matrix_curl(const MatrixField1D& field,
                          GridBoundary bc = GridBoundary::OneSided);

/// Skew embedding of a scalar gradient, (grad f)*_ik = eps_ijk d_j f.
/// For z-only dependence the nonzero entries are (1,2) = -d_z f and
/// (2,1) = +d_z f (0-based: (0,1) and (1,0)).
MatrixField1D grad_star(const std::vector<double>& f, double h,
                        GridBoundary bc = GridBoundary::OneSided);

/// Trapezoidal quadrature of samples on the uniform grid.
double trapezoid(const std::vector<double>& f, double h);

}  // namespace cosserat
