#include "cosserat/identities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "cosserat/field1d.hpp"

namespace cosserat {

namespace {

// Portable uniform in [lo, hi): uniform_real_distribution is
// implementation-defined, which would break seed-pinned CI reports.
double uniform(std::mt19937_64& rng, double lo, double hi) {
    const double u = double(rng() >> 11) * (1.0 / 9007199254740992.0);
    return lo + (hi - lo) * u;
}

Matrix3 random_matrix(std::mt19937_64& rng) {
    Matrix3 m;
    for (double& x : m.a) x = uniform(rng, -1.0, 1.0);
    return m;
}

// Central finite difference of a scalar function of X, entry by entry.
template <class F>
Matrix3 fd_gradient(const Matrix3& x, F f, double step) {
    Matrix3 g;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Matrix3 xp = x, xm = x;
            xp(i, j) += step;
            xm(i, j) -= step;
            g(i, j) = (f(xp) - f(xm)) / (2.0 * step);
        }
    return g;
}

double relative_residual(const Matrix3& fd, const Matrix3& analytic) {
    double num = 0.0, den = 0.0;
    for (int i = 0; i < 9; ++i) {
        num = std::max(num, std::abs(fd.a[i] - analytic.a[i]));
        den = std::max(den, std::abs(analytic.a[i]));
    }
    return num / std::max(den, 1.0);
}

// Two-mode trig coefficients for one smooth periodic matrix field.
struct TrigCoeffs {
    double c0[9], c1[9], s1[9], c2[9], s2[9];
};

TrigCoeffs draw_coeffs(std::mt19937_64& rng, double amp) {
    TrigCoeffs t;
    for (int e = 0; e < 9; ++e) {
        t.c0[e] = uniform(rng, -amp, amp);
        t.c1[e] = uniform(rng, -amp, amp);
        t.s1[e] = uniform(rng, -amp, amp);
        t.c2[e] = uniform(rng, -amp, amp);
        t.s2[e] = uniform(rng, -amp, amp);
    }
    return t;
}

// Evaluate the coefficients on an n-point grid over [0, 2pi) using the
// rotation recurrence (no per-point trig calls).
MatrixField1D evaluate_field(const TrigCoeffs& t, std::size_t n) {
    const double L = 2.0 * M_PI;
    MatrixField1D f;
    f.h = L / double(n);
    f.samples.assign(n, Matrix3::zero());
    const double cd = std::cos(f.h), sd = std::sin(f.h);
    double c = 1.0, s = 0.0;  // cos(z), sin(z)
    for (std::size_t i = 0; i < n; ++i) {
        const double c2 = c * c - s * s, s2 = 2.0 * s * c;
        for (int e = 0; e < 9; ++e)
            f.samples[i].a[e] =
                t.c0[e] + t.c1[e] * c + t.s1[e] * s + t.c2[e] * c2 + t.s2[e] * s2;
        const double cn = c * cd - s * sd;
        s = s * cd + c * sd;
        c = cn;
    }
    return f;
}

// Residual of the curl-variation identity on one draw of (A, B, W), refining
// the grid until the O(h^2) product-rule error drops below tol.
double curl_variation_residual(std::mt19937_64& rng, bool with_trace_weight, double tol) {
    const TrigCoeffs ca = draw_coeffs(rng, 0.1);
    const TrigCoeffs cb = draw_coeffs(rng, 0.1);
    const TrigCoeffs cw = draw_coeffs(rng, 0.1);

    double residual = std::numeric_limits<double>::infinity();
    for (std::size_t n = 1024; n <= (std::size_t{1} << 17); n *= 2) {
        const MatrixField1D a = evaluate_field(ca, n);
        const MatrixField1D b = evaluate_field(cb, n);
        const MatrixField1D w = evaluate_field(cw, n);

        std::vector<double> tr_a(n, 1.0);
        if (with_trace_weight)
            for (std::size_t i = 0; i < n; ++i) tr_a[i] = a.samples[i].trace();

        const MatrixField1D curl_w = matrix_curl(w, GridBoundary::Periodic);
        const MatrixField1D curl_b = matrix_curl(b, GridBoundary::Periodic);
        const MatrixField1D gstar = grad_star(tr_a, b.h, GridBoundary::Periodic);

        double lhs = 0.0, rhs = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            lhs += tr_a[i] * frobenius(b.samples[i], curl_w.samples[i]);
            const Matrix3 rhs_kernel =
                (b.samples[i] * gstar.samples[i]) * (-1.0) + curl_b.samples[i] * tr_a[i];
            rhs += frobenius(rhs_kernel, w.samples[i]);
        }
        residual = std::abs(lhs - rhs) * b.h;
        if (residual < tol) break;
    }
    return residual;
}

}  // namespace

IdentityReport matrix_identity_suite(int trials, std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("matrix_identity_suite: trials must be >= 1");

    const double fd_step = 1e-6;
    const double tol = 1e-6;

    IdentityReport report;
    report.seed = seed;
    report.trials = trials;

    std::mt19937_64 rng(seed);

    IdentityCheck tr_xa{"d/dX tr(XA) = A^T", 0.0, tol, false};
    IdentityCheck tr_axb{"d/dX tr(AXB) = A^T B^T", 0.0, tol, false};
    IdentityCheck tr_xxt{"d/dX tr(XX^T) = 2X", 0.0, tol, false};
    IdentityCheck tr_axbx{"d/dX tr(AXBX) = A^T X^T B^T + B^T X^T A^T", 0.0, tol, false};
    IdentityCheck curl_var{"curl variation <tr(A)B, Curl dR> (integration by parts)", 0.0, tol,
                           false};
    IdentityCheck curl_cor{"curl corollary <B, Curl dR> = <Curl B, dR>", 0.0, tol, false};

    for (int t = 0; t < trials; ++t) {
        const Matrix3 x = random_matrix(rng);
        const Matrix3 a = random_matrix(rng);
        const Matrix3 b = random_matrix(rng);

        tr_xa.max_residual = std::max(
            tr_xa.max_residual,
            relative_residual(
                fd_gradient(x, [&](const Matrix3& m) { return (m * a).trace(); }, fd_step),
                a.transpose()));

        tr_axb.max_residual = std::max(
            tr_axb.max_residual,
            relative_residual(
                fd_gradient(x, [&](const Matrix3& m) { return (a * m * b).trace(); }, fd_step),
                a.transpose() * b.transpose()));

        tr_xxt.max_residual = std::max(
            tr_xxt.max_residual,
            relative_residual(
                fd_gradient(x, [&](const Matrix3& m) { return (m * m.transpose()).trace(); },
                            fd_step),
                x * 2.0));

        tr_axbx.max_residual = std::max(
            tr_axbx.max_residual,
            relative_residual(
                fd_gradient(x, [&](const Matrix3& m) { return (a * m * b * m).trace(); },
                            fd_step),
                a.transpose() * x.transpose() * b.transpose() +
                    b.transpose() * x.transpose() * a.transpose()));

        curl_var.max_residual =
            std::max(curl_var.max_residual, curl_variation_residual(rng, true, tol));
        curl_cor.max_residual =
            std::max(curl_cor.max_residual, curl_variation_residual(rng, false, tol));
    }

    for (IdentityCheck* c : {&tr_xa, &tr_axb, &tr_xxt, &tr_axbx, &curl_var, &curl_cor}) {
        c->pass = c->max_residual < c->tolerance;
        report.checks.push_back(*c);
    }
    report.all_pass = true;
    for (const IdentityCheck& c : report.checks) report.all_pass = report.all_pass && c.pass;
    return report;
}

}  // namespace cosserat
