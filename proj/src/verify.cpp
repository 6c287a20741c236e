#include "cosserat/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <random>
#include <stdexcept>

#include "cosserat/dispersion.hpp"
#include "cosserat/energy.hpp"
#include "cosserat/field1d.hpp"
#include "cosserat/fixtures.hpp"
#include "cosserat/identities.hpp"
#include "cosserat/initial_data.hpp"
#include "cosserat/material.hpp"
#include "cosserat/matrix3.hpp"
#include "cosserat/simulate.hpp"
#include "cosserat/soliton.hpp"

namespace cosserat {

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi) {
    const double u = double(rng() >> 11) * (1.0 / 9007199254740992.0);
    return lo + (hi - lo) * u;
}

struct Checker {
    VerifyReport& report;
    std::string suite;
    double tol_scale;

    void add(const std::string& name, double residual, double tolerance) {
        CheckResult c;
        c.suite = suite;
        c.name = name;
        c.residual = residual;
        c.tolerance = tolerance * tol_scale;
        c.pass = residual <= c.tolerance;
        report.checks.push_back(c);
    }
    void add_flag(const std::string& name, bool ok) { add(name, ok ? 0.0 : 1.0, 0.5); }
};

// ---------------------------------------------------------------- tensor --

void suite_tensor(VerifyReport& report, std::uint64_t seed, double ts) {
    Checker ck{report, "tensor", ts};
    std::mt19937_64 rng(seed);

    // Polar decomposition round trip on well-conditioned random inputs.
    double worst_rt = 0.0, worst_orth = 0.0;
    for (int t = 0; t < 200; ++t) {
        Matrix3 f;
        for (double& x : f.a) x = uniform(rng, -1.0, 1.0);
        f += Matrix3::identity() * 2.0;
        if (det(f) <= 0.1) continue;
        const PolarDecomposition pd = polar_decompose(f);
        worst_rt = std::max(worst_rt,
                            norm(f - pd.rotation * pd.stretch) / norm(f));
        worst_orth = std::max(worst_orth, pd.orthogonality_residual);
    }
    ck.add("polar round trip ||F - RU|| / ||F||", worst_rt, 1e-12);
    ck.add("polar orthogonality ||R^T R - 1||", worst_orth, 1e-12);

    // rotation_z stays orthogonal over many turns.
    double worst_rot = 0.0;
    for (int i = 0; i <= 400; ++i) {
        const double phi = -10.0 * M_PI + 20.0 * M_PI * double(i) / 400.0;
        const Matrix3 r = rotation_z(phi);
        worst_rot = std::max(worst_rot, norm(r.transpose() * r - Matrix3::identity()));
        worst_rot = std::max(worst_rot, std::abs(det(r) - 1.0));
    }
    ck.add("rotation_z orthogonality over [-10pi, 10pi]", worst_rot, 1e-13);

    // matrix_curl linearity at stencil level.
    {
        const std::size_t n = 64;
        const double h = 0.05;
        MatrixField1D ma, mb;
        ma.h = mb.h = h;
        for (std::size_t i = 0; i < n; ++i) {
            Matrix3 x, y;
            for (double& v : x.a) v = uniform(rng, -1.0, 1.0);
            for (double& v : y.a) v = uniform(rng, -1.0, 1.0);
            ma.samples.push_back(x);
            mb.samples.push_back(y);
        }
        const double ca = 1.7, cb = -0.6;
        MatrixField1D combo;
        combo.h = h;
        for (std::size_t i = 0; i < n; ++i)
            combo.samples.push_back(ma.samples[i] * ca + mb.samples[i] * cb);
        const MatrixField1D curl_combo = matrix_curl(combo);
        const MatrixField1D curl_a = matrix_curl(ma);
        const MatrixField1D curl_b = matrix_curl(mb);
        double worst = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            worst = std::max(worst, norm(curl_combo.samples[i] - (curl_a.samples[i] * ca +
                                                                  curl_b.samples[i] * cb)));
        ck.add("matrix_curl linearity", worst, 1e-12);
    }

    // matrix_curl converges at order 2 against the analytic curl.
    {
        auto entry = [](double z, int e) { return std::sin(1.3 * z + 0.2 * double(e)); };
        auto entry_dz = [](double z, int e) { return 1.3 * std::cos(1.3 * z + 0.2 * double(e)); };
        auto max_err = [&](std::size_t n) {
            MatrixField1D f;
            f.h = 1.0 / double(n - 1);
            for (std::size_t i = 0; i < n; ++i) {
                Matrix3 m;
                for (int e = 0; e < 9; ++e) m.a[e] = entry(f.h * double(i), e);
                f.samples.push_back(m);
            }
            const MatrixField1D c = matrix_curl(f);
            double worst = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                Matrix3 exact = Matrix3::zero();
                for (int row = 0; row < 3; ++row) {
                    exact(row, 0) = -entry_dz(f.h * double(i), 3 * row + 1);
                    exact(row, 1) = entry_dz(f.h * double(i), 3 * row + 0);
                }
                worst = std::max(worst, norm(c.samples[i] - exact));
            }
            return worst;
        };
        const double e1 = max_err(101), e2 = max_err(201);
        ck.add("matrix_curl order-2 convergence |ratio - 4|", std::abs(e1 / e2 - 4.0), 0.4);
    }

    // grad_star output is skew-symmetric with the epsilon sign convention.
    {
        const std::size_t n = 33;
        std::vector<double> f(n);
        for (double& v : f) v = uniform(rng, -1.0, 1.0);
        const MatrixField1D g = grad_star(f, 0.1);
        double worst = 0.0;
        for (const Matrix3& m : g.samples) worst = std::max(worst, norm(m + m.transpose()));
        ck.add("grad_star skew-symmetry", worst, 1e-14);

        std::vector<double> ramp(n);
        for (std::size_t i = 0; i < n; ++i) ramp[i] = 0.1 * double(i);
        const MatrixField1D gr = grad_star(ramp, 0.1);
        double sign_err = 0.0;
        for (const Matrix3& m : gr.samples) {
            sign_err = std::max(sign_err, std::abs(m(0, 1) + 1.0));
            sign_err = std::max(sign_err, std::abs(m(1, 0) - 1.0));
        }
        ck.add("grad_star sign convention on f = z", sign_err, 1e-12);
    }

    // Matrix-derivative and curl-variation identity kit.
    const IdentityReport idr = matrix_identity_suite(100, seed);
    for (const IdentityCheck& c : idr.checks) ck.add(c.name, c.max_residual, c.tolerance);
}

// ---------------------------------------------------------------- energy --

AnsatzFields gaussian_fields(double amp_phi, double amp_psi, double h, double span) {
    AnsatzFields f;
    f.h = h;
    const std::size_t n = std::size_t(span / h) + 1;
    f.phi.resize(n);
    f.psi.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double z = h * double(i);
        const double s1 = (z - 0.45 * span) / (0.07 * span);
        const double s2 = (z - 0.55 * span) / (0.08 * span);
        f.phi[i] = amp_phi * std::exp(-s1 * s1);
        f.psi[i] = amp_psi * std::exp(-s2 * s2);
    }
    return f;
}

void suite_energy(VerifyReport& report, std::uint64_t seed, double ts) {
    Checker ck{report, "energy", ts};
    const MaterialParams p = fixtures::type_a();
    (void)seed;

    // Trivial state: all four potentials vanish.
    {
        AnsatzFields zero;
        zero.h = 0.01;
        zero.phi.assign(1001, 0.0);
        zero.psi.assign(1001, 0.0);
        const double total = total_potential(p, zero);
        ck.add("potentials vanish on (0, 0)", std::abs(total), 1e-14);
    }

    // Dual-formula agreement on smooth fields (defining vs expanded form).
    {
        AnsatzFields f;
        f.h = 0.02;
        const std::size_t n = 801;
        f.phi.resize(n);
        f.psi.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double z = f.h * double(i);
            f.phi[i] = 0.8 * std::sin(0.9 * z) + 0.4 * std::cos(1.7 * z);
            f.psi[i] = 0.25 * std::sin(1.1 * z) + 0.1 * std::cos(0.6 * z);
        }
        double worst = 0.0;
        worst = std::max(worst, energy_elastic(p, f).max_pointwise_mismatch);
        worst = std::max(worst, energy_curvature(p, f).max_pointwise_mismatch);
        worst = std::max(worst, energy_interaction(p, f).max_pointwise_mismatch);
        worst = std::max(worst, energy_coupling(p, f).max_pointwise_mismatch);
        ck.add("defining vs expanded energy forms (pointwise)", worst, 1e-10);

        // 2 pi shift of phi leaves elastic and coupling energies unchanged.
        AnsatzFields shifted = f;
        for (double& v : shifted.phi) v += 2.0 * M_PI;
        const double de = std::abs(energy_elastic(p, f).value - energy_elastic(p, shifted).value);
        const double dc =
            std::abs(energy_coupling(p, f).value - energy_coupling(p, shifted).value);
        ck.add("elastic energy invariant under phi -> phi + 2pi", de, 1e-10);
        ck.add("coupling energy invariant under phi -> phi + 2pi", dc, 1e-10);
    }

    // Hand values: phi = 0, psi' = const c -> density c^2 (lambda/2 + mu).
    {
        AnsatzFields f;
        f.h = 0.01;
        const std::size_t n = 501;
        const double c = 0.13, span = f.h * double(n - 1);
        f.phi.assign(n, 0.0);
        f.psi.resize(n);
        for (std::size_t i = 0; i < n; ++i) f.psi[i] = c * f.h * double(i);
        const double expected = (0.5 * p.lambda + p.mu) * c * c * span;
        const double got = energy_elastic(p, f).value;
        ck.add("elastic energy of uniform stretch", std::abs(got - expected), 1e-12);

        // phi = pi/2, psi = 0: coupling density 2 mu_c (3 - tr R) = 4 mu_c.
        AnsatzFields g;
        g.h = 0.01;
        g.phi.assign(n, 0.5 * M_PI);
        g.psi.assign(n, 0.0);
        const double coup = energy_coupling(p, g).value;
        ck.add("coupling energy of quarter turn", std::abs(coup - 4.0 * p.mu_c * span), 1e-12);

        // Kinetic densities.
        AnsatzFields k = g;
        k.phi_t.assign(n, 1.0);
        k.psi_t.assign(n, 2.0);
        const KineticEnergies ke = kinetic_energies(p, k);
        ck.add("rotational kinetic density 2 rho_rot phi_t^2",
               std::abs(ke.rotational - 2.0 * p.rho_rot * span), 1e-12);
        ck.add("elastic kinetic density rho psi_t^2 / 2",
               std::abs(ke.elastic - 0.5 * p.rho * 4.0 * span), 1e-12);
    }

    // Curvature of a linear twist phi = a z against the 2 dz(phi) trace value.
    {
        AnsatzFields f;
        f.h = 0.001;
        const std::size_t n = 2001;
        const double a = 0.37, span = f.h * double(n - 1);
        f.phi.resize(n);
        f.psi.assign(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) f.phi[i] = a * f.h * double(i);
        const double expected = (2.0 * p.kappa1 / 3.0 + 4.0 * p.kappa3) * a * a * span;
        const double got = energy_curvature(p, f).value;
        ck.add("curvature energy of linear twist", std::abs(got - expected) / expected, 1e-5);
    }

    // Variational consistency against the static field equations.
    {
        const double h_fd = 1e-6;
        const AnsatzFields f1 = gaussian_fields(0.5, 0.3, 0.01, 20.0);
        const VariationalReport r1 = variational_check(p, f1, h_fd);
        ck.add("variational check relative discrepancy at h = 0.01",
               r1.max_rel_discrepancy, 1e-4);

        const AnsatzFields f2 = gaussian_fields(0.5, 0.3, 0.005, 20.0);
        const VariationalReport r2 = variational_check(p, f2, h_fd);
        const double order = std::log2(r1.max_rel_discrepancy / r2.max_rel_discrepancy);
        ck.add("variational check refinement order >= 1.9", std::max(0.0, 1.9 - order), 0.0);

        const AnsatzFields f3 = gaussian_fields(0.5, 0.3, 0.001, 20.0);
        const VariationalReport r3 = variational_check(p, f3, 1e-4);
        ck.add("variational check kappa2 independence", r3.kappa2_sensitivity, 1e-10);
    }
}

// ------------------------------------------------------------ dispersion --

MaterialParams random_admissible(std::mt19937_64& rng) {
    for (;;) {
        MaterialParams p;
        p.kappa1 = uniform(rng, 0.02, 3.0);
        p.kappa2 = uniform(rng, 0.0, 2.0);
        p.kappa3 = uniform(rng, 0.02, 3.0);
        p.chi1 = uniform(rng, -1.5, 1.5);
        p.chi3 = uniform(rng, -1.5, 1.5);
        p.rho = uniform(rng, 0.02, 2.0);
        p.rho_rot = uniform(rng, 0.02, 2.0);
        p.mu_c = uniform(rng, 0.0, 2.0);
        p.mu = uniform(rng, 0.02, 2.0);
        p.lambda = uniform(rng, -0.9 * p.mu, 3.0);
        if (!p.admissible()) continue;
        if (!derive(p).roots_real) continue;  // keep the characteristic speeds real
        return p;
    }
}

void suite_dispersion(VerifyReport& report, std::uint64_t seed, double ts) {
    Checker ck{report, "dispersion", ts};
    std::mt19937_64 rng(seed ^ 0x5bd1e995u);

    // Regression of the characteristic speeds for the diagonal-M parameter
    // sets: v4 = v_elas = 4.47214, v3 = v_rot = 3.51188, and the fourfold
    // degenerate variant.
    {
        const DerivedWaveQuantities c = derive(fixtures::type_c());
        double worst = std::abs(c.v4 - 4.47214);
        worst = std::max(worst, std::abs(c.v4 - c.v_elas));
        worst = std::max(worst, std::abs(c.v3 - 3.51188));
        worst = std::max(worst, std::abs(c.v3 - c.v_rot));
        ck.add("type c root regression", worst, 1e-5);

        const DerivedWaveQuantities d = derive(fixtures::type_d());
        double worst_d = 0.0;
        for (double v : {d.v_elas, d.v_rot, d.v3, d.v4})
            worst_d = std::max(worst_d, std::abs(v - 4.47214));
        ck.add("type d fourfold root regression", worst_d, 1e-5);
    }

    // Discriminant identity, root symmetry and bracketing on random sets.
    {
        double worst_disc = 0.0, worst_bracket = 0.0, worst_sym = 0.0;
        for (int t = 0; t < 10000; ++t) {
            const MaterialParams p = random_admissible(rng);
            const DerivedWaveQuantities d = derive(p);
            const double lhs = (d.m11 + d.m22) * (d.m11 + d.m22) -
                               4.0 * (d.m11 * d.m22 - d.m12 * d.m21);
            const double scale = std::max({std::abs(lhs), std::abs(d.discriminant), 1e-30});
            worst_disc = std::max(worst_disc, std::abs(lhs - d.discriminant) / scale);

            worst_sym = std::max(worst_sym, std::abs(d.v4 + d.v1));
            worst_sym = std::max(worst_sym, std::abs(d.v3 + d.v2));

            const double lo = std::min(d.v_elas, d.v_rot);
            const double hi = std::max(d.v_elas, d.v_rot);
            worst_bracket = std::max(worst_bracket, d.v3 - lo);
            worst_bracket = std::max(worst_bracket, hi - d.v4);
        }
        ck.add("discriminant identity (10^4 random sets)", worst_disc, 1e-10);
        ck.add("root symmetry v4 = -v1, v3 = -v2", worst_sym, 1e-12);
        ck.add("bracketing v3 <= min(v_elas, v_rot) <= max <= v4", worst_bracket, 1e-12);
    }

    // k vanishes at v0 and the two k^2 routes agree where defined.
    {
        const MaterialParams p = fixtures::type_a();
        const DerivedWaveQuantities d = derive(p);
        const KResult at_v0 = k_of_v(p, d.v0);
        ck.add_flag("k(v0) defined", at_v0.status == KStatus::Defined);
        ck.add("k(v0) = 0", std::abs(at_v0.k), 1e-10);

        double worst_dual = 0.0;
        for (double v : {0.0, 0.05, 0.5, 1.5, 2.8, 5.0, 6.5, 7.0}) {
            const KResult kr = k_of_v(p, v);
            if (kr.status != KStatus::Defined) continue;
            const BResult br = b_of_v(p, v);
            const double alt_sq = (d.m22 - v * v) * (d.m_sq + br.value) /
                                  ((v * v - d.v3_sq) * (v * v - d.v4_sq));
            worst_dual = std::max(worst_dual,
                                  std::abs(kr.radicand - alt_sq) / std::max(alt_sq, 1e-30));
        }
        ck.add("k^2 closed form vs (m^2 + b) route", worst_dual, 1e-12);

        // Forbidden band between the characteristic poles.
        bool forbidden_ok = true;
        for (double f = 0.1; f < 1.0; f += 0.2) {
            const double v = d.v3 + f * (d.v4 - d.v3);
            forbidden_ok = forbidden_ok && (k_of_v(p, v).status == KStatus::Forbidden);
        }
        ck.add_flag("(v3, v4) band is forbidden for type a", forbidden_ok);

        // b(v) reference value: lambda = 0 makes b constant.
        MaterialParams q = p;
        q.lambda = 0.0;
        const BResult b0 = b_of_v(q, 1.0);
        ck.add("b(v) with lambda = 0 equals -(lambda+mu)/rho_rot",
               std::abs(b0.value + q.mu / q.rho_rot), 1e-12);
        ck.add_flag("b(v) pole reported at v = v_elas", !b_of_v(p, d.v_elas).defined);
    }

    // Rescaling round trip between direct and rescaled phases.
    {
        const MaterialParams p = fixtures::type_a();
        double worst = 0.0;
        for (double v : {0.0, 0.1, 1.0, 2.0}) {
            for (double z : {-8.0, -1.0, 0.0, 3.0, 11.0}) {
                const RescaleResult rr = rescale_roundtrip(p, v, z, 1.7);
                if (!rr.defined) {
                    worst = 1.0;
                    break;
                }
                worst = std::max(worst, rr.residual);
            }
        }
        ck.add("rescaling round trip residual", worst, 1e-10);
    }

    // Linearised limit: k -> k0 pointwise as lambda = mu -> 0.
    {
        double prev = 1e300;
        bool monotone = true;
        double final_gap = 0.0;
        for (int n = 2; n <= 8; ++n) {
            MaterialParams p = fixtures::type_a();
            p.lambda = p.mu = std::pow(10.0, -double(n));
            const KResult kr = k_of_v(p, 3.0);
            if (kr.status != KStatus::Defined || !kr.k0_defined) {
                monotone = false;
                break;
            }
            const double gap = std::abs(kr.k - kr.k0);
            monotone = monotone && (gap <= prev + 1e-16);
            prev = gap;
            final_gap = gap;
        }
        ck.add_flag("|k - k0| decreases along lambda = mu = 10^-n", monotone);
        ck.add("|k - k0| at lambda = mu = 1e-8", final_gap, 1e-8);
    }

    // Approximate roots: error contracts at second order in the small
    // parameter, and is exact when v_chi = 0.
    {
        const ApproxRoots exact_c = approx_roots(fixtures::type_c());
        const DerivedWaveQuantities dc = derive(fixtures::type_c());
        ck.add("approx roots exact when v_chi = 0",
               std::max(std::abs(exact_c.v4_approx - dc.v4), std::abs(exact_c.v3_approx - dc.v3)),
               1e-12);
        ck.add("approx roots validity parameter vanishes when v_chi = 0",
               exact_c.validity, 1e-18);

        auto err_at = [](double chi_scale) {
            MaterialParams p = fixtures::type_a();
            // Shrink the off-diagonal coupling around the diagonal point.
            p.chi3 = 1.5 - chi_scale * 1.4;  // 3 chi1 - chi3 = chi_scale * 1.4
            const DerivedWaveQuantities d = derive(p);
            const ApproxRoots a = approx_roots(p);
            return std::abs(a.v4_approx - d.v4) + std::abs(a.v3_approx - d.v3);
        };
        const double e1 = err_at(0.2), e2 = err_at(0.1);
        // Error is quadratic in the validity parameter, which is quartic in
        // the coupling: halving the coupling divides the error by ~16.
        const double ratio = e1 / e2;
        ck.add("approx roots contraction |ratio - 16|", std::abs(ratio - 16.0), 3.0);
    }

    // Amplitude coefficients agree with the displacement prefactors.
    {
        const MaterialParams p = fixtures::type_a();
        const DerivedWaveQuantities d = derive(p);
        const AmplitudeCoefficients ac = amplitude_coefficients(p, 0.1);
        const double gap = 0.1 * 0.1 - d.m22;
        ck.add("amplitude c1 equals 4 M21/(v^2 - v_elas^2)",
               std::abs(ac.c1 - 4.0 * d.m21 / gap), 1e-12);
    }

    // Classification of the shipped parameter sets.
    {
        ck.add_flag("type a classifies as a", classify(fixtures::type_a()).regime == 'a');
        ck.add_flag("type c classifies as c", classify(fixtures::type_c()).regime == 'c');
        ck.add_flag("type d classifies as d", classify(fixtures::type_d()).regime == 'd');
        const ClassificationReport muc0 = classify(fixtures::type_a_mu_c_zero());
        ck.add_flag("mu_c = 0 reports v0 infinite", muc0.derived.v0_infinite());
        ck.add_flag("mu_c = 0 has an unbounded allowed band",
                    !muc0.allowed_intervals.empty() &&
                        std::isinf(muc0.allowed_intervals.back().hi));

        const ClassificationReport b = classify(fixtures::type_b());
        report.findings.push_back(
            {"mu-c-1.2-classification",
             "the mu_c = 1.2 variant of the reference set computes v0 > v4 and therefore "
             "classifies as type a; measured value is v0 - v4",
             b.derived.v0 - b.derived.v4});

        // lambda = 0 boundary: v0 coincides with v_elas.
        MaterialParams l0 = fixtures::type_a();
        l0.lambda = 0.0;
        const DerivedWaveQuantities dl0 = derive(l0);
        ck.add("v0 = v_elas when lambda = 0", std::abs(dl0.v0 - dl0.v_elas), 1e-12);
    }
}

// --------------------------------------------------------------- soliton --

// Admissible (params, v) samples with a defined k; includes the reference
// type a point.
std::vector<std::pair<MaterialParams, double>> soliton_samples() {
    std::vector<std::pair<MaterialParams, double>> s;
    s.emplace_back(fixtures::type_a(), 0.1);
    s.emplace_back(fixtures::type_a(), 1.0);
    s.emplace_back(fixtures::type_a(), 2.5);
    s.emplace_back(fixtures::type_c(), 0.5);
    s.emplace_back(fixtures::type_b(), 0.2);
    return s;
}

// Parameter set engineered so that b > 0 inside an allowed band: large
// lambda, diagonal M, v below v_elas.
MaterialParams b_positive_params() {
    MaterialParams p;
    p.kappa1 = 0.7;
    p.kappa2 = 0.4;
    p.kappa3 = 0.5;
    p.chi1 = 0.5;
    p.chi3 = 1.5;
    p.rho = 0.1;
    p.rho_rot = 0.05;
    p.mu_c = 0.3;
    p.lambda = 2.0;
    p.mu = 0.5;
    return p;
}

void suite_soliton(VerifyReport& report, std::uint64_t seed, double ts) {
    Checker ck{report, "soliton", ts};
    (void)seed;

    // Double sine-Gordon residual with analytic derivatives.
    {
        double worst = 0.0;
        for (const auto& [p, v] : soliton_samples()) {
            const SolitonSolution sol = make_soliton(p, v);
            for (int i = 0; i <= 2000; ++i) {
                const double theta = -20.0 + 40.0 * double(i) / 2000.0;
                worst = std::max(worst, std::abs(dsg_residual(sol, theta)));
            }
        }
        ck.add("dsg residual of exact profile (5 samples)", worst, 1e-8);
    }

    // Kink shape: monotone, range (0, 2pi), asymptotics, mirror, translation.
    {
        const SolitonSolution sol = make_soliton(fixtures::type_a(), 0.1);
        const SolitonSolution anti = make_soliton(fixtures::type_a(), 0.1, -1);
        double min_slope = 1e300, worst_mirror = 0.0, worst_translate = 0.0;
        for (int i = 0; i <= 1000; ++i) {
            const double theta = -30.0 + 60.0 * double(i) / 1000.0;
            const double z = theta / sol.k;
            min_slope = std::min(min_slope, phi_exact_eval(sol, z, 0.0).phi_z);
            const double mirror =
                phi_exact(anti, -z, 0.0) - (2.0 * M_PI - phi_exact(sol, z, 0.0));
            worst_mirror = std::max(worst_mirror, std::abs(mirror));
            const double dt = 2.37;
            worst_translate = std::max(
                worst_translate,
                std::abs(phi_exact(sol, z, 0.0) - phi_exact(sol, z + sol.v * dt, dt)));
        }
        ck.add_flag("kink strictly monotone", min_slope > 0.0);
        ck.add("antikink mirror identity", worst_mirror, 1e-12);
        ck.add("translation covariance", worst_translate, 1e-12);
        ck.add("kink asymptote at -inf", std::abs(phi_exact(sol, -700.0 / sol.k, 0.0)), 1e-12);
        ck.add("kink asymptote at +inf",
               std::abs(phi_exact(sol, 700.0 / sol.k, 0.0) - 2.0 * M_PI), 1e-12);
    }

    // The auxiliary exponential satisfies the wave condition; the two
    // first-order conditions differ by the sign of the middle term.
    {
        const SolitonSolution sol = make_soliton(fixtures::type_a(), 0.1);
        const DerivedWaveQuantities d = derive(sol.params);
        const double gap = sol.v * sol.v - d.m22;
        const double c_sq = d.m11 + d.m12 * d.m21 / gap;
        const double vhat_sq = sol.v * sol.v / c_sq;
        const double mb = sol.m_sq + sol.b;
        const double kap_sq = mb / (1.0 - vhat_sq);
        // u = e^{kappa (zhat - vhat t)}: u_tt - u_zz + (m^2+b) u over u.
        const double wave_residual = kap_sq * vhat_sq - kap_sq + mb;
        ck.add("auxiliary exponential satisfies the wave condition",
               std::abs(wave_residual) / mb, 1e-12);
        const double minus_form = kap_sq * vhat_sq - kap_sq + mb;  // (u_t)^2 - (u_z)^2 + mb u^2
        const double plus_form = kap_sq * vhat_sq + kap_sq + mb;   // all-plus variant
        ck.add("first-order condition with minus sign", std::abs(minus_form) / mb, 1e-12);
        report.findings.push_back(
            {"aux-condition-sign",
             "the first-order auxiliary condition holds with a relative minus sign between "
             "the squared derivatives; the all-plus variant evaluates to the measured "
             "(nonzero) value and has no nonzero real solution",
             plus_form / mb});
    }

    // Branch geometry of the arctan form.
    {
        const double k = 1.5, v = 0.1, t = 7.0;
        const double zs = branch_switch_z(k, v, t);
        const BranchPair bp = arctan_branch_pair(k, v, zs, t);
        ck.add("arctan branches meet at the switch with value pi",
               std::max(std::abs(bp.plus - M_PI), std::abs(bp.minus - M_PI)), 1e-12);

        // b = 0: the single-exponential arctan form is the exact kink.
        MaterialParams p = b_positive_params();
        const DerivedWaveQuantities d = derive(p);
        const double v_b0 =
            std::sqrt(d.m22 - p.lambda * p.lambda / (p.rho * (p.lambda + p.mu)));
        const SolitonSolution sol = make_soliton(p, v_b0);
        ck.add("b vanishes at the engineered speed", std::abs(sol.b), 1e-10);
        ck.add("arctan form equals exact kink when b = 0",
               arctan_form_deviation(sol, 30.0, 2000), 1e-12);

        const SolitonSolution sa = make_soliton(fixtures::type_a(), 0.1);
        report.findings.push_back(
            {"arctan-form-b-nonzero",
             "the single-exponential arctan profile deviates from the exact kink when b != 0; "
             "measured max |difference| in radians for the reference type a set at v = 0.1",
             arctan_form_deviation(sa, 30.0, 2000)});
    }

    // Linearised forms recover the exact ones as lambda = mu -> 0.
    {
        MaterialParams p = fixtures::type_a();
        p.lambda = p.mu = 1e-8;
        const double v = 3.0;
        const SolitonSolution sol = make_soliton(p, v);
        double worst_phi = 0.0, worst_psi = 0.0;
        std::vector<double> grid;
        for (double z = -30.0; z <= 30.0 + 1e-9; z += 0.25) grid.push_back(z);
        const DisplacementSolution disp = psi_quadrature(sol, grid);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            worst_phi = std::max(worst_phi, std::abs(phi_exact(sol, grid[i], 0.0) -
                                                     phi_linearised(p, v, grid[i], 0.0)));
            worst_psi = std::max(worst_psi, std::abs(disp.psi[i] -
                                                     psi_linearised(p, v, grid[i], 0.0)));
        }
        ck.add("linearised phi0 recovery at lambda = mu = 1e-8", worst_phi, 1e-6);
        ck.add("linearised psi0 recovery at lambda = mu = 1e-8", worst_psi, 1e-5);

        const double m0_sq = derive(fixtures::type_a()).m0_sq;
        ck.add("m0^2 = mu_c / rho_rot", std::abs(m0_sq - 3.0), 1e-14);
    }

    // Displacement quadrature: tails, consistency with the second field
    // equation, and the lambda = 0 closed antiderivative.
    {
        const SolitonSolution sol = make_soliton(fixtures::type_a(), 0.1);
        std::vector<double> grid;
        const double h = 0.01;
        for (double z = -40.0; z <= 40.0 + 1e-9; z += h) grid.push_back(z);
        const DisplacementSolution disp = psi_quadrature(sol, grid);
        ck.add("psi -> 0 at the left tail", std::abs(disp.psi.front()), 1e-10);
        ck.add("psi_z -> 0 at both tails",
               std::max(std::abs(psi_z_closed(sol, grid.front(), 0.0)),
                        std::abs(psi_z_closed(sol, grid.back(), 0.0))),
               1e-12);

        // Differentiating the table twice reproduces the curvature source.
        const DerivedWaveQuantities d = derive(sol.params);
        const double gap = sol.v * sol.v - d.m22;
        double worst = 0.0;
        const std::vector<double> psi_zz = d2_dz2(disp.psi, h);
        for (std::size_t i = 2; i + 2 < grid.size(); ++i) {
            const PhiEval pe = phi_exact_eval(sol, grid[i], 0.0);
            const double rhs = d.m21 / gap * pe.phi_zz -
                               2.0 * sol.params.lambda / (sol.params.rho * gap) * pe.sin_phi *
                                   pe.phi_z;
            worst = std::max(worst, std::abs(psi_zz[i] - rhs));
        }
        ck.add("second derivative of psi table matches the field equation", worst, 1e-3);

        MaterialParams l0 = fixtures::type_a();
        l0.lambda = 0.0;
        const SolitonSolution sol0 = make_soliton(l0, 0.1);
        const DerivedWaveQuantities d0 = derive(l0);
        const DisplacementSolution disp0 = psi_quadrature(sol0, grid);
        double worst0 = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const double expected = d0.m21 / (sol0.v * sol0.v - d0.m22) *
                                    phi_exact(sol0, grid[i], 0.0);
            worst0 = std::max(worst0, std::abs(disp0.psi[i] - expected));
        }
        ck.add("lambda = 0 displacement equals scaled kink", worst0, 1e-10);
    }

    // Closed-form displacement: literal arctanh domain vs arccoth reading,
    // and an independent antiderivative oracle for the quadrature.
    {
        const MaterialParams p = b_positive_params();
        const SolitonSolution sol = make_soliton(p, 4.0);
        ck.add_flag("engineered sample has b > 0", sol.b > 0.0);
        const DerivedWaveQuantities d = derive(p);
        const double gap = sol.v * sol.v - d.m22;
        const double r = sol.r();
        const double cc = sol.m_sq / (4.0 * (sol.m_sq + sol.b));
        const auto g = [&](double u_sq) {
            return (2.0 * cc * cc * u_sq + 1.0 - 2.0 * cc) / std::sqrt(r);
        };
        const auto step_oracle = [&](double z) {
            const double u_sq = std::exp(2.0 * sol.k * z);
            const double cos_integral = (2.0 / std::sqrt(r)) *
                                        (std::atanh(1.0 / g(u_sq)) - std::atanh(1.0 / g(0.0)));
            return d.m21 / gap * phi_exact(sol, z, 0.0) +
                   2.0 * p.lambda / (p.rho * gap) * cos_integral / sol.k;
        };

        std::vector<double> grid;
        for (double z = -12.0; z <= 12.0 + 1e-9; z += 0.02) grid.push_back(z);
        const DisplacementSolution disp = psi_quadrature(sol, grid);

        double min_y = 1e300;
        bool literal_defined_anywhere = false;
        double worst_rel = 0.0, worst_oracle = 0.0, scale = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) scale = std::max(scale, std::abs(disp.psi[i]));
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const ClosedFormPsi literal = psi_closed_form(sol, grid[i], 0.0);
            literal_defined_anywhere = literal_defined_anywhere || literal.defined;
            const ClosedFormPsi ac = psi_closed_form_arccoth(sol, grid[i], 0.0);
            if (ac.defined)
                worst_rel = std::max(worst_rel, std::abs(ac.value - disp.psi[i]) / scale);
            min_y = std::min(min_y, std::abs(psi_closed_form_y(sol, grid[i], 0.0)));
            worst_oracle = std::max(worst_oracle,
                                    std::abs(disp.psi[i] - step_oracle(grid[i])));
        }
        ck.add("displacement quadrature vs independent antiderivative", worst_oracle, 1e-9);
        ck.add_flag("literal arctanh form reports undefined everywhere",
                    !literal_defined_anywhere);
        ck.add("closed-form argument stays outside the arctanh domain",
               std::max(0.0, 1.0 - min_y), 0.0);
        report.findings.push_back(
            {"closed-form-arctanh-domain",
             "the closed-form displacement argument satisfies |Y| >= 1 for all admissible "
             "inputs, so the literal arctanh reading has empty real domain; the arctanh(1/Y) "
             "reading is evaluated instead (measured: lower bound of |Y| over the sweep)",
             min_y});
        report.findings.push_back(
            {"closed-form-vs-quadrature",
             "max relative deviation of the arctanh(1/Y) closed form from the quadrature "
             "oracle over the b > 0 sample window: the branch-switched argument folds back "
             "instead of accumulating the kink's step, so the right-half deviation is O(1)",
             worst_rel});
    }

    // Non-decaying integration constant would leave a residual slope at the
    // left tail; the decaying choice is used.
    {
        const SolitonSolution sol = make_soliton(fixtures::type_a(), 0.1);
        const DerivedWaveQuantities d = derive(sol.params);
        const double gap = sol.v * sol.v - d.m22;
        const double non_decaying_tail = std::abs(2.0 * sol.params.lambda / (sol.params.rho * gap));
        report.findings.push_back(
            {"displacement-slope-constant",
             "with the cos(phi) integration constant the displacement slope would approach "
             "the measured nonzero value at the quiescent tail; the decaying cos(phi) - 1 "
             "constant is used instead",
             non_decaying_tail});
    }
}

// -------------------------------------------------------------- simulate --

void suite_simulate(VerifyReport& report, std::uint64_t seed, double ts) {
    Checker ck{report, "simulate", ts};
    (void)seed;
    const MaterialParams p = fixtures::type_a();

    // Zero state has zero acceleration and stays zero.
    {
        FieldState s;
        s.z0 = -10.0;
        s.h = 20.0 / 255.0;
        s.phi.assign(256, 0.0);
        s.psi.assign(256, 0.0);
        s.phi_t.assign(256, 0.0);
        s.psi_t.assign(256, 0.0);
        SimConfig cfg;
        cfg.t_end = 1.0;
        cfg.record_every = 64;
        const RunResult rr = run(s, cfg, p);
        double worst = 0.0;
        for (double v : rr.snapshots.back().phi) worst = std::max(worst, std::abs(v));
        for (double v : rr.snapshots.back().psi) worst = std::max(worst, std::abs(v));
        ck.add("zero state stays zero", worst, 1e-15);
    }

    // Uniform phi = pi is an (unstable) equilibrium: zero acceleration.
    {
        FieldState s;
        s.z0 = -10.0;
        s.h = 20.0 / 255.0;
        s.phi.assign(256, M_PI);
        s.psi.assign(256, 0.0);
        s.phi_t.assign(256, 0.0);
        s.psi_t.assign(256, 0.0);
        std::vector<double> a_phi, a_psi;
        rhs_coupled(p, s, BoundaryCondition::ClampedAsymptotic, a_phi, a_psi);
        double worst = 0.0;
        for (double v : a_phi) worst = std::max(worst, std::abs(v));
        ck.add("uniform phi = pi has zero acceleration", worst, 1e-13);
    }

    // Leapfrog reversibility.
    {
        const SolitonSolution sol = make_decaying_soliton(p, 0.1);
        const FieldState initial = soliton_initial_state(sol, -20.0, 20.0, 512);
        FieldState s = initial;
        SimConfig cfg;
        const double dt = auto_dt(p, cfg, s.h);
        for (int i = 0; i < 50; ++i) step(s, cfg, p, dt);
        for (int i = 0; i < 50; ++i) step(s, cfg, p, -dt);
        double worst = 0.0;
        for (std::size_t i = 0; i < s.n(); ++i) {
            worst = std::max(worst, std::abs(s.phi[i] - initial.phi[i]));
            worst = std::max(worst, std::abs(s.psi[i] - initial.psi[i]));
            worst = std::max(worst, std::abs(s.phi_t[i] - initial.phi_t[i]));
            worst = std::max(worst, std::abs(s.psi_t[i] - initial.psi_t[i]));
        }
        ck.add("leapfrog forward-backward reversibility", worst, 1e-12);
    }

    // Static dsg kink barely moves; b = 0 reduces to the classical kink.
    {
        const SolitonSolution sol = make_soliton(p, 0.1);
        const double m_sq = sol.m_sq, b = sol.b;
        SimConfig cfg;
        cfg.system = SystemKind::Dsg;
        cfg.dsg_m_sq = m_sq;
        cfg.dsg_b = b;
        cfg.t_end = 10.0;
        cfg.record_every = 2000;
        const FieldState initial = dsg_kink_initial_state(m_sq, b, -16.0, 16.0, 8192);
        const RunResult rr = run(initial, cfg, p, [&](double z, double) {
            return dsg_kink_profile(m_sq, b, z);
        });
        ck.add("static dsg kink shape error after t = 10",
               rr.metrics.l2_shape_error.value_or(1.0), 1e-6);
        ck.add("static dsg kink energy drift", rr.metrics.energy_drift, 1e-6);
    }

    // Traveling soliton propagates at its construction speed.
    {
        const SolitonSolution sol = make_decaying_soliton(p, 0.1);
        const FieldState initial = soliton_initial_state(sol, -30.0, 30.0, 1024);
        SimConfig cfg;
        cfg.t_end = 5.0;
        cfg.record_every = 100;
        const RunResult rr = run(initial, cfg, p, [&](double z, double t) {
            return phi_exact(sol, z, t);
        });
        ck.add("traveling soliton speed error",
               std::abs(rr.metrics.measured_speed.value_or(0.0) - sol.v) / sol.v, 0.01);
        ck.add("traveling soliton shape error", rr.metrics.l2_shape_error.value_or(1.0), 1e-3);
        ck.add("traveling soliton energy drift", rr.metrics.energy_drift, 1e-4);
    }

    // Self-convergence at second order against the analytic profile.
    {
        const SolitonSolution sol = make_decaying_soliton(p, 0.1);
        auto shape_err = [&](std::size_t n) {
            const FieldState initial = soliton_initial_state(sol, -30.0, 30.0, n);
            SimConfig cfg;
            cfg.t_end = 2.0;
            cfg.record_every = 100000;
            const RunResult rr = run(initial, cfg, p, [&](double z, double t) {
                return phi_exact(sol, z, t);
            });
            return rr.metrics.l2_shape_error.value_or(1.0);
        };
        const double e1 = shape_err(512), e2 = shape_err(1024);
        const double order = std::log2(e1 / e2);
        ck.add("self-convergence order |order - 2|", std::abs(order - 2.0), 0.2);
    }

    // Determinism: identical runs produce bit-identical snapshots.
    {
        const SolitonSolution sol = make_decaying_soliton(p, 0.1);
        const FieldState initial = soliton_initial_state(sol, -20.0, 20.0, 512);
        SimConfig cfg;
        cfg.t_end = 1.0;
        cfg.record_every = 50;
        const RunResult r1 = run(initial, cfg, p);
        const RunResult r2 = run(initial, cfg, p);
        bool identical = r1.snapshots.size() == r2.snapshots.size();
        for (std::size_t s = 0; identical && s < r1.snapshots.size(); ++s)
            identical = identical &&
                        std::memcmp(r1.snapshots[s].phi.data(), r2.snapshots[s].phi.data(),
                                    r1.snapshots[s].phi.size() * sizeof(double)) == 0 &&
                        std::memcmp(r1.snapshots[s].psi.data(), r2.snapshots[s].psi.data(),
                                    r1.snapshots[s].psi.size() * sizeof(double)) == 0;
        ck.add_flag("bit-identical repeated runs", identical);
    }

    // Topological charge of well-separated kink-antikink data is conserved.
    {
        const SolitonSolution kink = make_decaying_soliton(p, 0.1);
        FieldState s;
        s.z0 = -40.0;
        s.h = 80.0 / 2047.0;
        const std::size_t n = 2048;
        s.phi.resize(n);
        s.psi.assign(n, 0.0);
        s.phi_t.assign(n, 0.0);
        s.psi_t.assign(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            const double z = s.z(i);
            s.phi[i] = phi_exact(kink, z + 15.0, 0.0) - phi_exact(kink, z - 15.0, 0.0);
        }
        const double charge0 = (s.phi[n - 1] - s.phi[0]) / (2.0 * M_PI);
        SimConfig cfg;
        cfg.t_end = 3.0;
        cfg.record_every = 10000;
        const RunResult rr = run(s, cfg, p);
        const FieldState& fin = rr.snapshots.back();
        const double charge1 = (fin.phi[fin.n() - 1] - fin.phi[0]) / (2.0 * M_PI);
        ck.add("topological charge conserved", std::abs(charge1 - charge0), 1e-13);
    }

    // The decaying-slope pair satisfies the coupled equations to O(h^2);
    // pairing the non-decaying-family rotation profile with the decaying slope
    // instead leaves the irreducible consistency residual
    // lambda^2/(rho rho_rot |v^2 - v_elas^2|).
    {
        auto phi_residual = [&](const SolitonSolution& sol, std::size_t n) {
            const FieldState s = soliton_initial_state(sol, -30.0, 30.0, n);
            std::vector<double> a_phi, a_psi;
            rhs_coupled(p, s, BoundaryCondition::ClampedAsymptotic, a_phi, a_psi);
            double worst = 0.0;
            for (std::size_t i = 1; i + 1 < n; ++i) {
                const PhiEval e = phi_exact_eval(sol, s.z(i), 0.0);
                worst = std::max(worst, std::abs(a_phi[i] - e.phi_tt));
            }
            return worst;
        };
        const SolitonSolution consistent = make_decaying_soliton(p, 0.1);
        const double c1 = phi_residual(consistent, 1024);
        const double c2 = phi_residual(consistent, 2048);
        ck.add("decaying pair field-equation residual order |ratio - 4|",
               std::abs(c1 / c2 - 4.0), 0.5);

        const SolitonSolution mixed = make_soliton(p, 0.1);
        const DerivedWaveQuantities d = derive(p);
        const double irreducible = phi_residual(mixed, 4096);
        report.findings.push_back(
            {"mixed-pair-consistency-residual",
             "pairing the non-decaying-family rotation profile with the decaying "
             "displacement slope leaves an h-independent residual in the rotation "
             "equation of magnitude lambda^2/(rho rho_rot |v^2 - v_elas^2|); measured "
             "at n = 4096 for the reference set at v = 0.1",
             irreducible});
        const double expected =
            p.lambda * p.lambda / (p.rho * p.rho_rot * std::abs(0.01 - d.m22));
        ck.add("mixed-pair residual matches its closed form",
               std::abs(irreducible - expected) / expected, 0.05);
    }

    // CFL violation is detected, not silently produced.
    {
        const SolitonSolution sol = make_decaying_soliton(p, 0.1);
        const FieldState initial = soliton_initial_state(sol, -20.0, 20.0, 512);
        SimConfig cfg;
        cfg.dt_auto = false;
        cfg.dt = 10.0 * auto_dt(p, SimConfig{}, initial.h);
        cfg.t_end = 5.0;
        bool caught = false;
        try {
            run(initial, cfg, p);
        } catch (const instability_error&) {
            caught = true;
        }
        ck.add_flag("instability raises a diagnostic", caught);
    }
}

}  // namespace

VerifyReport verify_suite(const std::string& suite, std::uint64_t seed, double tolerance_scale) {
    VerifyReport report;
    report.suite = suite;
    report.seed = seed;

    const bool all = suite == "all";
    bool matched = false;
    if (all || suite == "tensor") {
        suite_tensor(report, seed, tolerance_scale);
        matched = true;
    }
    if (all || suite == "energy") {
        suite_energy(report, seed, tolerance_scale);
        matched = true;
    }
    if (all || suite == "dispersion") {
        suite_dispersion(report, seed, tolerance_scale);
        matched = true;
    }
    if (all || suite == "soliton") {
        suite_soliton(report, seed, tolerance_scale);
        matched = true;
    }
    if (all || suite == "simulate") {
        suite_simulate(report, seed, tolerance_scale);
        matched = true;
    }
    if (!matched)
        throw std::invalid_argument(
            "verify: unknown suite '" + suite +
            "' (expected tensor|energy|dispersion|soliton|simulate|all)");

    report.all_pass = true;
    for (const CheckResult& c : report.checks) report.all_pass = report.all_pass && c.pass;
    return report;
}

}  // namespace cosserat
