#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "cosserat/energy.hpp"
#include "cosserat/fixtures.hpp"

using namespace cosserat;

namespace {

AnsatzFields zero_fields(std::size_t n = 501, double h = 0.01) {
    AnsatzFields f;
    f.h = h;
    f.phi.assign(n, 0.0);
    f.psi.assign(n, 0.0);
    return f;
}

// Smooth localized fields with effectively compact support on [0, span].
AnsatzFields bump_fields(double amp_phi, double amp_psi, double h, double span) {
    AnsatzFields f;
    f.h = h;
    const std::size_t n = std::size_t(std::round(span / h)) + 1;
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

}  // namespace

TEST_CASE("all potentials vanish on the undeformed state") {
    const MaterialParams p = fixtures::type_a();
    const AnsatzFields f = zero_fields();
    CHECK(energy_elastic(p, f).value == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(energy_curvature(p, f).value == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(energy_interaction(p, f).value == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(energy_coupling(p, f).value == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("elastic energy of a uniform stretch") {
    // phi = 0, dz psi = c: density mu c^2 + (lambda/2) c^2 per unit length.
    const MaterialParams p = fixtures::type_a();
    AnsatzFields f = zero_fields();
    const double c = 0.2;
    const double span = f.h * double(f.phi.size() - 1);
    for (std::size_t i = 0; i < f.psi.size(); ++i) f.psi[i] = c * f.h * double(i);
    const double expected = (p.mu + 0.5 * p.lambda) * c * c * span;
    CHECK(energy_elastic(p, f).value == doctest::Approx(expected).epsilon(1e-13));
    CHECK(energy_elastic(p, f).max_pointwise_mismatch < 1e-13);
}

TEST_CASE("curvature energy of a constant rotation vanishes") {
    const MaterialParams p = fixtures::type_a();
    AnsatzFields f = zero_fields();
    for (double& v : f.phi) v = 1.234;
    CHECK(energy_curvature(p, f).value == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("curvature energy of a linear twist") {
    // phi = a z: density (2 kappa1/3 + 4 kappa3) a^2, with kappa2 absent
    // because skew(R^T Curl R) vanishes for the one-axis field.
    MaterialParams p = fixtures::type_a();
    AnsatzFields f;
    f.h = 5e-4;
    const std::size_t n = 4001;
    const double a = 0.41;
    f.phi.resize(n);
    f.psi.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) f.phi[i] = a * f.h * double(i);
    const double span = f.h * double(n - 1);
    const double expected = (2.0 * p.kappa1 / 3.0 + 4.0 * p.kappa3) * a * a * span;
    const double e1 = energy_curvature(p, f).value;
    CHECK(e1 == doctest::Approx(expected).epsilon(1e-6));

    p.kappa2 = 7.5;  // must not change the value beyond the h^2 skew residue
    const double e2 = energy_curvature(p, f).value;
    CHECK(std::abs(e2 - e1) / e1 < 1e-9);
}

TEST_CASE("interaction energy of a linear twist with no stretch") {
    // psi = 0, phi = a z: density 2 chi1 a (2 cos phi + 1) +
    // (2 chi3/3) a (cos phi - 1), integrated with the same trapezoid.
    const MaterialParams p = fixtures::type_a();
    AnsatzFields f;
    f.h = 1e-3;
    const std::size_t n = 2001;
    const double a = 0.27;
    f.phi.resize(n);
    f.psi.assign(n, 0.0);
    std::vector<double> expected_density(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double z = f.h * double(i);
        f.phi[i] = a * z;
        const double c = std::cos(a * z);
        expected_density[i] =
            2.0 * p.chi1 * a * (2.0 * c + 1.0) + (2.0 * p.chi3 / 3.0) * a * (c - 1.0);
    }
    const double expected = trapezoid(expected_density, f.h);
    CHECK(energy_interaction(p, f).value == doctest::Approx(expected).epsilon(1e-6));
}

TEST_CASE("zero rotation kills interaction and coupling for any admissible stretch") {
    const MaterialParams p = fixtures::type_a();
    AnsatzFields f = zero_fields();
    for (std::size_t i = 0; i < f.psi.size(); ++i)
        f.psi[i] = 0.3 * std::sin(0.5 * f.h * double(i));
    CHECK(std::abs(energy_interaction(p, f).value) < 1e-13);
    CHECK(std::abs(energy_coupling(p, f).value) < 1e-13);
}

TEST_CASE("coupling energy of a quarter turn and domain guard") {
    const MaterialParams p = fixtures::type_a();
    AnsatzFields f = zero_fields();
    for (double& v : f.phi) v = 0.5 * M_PI;
    const double span = f.h * double(f.phi.size() - 1);
    CHECK(energy_coupling(p, f).value == doctest::Approx(4.0 * p.mu_c * span).epsilon(1e-13));

    // 1 + dz psi <= 0 leaves the admissible branch.
    AnsatzFields bad = zero_fields();
    for (std::size_t i = 0; i < bad.psi.size(); ++i) bad.psi[i] = -1.5 * bad.h * double(i);
    CHECK_THROWS_AS((void)energy_coupling(p, bad), std::domain_error);
}

TEST_CASE("2 pi shift invariance of elastic and coupling energies") {
    const MaterialParams p = fixtures::type_a();
    const AnsatzFields f = bump_fields(0.9, 0.2, 0.01, 10.0);
    AnsatzFields g = f;
    for (double& v : g.phi) v += 2.0 * M_PI;
    CHECK(energy_elastic(p, g).value ==
          doctest::Approx(energy_elastic(p, f).value).epsilon(1e-12));
    CHECK(energy_coupling(p, g).value ==
          doctest::Approx(energy_coupling(p, f).value).epsilon(1e-12));
}

TEST_CASE("defining and expanded forms agree pointwise") {
    const MaterialParams p = fixtures::type_b();
    AnsatzFields f;
    f.h = 0.02;
    const std::size_t n = 501;
    f.phi.resize(n);
    f.psi.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double z = f.h * double(i);
        f.phi[i] = 1.1 * std::sin(0.8 * z) + 0.3 * std::cos(2.1 * z);
        f.psi[i] = 0.2 * std::sin(1.3 * z);
    }
    CHECK(energy_elastic(p, f).max_pointwise_mismatch < 1e-12);
    CHECK(energy_curvature(p, f).max_pointwise_mismatch < 1e-12);
    CHECK(energy_interaction(p, f).max_pointwise_mismatch < 1e-12);
    CHECK(energy_coupling(p, f).max_pointwise_mismatch < 1e-12);
}

TEST_CASE("kinetic energies") {
    const MaterialParams p = fixtures::type_a();
    AnsatzFields f = zero_fields();
    const double span = f.h * double(f.phi.size() - 1);

    SUBCASE("static fields have zero kinetic energy") {
        f.phi_t.assign(f.phi.size(), 0.0);
        f.psi_t.assign(f.psi.size(), 0.0);
        const KineticEnergies ke = kinetic_energies(p, f);
        CHECK(ke.elastic == 0.0);
        CHECK(ke.rotational == 0.0);
    }

    SUBCASE("uniform rates") {
        f.phi_t.assign(f.phi.size(), 1.0);
        f.psi_t.assign(f.psi.size(), 2.0);
        const KineticEnergies ke = kinetic_energies(p, f);
        // ||dR/dt||^2 = 2 phi_t^2: rotational density 2 rho_rot = 0.2.
        CHECK(ke.rotational == doctest::Approx(0.2 * span).epsilon(1e-13));
        CHECK(ke.elastic == doctest::Approx(0.5 * p.rho * 4.0 * span).epsilon(1e-13));
    }

    SUBCASE("missing arrays rejected") {
        CHECK_THROWS_AS((void)kinetic_energies(p, f), std::invalid_argument);
    }
}

TEST_CASE("variational check on the trivial state") {
    const MaterialParams p = fixtures::type_a();
    const AnsatzFields f = zero_fields(2001, 0.01);
    const VariationalReport r = variational_check(p, f, 1e-6);
    for (const VariationalProbe& probe : r.probes) {
        CHECK(std::abs(probe.fd_variation) < 1e-8);
        CHECK(std::abs(probe.analytic_variation) < 1e-12);
    }
}

TEST_CASE("variational check against the static field equations") {
    const MaterialParams p = fixtures::type_a();

    SUBCASE("bump in phi only") {
        AnsatzFields f = bump_fields(0.5, 0.0, 0.01, 20.0);
        const VariationalReport r = variational_check(p, f, 1e-6);
        CHECK(r.max_rel_discrepancy < 1e-4);
        CHECK_FALSE(r.diverged);
    }

    SUBCASE("bump in psi only reproduces the stretch equation") {
        AnsatzFields f = bump_fields(0.0, 0.3, 0.01, 20.0);
        const VariationalReport r = variational_check(p, f, 1e-6);
        CHECK(r.max_rel_discrepancy < 1e-4);
    }

    SUBCASE("second-order decrease under refinement") {
        const VariationalReport coarse =
            variational_check(p, bump_fields(0.5, 0.3, 0.02, 20.0), 1e-6);
        const VariationalReport fine =
            variational_check(p, bump_fields(0.5, 0.3, 0.01, 20.0), 1e-6);
        const double order = std::log2(coarse.max_rel_discrepancy / fine.max_rel_discrepancy);
        CHECK(order >= 1.9);
    }

    SUBCASE("kappa2 leaves the variation unchanged") {
        const VariationalReport r =
            variational_check(p, bump_fields(0.5, 0.3, 0.001, 20.0), 1e-4);
        CHECK(r.kappa2_sensitivity < 1e-10);
    }

    SUBCASE("h_fd outside the stable window is rejected") {
        const AnsatzFields f = bump_fields(0.5, 0.3, 0.01, 20.0);
        CHECK_THROWS_AS((void)variational_check(p, f, 1e-2), std::invalid_argument);
        CHECK_THROWS_AS((void)variational_check(p, f, 1e-10), std::invalid_argument);
    }
}

TEST_CASE("field validation") {
    const MaterialParams p = fixtures::type_a();
    AnsatzFields f;
    f.h = 0.01;
    f.phi.assign(4, 0.0);
    f.psi.assign(4, 0.0);
    CHECK_THROWS_AS((void)energy_elastic(p, f), std::invalid_argument);
    f.phi.assign(10, 0.0);
    f.psi.assign(9, 0.0);
    CHECK_THROWS_AS((void)energy_elastic(p, f), std::invalid_argument);
}
