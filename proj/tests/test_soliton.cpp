#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "cosserat/fixtures.hpp"
#include "cosserat/soliton.hpp"

using namespace cosserat;

namespace {

SolitonSolution reference_soliton() { return make_soliton(fixtures::type_a(), 0.1); }

// Parameters engineered so that b = 0 exactly at v_b0 (diagonal M keeps the
// speed inside the allowed band).
MaterialParams b_zero_params() {
    MaterialParams p = fixtures::type_a();
    p.kappa3 = 1.5;
    p.chi3 = 1.5;
    return p;
}
const double kVZeroB = 3.6514837167011076;  // sqrt(v_elas^2 - lambda^2/(rho (lambda+mu)))

}  // namespace

TEST_CASE("construction pins k, delta and the kink family condition") {
    const SolitonSolution sol = reference_soliton();
    CHECK(sol.k == doctest::Approx(0.8440100224059561).epsilon(1e-13));
    CHECK(sol.b == doctest::Approx(-9.997498749374687).epsilon(1e-13));
    CHECK(sol.m_sq == doctest::Approx(18.0).epsilon(1e-14));
    CHECK(sol.m_sq + sol.b > 0.0);
    CHECK(sol.delta == doctest::Approx(std::log(0.5)).epsilon(1e-15));
    CHECK(sol.k == doctest::Approx(k_of_v(sol.params, sol.v).k).epsilon(1e-15));

    // Forbidden and pole speeds are rejected with a message.
    const DerivedWaveQuantities d = derive(fixtures::type_a());
    CHECK_THROWS_AS((void)make_soliton(fixtures::type_a(), 0.5 * (d.v3 + d.v4)),
                    std::domain_error);
    CHECK_THROWS_AS((void)make_soliton(fixtures::type_a(), d.v3), std::domain_error);
}

TEST_CASE("kink shape: asymptotics, center value, monotonicity") {
    const SolitonSolution sol = reference_soliton();
    CHECK(phi_exact(sol, -1000.0, 0.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(phi_exact(sol, 1000.0, 0.0) == doctest::Approx(2.0 * M_PI).epsilon(1e-15));
    // Frozen independent evaluation of 2 atan2(1, 1 - (1-r)/4) at theta = 0.
    CHECK(phi_exact(sol, 0.0, 0.0) == doctest::Approx(2.3164766521449165).epsilon(1e-13));

    // Strictly monotone wherever consecutive tail values are still more
    // than one ulp of 2 pi apart (|theta| ~ 30 at this sample spacing),
    // monotone everywhere.
    double prev = -1.0;
    for (double z = -30.0; z <= 30.0; z += 0.05) {
        const double value = phi_exact(sol, z, 0.0);
        CHECK(value > prev);
        prev = value;
    }
    prev = -1.0;
    for (double z = -200.0; z <= 200.0; z += 0.5) {
        const double value = phi_exact(sol, z, 0.0);
        CHECK(value >= prev);
        prev = value;
    }
}

TEST_CASE("profile derivatives agree with finite differences") {
    const SolitonSolution sol = reference_soliton();
    const double eps = 1e-6;
    for (double z : {-8.0, -2.0, -0.3, 0.0, 1.0, 4.0, 9.0}) {
        const PhiEval e = phi_exact_eval(sol, z, 0.0);
        const double fd_z =
            (phi_exact(sol, z + eps, 0.0) - phi_exact(sol, z - eps, 0.0)) / (2.0 * eps);
        const double fd_t = (phi_exact(sol, z, eps) - phi_exact(sol, z, -eps)) / (2.0 * eps);
        CHECK(e.phi_z == doctest::Approx(fd_z).epsilon(1e-8));
        CHECK(e.phi_t == doctest::Approx(fd_t).epsilon(1e-8));
        CHECK(e.sin_phi == doctest::Approx(std::sin(e.phi)).epsilon(1e-12));
        CHECK(e.cos_phi == doctest::Approx(std::cos(e.phi)).epsilon(1e-12));

        const double fd2 = 1e-4;
        const double fd_zz = (phi_exact(sol, z + fd2, 0.0) - 2.0 * e.phi +
                              phi_exact(sol, z - fd2, 0.0)) /
                             (fd2 * fd2);
        CHECK(e.phi_zz == doctest::Approx(fd_zz).epsilon(1e-5));
    }
}

TEST_CASE("double sine-Gordon residual with analytic derivatives") {
    for (const auto& [params, v] :
         std::vector<std::pair<MaterialParams, double>>{{fixtures::type_a(), 0.1},
                                                        {fixtures::type_a(), 2.5},
                                                        {fixtures::type_c(), 0.5},
                                                        {fixtures::type_b(), 0.2},
                                                        {b_zero_params(), kVZeroB}}) {
        const SolitonSolution sol = make_soliton(params, v);
        double worst = 0.0;
        for (int i = 0; i <= 4000; ++i) {
            const double theta = -20.0 + 40.0 * double(i) / 4000.0;
            worst = std::max(worst, std::abs(dsg_residual(sol, theta)));
        }
        CAPTURE(v);
        CHECK(worst < 1e-8);
    }
}

TEST_CASE("overflow-safe evaluation far in the tails") {
    const SolitonSolution sol = reference_soliton();
    for (double theta : {-700.0, -350.0, 350.0, 700.0}) {
        const double z = theta / sol.k;
        const PhiEval e = phi_exact_eval(sol, z, 0.0);
        CHECK(std::isfinite(e.phi));
        CHECK(std::isfinite(e.phi_z));
        CHECK(std::isfinite(e.phi_zz));
        CHECK(std::abs(e.phi_z) < 1e-100);
    }
}

TEST_CASE("antikink mirror and translation covariance") {
    const SolitonSolution kink = reference_soliton();
    const SolitonSolution anti = make_soliton(fixtures::type_a(), 0.1, -1);
    for (double z : {-5.0, -1.0, 0.0, 0.7, 3.0}) {
        CHECK(phi_exact(anti, -z, 0.0) ==
              doctest::Approx(2.0 * M_PI - phi_exact(kink, z, 0.0)).epsilon(1e-12));
        const double shift = 4.1;
        CHECK(phi_exact(kink, z, 0.0) ==
              doctest::Approx(phi_exact(kink, z + kink.v * shift, shift)).epsilon(1e-12));
    }
}

TEST_CASE("arctan branch form: branch geometry") {
    // Reference figure configuration: k = 1.5, v = 0.1, t = 7.0.
    const double k = 1.5, v = 0.1, t = 7.0;
    const double zs = branch_switch_z(k, v, t);
    CHECK(zs == doctest::Approx(1.162098120373297).epsilon(1e-14));
    const BranchPair at_switch = arctan_branch_pair(k, v, zs, t);
    CHECK(at_switch.plus == doctest::Approx(M_PI).epsilon(1e-13));
    CHECK(at_switch.minus == doctest::Approx(M_PI).epsilon(1e-13));

    // Left of the crossing the rising branch sits below pi and the falling
    // branch above; they swap beyond it.
    const BranchPair left = arctan_branch_pair(k, v, zs - 1.0, t);
    CHECK(left.plus < M_PI);
    CHECK(left.minus > M_PI);
    const BranchPair right = arctan_branch_pair(k, v, zs + 1.0, t);
    CHECK(right.plus > M_PI);
    CHECK(right.minus < M_PI);
}

TEST_CASE("arctan branch form coincides with the exact kink iff b = 0") {
    const SolitonSolution zero_b = make_soliton(b_zero_params(), kVZeroB);
    CHECK(std::abs(zero_b.b) < 1e-12);
    CHECK(arctan_form_deviation(zero_b, 30.0, 3000) < 1e-12);

    const SolitonSolution nonzero_b = reference_soliton();
    const double dev = arctan_form_deviation(nonzero_b, 30.0, 3000);
    CHECK(dev > 0.1);  // strongly nonzero b: visibly different profile
    // Both forms still share the asymptotes and the value pi at the switch.
    const double z_pi = branch_switch_z(nonzero_b.k, nonzero_b.v, 0.0);
    CHECK(phi_arctan_branch(nonzero_b, z_pi, 0.0) == doctest::Approx(M_PI).epsilon(1e-12));
    CHECK(arctan_branch_index(nonzero_b, z_pi - 0.5, 0.0) == 1);
    CHECK(arctan_branch_index(nonzero_b, z_pi + 0.5, 0.0) == 2);
}

TEST_CASE("linearised soliton") {
    // m0^2 = mu_c / rho_rot = 3 for the reference constants.
    CHECK(derive(fixtures::type_a()).m0_sq == doctest::Approx(3.0).epsilon(1e-14));

    MaterialParams p = fixtures::type_a();
    p.lambda = p.mu = 1e-8;
    const double v = 3.0;
    const SolitonSolution sol = make_soliton(p, v);
    double worst = 0.0;
    for (double z = -30.0; z <= 30.0; z += 0.1)
        worst = std::max(worst,
                         std::abs(phi_exact(sol, z, 0.5) - phi_linearised(p, v, z, 0.5)));
    CHECK(worst < 1e-6);

    CHECK(phi_linearised(p, v, -1e4, 0.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(phi_linearised(p, v, 1e4, 0.0) == doctest::Approx(2.0 * M_PI).epsilon(1e-15));

    // No linearised soliton where k0^2 <= 0.
    CHECK_THROWS_AS((void)phi_linearised(fixtures::type_a(), 6.0, 0.0, 0.0),
                    std::domain_error);
}

TEST_CASE("displacement slope closed form and quadrature") {
    const SolitonSolution sol = reference_soliton();
    std::vector<double> grid;
    for (double z = -35.0; z <= 35.0 + 1e-9; z += 0.05) grid.push_back(z);
    const DisplacementSolution disp = psi_quadrature(sol, grid);

    SUBCASE("tail boundary conditions") {
        CHECK(std::abs(disp.psi.front()) < 1e-10);
        CHECK(std::abs(psi_z_closed(sol, grid.front(), 0.0)) < 1e-12);
        CHECK(std::abs(psi_z_closed(sol, grid.back(), 0.0)) < 1e-12);
    }

    SUBCASE("numerical derivative of the table matches the slope formula") {
        for (std::size_t i = 200; i + 200 < grid.size(); i += 137) {
            const double fd = (disp.psi[i + 1] - disp.psi[i - 1]) / (grid[i + 1] - grid[i - 1]);
            CHECK(fd == doctest::Approx(psi_z_closed(sol, grid[i], 0.0)).epsilon(5e-4));
        }
    }

    SUBCASE("lambda = 0 collapses to a scaled kink") {
        MaterialParams p = fixtures::type_a();
        p.lambda = 0.0;
        const SolitonSolution s0 = make_soliton(p, 0.1);
        const DerivedWaveQuantities d = derive(p);
        const DisplacementSolution disp0 = psi_quadrature(s0, grid);
        const double coeff = d.m21 / (s0.v * s0.v - d.m22);
        for (std::size_t i = 0; i < grid.size(); i += 100)
            CHECK(disp0.psi[i] ==
                  doctest::Approx(coeff * phi_exact(s0, grid[i], 0.0)).epsilon(1e-10));
    }
}

namespace {

// Exact antiderivative of the displacement slope for b > 0, derived by the
// substitution U = e^{2 theta}: integral of (cos phi - 1) dtheta equals
// (2/sqrt(r)) [arctanh(1/G(U)) - arctanh(1/G(0))] with
// G(U) = (2 c^2 U + 1 - 2c)/sqrt(r), c = m^2/(4 (m^2 + b)).
// Fully independent of the quadrature path; used as its oracle.
double psi_step_oracle(const SolitonSolution& sol, double z, double t) {
    const DerivedWaveQuantities d = derive(sol.params);
    const double gap = sol.v * sol.v - d.m22;
    const double r = sol.r();
    REQUIRE(r > 0.0);
    const double c = sol.m_sq / (4.0 * (sol.m_sq + sol.b));
    const auto g = [&](double u_sq) {
        return (2.0 * c * c * u_sq + 1.0 - 2.0 * c) / std::sqrt(r);
    };
    const double theta = sol.k * (z - sol.v * t);
    const double u_sq = std::exp(2.0 * theta);
    const double cos_integral =
        (2.0 / std::sqrt(r)) * (std::atanh(1.0 / g(u_sq)) - std::atanh(1.0 / g(0.0)));
    return d.m21 / gap * phi_exact(sol, z, t) +
           2.0 * sol.params.lambda / (sol.params.rho * gap) * cos_integral / sol.k;
}

}  // namespace

TEST_CASE("closed-form displacement: domains, oracle, and measured deviation") {
    // Engineered b > 0 sample: diagonal M, large lambda, v below v_elas.
    MaterialParams p = fixtures::type_a();
    p.kappa2 = 0.4;
    p.chi3 = 1.5;
    p.rho_rot = 0.05;
    p.lambda = 2.0;
    const SolitonSolution sol = make_soliton(p, 4.0);
    REQUIRE(sol.b > 0.0);

    std::vector<double> grid;
    for (double z = -10.0; z <= 10.0 + 1e-9; z += 0.02) grid.push_back(z);
    const DisplacementSolution disp = psi_quadrature(sol, grid);
    CHECK(disp.closed_form_defined);  // arccoth reading available for b > 0

    SUBCASE("quadrature matches the independent antiderivative oracle") {
        double worst = 0.0;
        for (std::size_t i = 0; i < grid.size(); i += 7)
            worst = std::max(worst,
                             std::abs(disp.psi[i] - psi_step_oracle(sol, grid[i], 0.0)));
        CHECK(worst < 1e-9);
    }

    SUBCASE("literal arctanh domain is empty; |Y| >= 1 throughout") {
        double min_y = 1e300;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const ClosedFormPsi literal = psi_closed_form(sol, grid[i], 0.0);
            CHECK_FALSE(literal.defined);
            CHECK(literal.violated == "requires |Y| < 1 (arctanh domain)");
            min_y = std::min(min_y, std::abs(psi_closed_form_y(sol, grid[i], 0.0)));
        }
        CHECK(min_y >= 1.0);
    }

    SUBCASE("arccoth reading: defined, tail-aligned, deviation is real and measured") {
        double scale = 0.0, worst_rel = 0.0;
        for (double v : disp.psi) scale = std::max(scale, std::abs(v));
        REQUIRE(scale > 0.0);
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const ClosedFormPsi ac = psi_closed_form_arccoth(sol, grid[i], 0.0);
            REQUIRE(ac.defined);
            worst_rel = std::max(worst_rel, std::abs(ac.value - disp.psi[i]) / scale);
        }
        // Aligned at the left tail by the constant C.
        const ClosedFormPsi left = psi_closed_form_arccoth(sol, grid.front(), 0.0);
        CHECK(std::abs(left.value - disp.psi.front()) / scale < 5e-3);
        // The branch-switched argument folds back instead of accumulating
        // the step, so the deviation is O(1) on the right half. It must be
        // measured and reported, never hidden: assert it is genuinely there.
        CHECK(worst_rel > 1e-3);
        CHECK(worst_rel <= 1.0 + 1e-12);
        const ClosedFormPsi right = psi_closed_form_arccoth(sol, grid.back(), 0.0);
        CHECK(std::abs(right.value) / scale < 5e-3);  // pulse shape returns to zero
    }

    SUBCASE("b <= 0 reports the violated condition") {
        const SolitonSolution neg = reference_soliton();
        const ClosedFormPsi cf = psi_closed_form(neg, 0.0, 0.0);
        CHECK_FALSE(cf.defined);
        CHECK(cf.violated == "requires b > 0");
        CHECK_FALSE(psi_quadrature(neg, grid).closed_form_defined);
    }
}

TEST_CASE("mirrored branch displacement") {
    // psi_-(z) = psi_+(inf) - psi_+(-z) for both the quadrature and the
    // linearised forms (anchored at zero on the quiescent side).
    const MaterialParams p = fixtures::type_a();
    const SolitonSolution plus = make_soliton(p, 0.1);
    const SolitonSolution minus = make_soliton(p, 0.1, -1);
    std::vector<double> grid;
    for (double z = -25.0; z <= 25.0 + 1e-9; z += 0.5) grid.push_back(z);
    const DisplacementSolution dp = psi_quadrature(plus, grid);
    const DisplacementSolution dm = psi_quadrature(minus, grid);
    std::vector<double> far = {60.0, 61.0};
    const double psi_plus_inf = psi_quadrature(plus, far).psi.back();
    for (std::size_t i = 0; i < grid.size(); i += 10) {
        const std::vector<double> mirror_grid = {-grid[i] - 1.0, -grid[i]};
        const double psi_plus_mirror = psi_quadrature(plus, mirror_grid).psi.back();
        CHECK(dm.psi[i] ==
              doctest::Approx(psi_plus_inf - psi_plus_mirror).epsilon(1e-9));
    }
    (void)dp;

    // Linearised counterpart via a finite-difference slope consistency:
    // d psi0/dz = (M21/(v^2 - v_elas^2)) d phi0/dz for either branch.
    const DerivedWaveQuantities d = derive(p);
    const double gap = 0.1 * 0.1 - d.m22;
    for (int branch : {1, -1})
        for (double z : {-3.0, 0.0, 2.0}) {
            const double eps = 1e-6;
            const double dpsi = (psi_linearised(p, 0.1, z + eps, 0.0, branch) -
                                 psi_linearised(p, 0.1, z - eps, 0.0, branch)) /
                                (2.0 * eps);
            const double dphi = (phi_linearised(p, 0.1, z + eps, 0.0, branch) -
                                 phi_linearised(p, 0.1, z - eps, 0.0, branch)) /
                                (2.0 * eps);
            CHECK(dpsi == doctest::Approx(d.m21 / gap * dphi).epsilon(1e-9));
        }
}

TEST_CASE("linearised displacement recovery") {
    MaterialParams p = fixtures::type_a();
    p.lambda = p.mu = 1e-8;
    const double v = 3.0;
    const SolitonSolution sol = make_soliton(p, v);
    std::vector<double> grid;
    for (double z = -30.0; z <= 30.0 + 1e-9; z += 0.25) grid.push_back(z);
    const DisplacementSolution disp = psi_quadrature(sol, grid);
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i)
        worst = std::max(worst,
                         std::abs(disp.psi[i] - psi_linearised(p, v, grid[i], 0.0)));
    CHECK(worst < 1e-5);
}

TEST_CASE("auxiliary exponential satisfies the traveling-wave condition") {
    // u = exp(kappa (zhat - vhat t)) with kappa^2 = (m^2+b)/(1 - vhat^2)
    // solves u_tt - u_zz + (m^2 + b) u = 0; finite differences on u as the
    // secondary oracle.
    const SolitonSolution sol = reference_soliton();
    const DerivedWaveQuantities d = derive(sol.params);
    const double c_sq = d.m11 + d.m12 * d.m21 / (sol.v * sol.v - d.m22);
    REQUIRE(c_sq > 0.0);
    const double vhat = sol.v / std::sqrt(c_sq);
    const double mb = sol.m_sq + sol.b;
    const double kappa = std::sqrt(mb / (1.0 - vhat * vhat));
    auto u = [&](double zhat, double t) { return std::exp(kappa * (zhat - vhat * t)); };
    const double eps = 1e-5;
    for (double zhat : {-1.0, 0.0, 0.8}) {
        const double t = 0.3;
        const double u_tt =
            (u(zhat, t + eps) - 2.0 * u(zhat, t) + u(zhat, t - eps)) / (eps * eps);
        const double u_zz =
            (u(zhat + eps, t) - 2.0 * u(zhat, t) + u(zhat - eps, t)) / (eps * eps);
        const double wave = u_tt - u_zz + mb * u(zhat, t);
        CHECK(std::abs(wave) / (mb * u(zhat, t)) < 1e-5);
        // The first-order condition holds with a minus sign between the
        // squared derivatives; the all-plus variant stays bounded away
        // from zero.
        const double u_t = (u(zhat, t + eps) - u(zhat, t - eps)) / (2.0 * eps);
        const double u_z = (u(zhat + eps, t) - u(zhat - eps, t)) / (2.0 * eps);
        const double uu = u(zhat, t) * u(zhat, t);
        const double minus_form = u_t * u_t - u_z * u_z + mb * uu;
        const double plus_form = u_t * u_t + u_z * u_z + mb * uu;
        CHECK(std::abs(minus_form) / (mb * uu) < 1e-5);
        CHECK(plus_form / (mb * uu) > 1.0);
    }
}
