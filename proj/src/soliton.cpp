#include "cosserat/soliton.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace cosserat {

namespace {
constexpr double kTwoPi = 2.0 * M_PI;
}

SolitonSolution make_soliton(const MaterialParams& params, double v, int branch_sign,
                             SolitonForm form) {
    if (branch_sign != 1 && branch_sign != -1)
        throw std::invalid_argument("make_soliton: branch_sign must be +1 or -1");

    const KResult kr = k_of_v(params, v);
    if (kr.status == KStatus::Pole)
        throw std::domain_error("make_soliton: v lies on a characteristic pole (v3 or v4)");
    if (kr.status == KStatus::Forbidden)
        throw std::domain_error("make_soliton: v lies in a forbidden region, k^2 < 0");

    const BResult br = b_of_v(params, v);
    if (!br.defined) throw std::domain_error("make_soliton: b(v) has a pole at v = v_elas");

    const DerivedWaveQuantities d = derive(params);
    SolitonSolution sol;
    sol.params = params;
    sol.v = v;
    sol.k = kr.k;
    sol.delta = std::log(0.5);
    sol.branch_sign = branch_sign;
    sol.m_sq = d.m_sq;
    sol.b = br.value;
    sol.form = form;
    if (!(sol.m_sq + sol.b > 0.0))
        throw std::domain_error("make_soliton: m^2 + b <= 0, no traveling kink of this family");
    return sol;
}

SolitonSolution make_decaying_soliton(const MaterialParams& params, double v, int branch_sign) {
    if (branch_sign != 1 && branch_sign != -1)
        throw std::invalid_argument("make_decaying_soliton: branch_sign must be +1 or -1");
    const KResult kr = k_of_v(params, v);
    if (!kr.k0_defined || kr.k0 == 0.0)
        throw std::domain_error("make_decaying_soliton: k0^2 <= 0, no kink at this speed");
    const BResult br = b_of_v(params, v);
    if (!br.defined)
        throw std::domain_error("make_decaying_soliton: b(v) has a pole at v = v_elas");
    const DerivedWaveQuantities d = derive(params);

    SolitonSolution sol;
    sol.params = params;
    sol.v = v;
    sol.k = kr.k0;
    sol.delta = std::log(0.5);
    sol.branch_sign = branch_sign;
    const double gap = v * v - d.m22;
    sol.m_sq = d.m_sq + params.lambda * params.lambda / (params.rho * params.rho_rot * gap);
    sol.b = br.value;
    sol.form = SolitonForm::ExactArcsin;
    if (!(sol.m_sq + sol.b > 0.0))
        throw std::domain_error("make_decaying_soliton: m^2 + b <= 0 for the decaying family");
    return sol;
}

ProfileEval exact_profile(double r, double theta) {
    ProfileEval e;
    const double one_r = 1.0 - r;  // = m^2/(m^2+b) > 0
    if (theta <= 0.0) {
        const double u = std::exp(theta);
        const double uu = u * u;
        const double a = 1.0 + one_r * uu / 4.0;
        const double bb = 1.0 - one_r * uu / 4.0;
        const double p = bb * bb + uu;
        const double ee = (1.0 + r) + one_r * one_r * uu / 4.0;
        e.phi = 2.0 * std::atan2(u, bb);
        e.dphi = 2.0 * u * a / p;
        e.d2phi = 2.0 * u * ((a + one_r * uu / 2.0) * p - a * uu * ee) / (p * p);
        e.sin_phi = 2.0 * u * bb / p;
        e.cos_phi = (bb * bb - uu) / p;
    } else {
        // Rescaled by powers of w = e^{-theta}: exact for theta up to ~700.
        const double w = std::exp(-theta);
        const double ww = w * w;
        const double aw = ww + one_r / 4.0;          // A w^2
        const double bw = ww - one_r / 4.0;          // B w^2
        const double pw = bw * bw + ww;              // P w^4
        const double ew = (1.0 + r) * ww + one_r * one_r / 4.0;  // E w^2
        e.phi = 2.0 * std::atan2(w, bw);  // in (0, 2 pi): continues past pi
        e.dphi = 2.0 * w * aw / pw;
        e.d2phi = 2.0 * w * ((aw + one_r / 2.0) * pw - aw * ew) / (pw * pw);
        e.sin_phi = 2.0 * w * bw / pw;
        e.cos_phi = (bw * bw - ww) / pw;
    }
    return e;
}

PhiEval phi_exact_eval(const SolitonSolution& sol, double z, double t) {
    const double theta = sol.theta(z, t);
    const double r = sol.r();
    PhiEval out;
    if (sol.branch_sign == 1) {
        const ProfileEval p = exact_profile(r, theta);
        out.phi = p.phi;
        out.phi_z = sol.k * p.dphi;
        out.phi_zz = sol.k * sol.k * p.d2phi;
        out.sin_phi = p.sin_phi;
        out.cos_phi = p.cos_phi;
    } else {
        // Mirror: phi(-theta; -1) = 2 pi - phi(theta; +1).
        const ProfileEval p = exact_profile(r, -theta);
        out.phi = kTwoPi - p.phi;
        out.phi_z = sol.k * p.dphi;
        out.phi_zz = -sol.k * sol.k * p.d2phi;
        out.sin_phi = -p.sin_phi;
        out.cos_phi = p.cos_phi;
    }
    out.phi_t = -sol.v * out.phi_z;
    out.phi_tt = sol.v * sol.v * out.phi_zz;
    return out;
}

double phi_exact(const SolitonSolution& sol, double z, double t) {
    return phi_exact_eval(sol, z, t).phi;
}

double dsg_residual(const SolitonSolution& sol, double theta) {
    const double r = sol.r();
    const double mb = sol.m_sq + sol.b;
    const double th = (sol.branch_sign == 1) ? theta : -theta;
    const ProfileEval p = exact_profile(r, th);
    const double d2 = (sol.branch_sign == 1) ? p.d2phi : -p.d2phi;
    const double s = (sol.branch_sign == 1) ? p.sin_phi : -p.sin_phi;
    const double sin2 = 2.0 * s * p.cos_phi;
    return -mb * d2 + sol.m_sq * s + 0.5 * sol.b * sin2;
}

double four_atan_exp(double x) {
    if (x <= 0.0) return 4.0 * std::atan(std::exp(x));
    return kTwoPi - 4.0 * std::atan(std::exp(-x));
}

double phi_arctan_branch(const SolitonSolution& sol, double z, double t) {
    const double theta = sol.theta(z, t);
    if (sol.branch_sign == 1) return four_atan_exp(theta + sol.delta);
    return kTwoPi - four_atan_exp(-theta + sol.delta);
}

BranchPair arctan_branch_pair(double k, double v, double z, double t) {
    const double delta = std::log(0.5);
    const double s = z - v * t;
    BranchPair b;
    b.plus = four_atan_exp(k * s + delta);
    b.minus = four_atan_exp(-k * s - delta);
    return b;
}

double branch_switch_z(double k, double v, double t) {
    return std::log(4.0) / (2.0 * k) + v * t;
}

int arctan_branch_index(const SolitonSolution& sol, double z, double t) {
    const double theta = sol.theta(z, t) * double(sol.branch_sign);
    return (2.0 * theta < std::log(4.0)) ? 1 : 2;
}

double arctan_form_deviation(const SolitonSolution& sol, double span, int samples) {
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double theta = -span + 2.0 * span * double(i) / double(samples - 1);
        const double z = theta / sol.k + sol.v * 0.0;
        const double d = std::abs(phi_arctan_branch(sol, z, 0.0) - phi_exact(sol, z, 0.0));
        worst = std::max(worst, d);
    }
    return worst;
}

double phi_linearised(const MaterialParams& params, double v, double z, double t,
                      int branch_sign) {
    const KResult kr = k_of_v(params, v);
    if (!kr.k0_defined)
        throw std::domain_error("phi_linearised: k0^2 <= 0, no linearised soliton at this v");
    const double delta = std::log(0.5);
    const double theta = kr.k0 * (z - v * t);
    if (branch_sign == 1) return four_atan_exp(theta + delta);
    return kTwoPi - four_atan_exp(-theta + delta);
}

double psi_linearised(const MaterialParams& params, double v, double z, double t,
                      int branch_sign) {
    const DerivedWaveQuantities d = derive(params);
    const double gap = v * v - d.m22;
    if (gap == 0.0) throw std::domain_error("psi_linearised: pole at v = v_elas");
    // psi0 is the scaled rotation profile, so the mirrored branch scales the
    // mirrored kink (anchored at psi(-inf) = 0 either way).
    return d.m21 / gap * phi_linearised(params, v, z, t, branch_sign);
}

double psi_z_closed(const SolitonSolution& sol, double z, double t) {
    const DerivedWaveQuantities d = derive(sol.params);
    const double gap = sol.v * sol.v - d.m22;
    if (gap == 0.0) throw std::domain_error("psi_z_closed: pole at v = v_elas");
    const PhiEval p = phi_exact_eval(sol, z, t);
    return d.m21 / gap * p.phi_z +
           2.0 * sol.params.lambda / (sol.params.rho * gap) * (p.cos_phi - 1.0);
}

namespace {

// Adaptive Simpson with absolute tolerance.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double fa,
                        double fm, double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
        return left + right + (left + right - whole) / 15.0;
    return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
    if (a == b) return 0.0;
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return adaptive_simpson(f, a, b, fa, fm, fb, whole, tol, 40);
}

struct ClosedFormPieces {
    bool b_positive = false;
    double y = 0.0;        // Y of the displacement closed form
    double y_infinity = 0.0;
    double term1 = 0.0;    // arctan kink part
    double coeff2 = 0.0;   // prefactor of the arctanh/arccoth part
};

ClosedFormPieces closed_form_pieces(const SolitonSolution& sol, double z, double t) {
    ClosedFormPieces cf;
    const double b = sol.b, m2 = sol.m_sq;
    const DerivedWaveQuantities d = derive(sol.params);
    const double gap = sol.v * sol.v - d.m22;
    if (gap == 0.0) throw std::domain_error("psi_closed_form: pole at v = v_elas");
    const double s = double(sol.branch_sign) * (z - sol.v * t);

    cf.term1 = d.m21 / gap * four_atan_exp(sol.k * s + sol.delta);
    cf.coeff2 = 4.0 * sol.params.lambda / (sol.params.rho * sol.k * gap);
    cf.b_positive = b > 0.0;
    if (!cf.b_positive) return cf;

    const double denom = 8.0 * std::sqrt(b) * std::pow(m2 + b, 1.5);
    const double base = 8.0 * b * b + 12.0 * b * m2;
    const double two_ks = 2.0 * sol.k * s;
    // Piecewise exponential argument; both pieces stay in (0, 1].
    const double expo =
        (two_ks >= std::log(4.0)) ? 4.0 * std::exp(-two_ks) : 0.25 * std::exp(two_ks);
    cf.y = (base + m2 * m2 * (expo + 4.0)) / denom;
    cf.y_infinity = (base + 4.0 * m2 * m2) / denom;
    return cf;
}

}  // namespace

DisplacementSolution psi_quadrature(const SolitonSolution& sol, const std::vector<double>& z_grid,
                                    double t) {
    if (z_grid.size() < 2) throw std::invalid_argument("psi_quadrature: need at least 2 samples");
    for (std::size_t i = 1; i < z_grid.size(); ++i)
        if (!(z_grid[i] > z_grid[i - 1]))
            throw std::invalid_argument("psi_quadrature: grid must be strictly increasing");

    const auto f = [&](double z) { return psi_z_closed(sol, z, t); };

    // Left tail: the integrand decays like e^{-k |theta|} toward z -> -inf
    // for either branch; 60 e-folds puts the neglected mass far below the
    // quadrature tolerance.
    const double tail = 60.0 / sol.k;
    const double left = std::min(z_grid.front(), sol.v * t - tail);

    DisplacementSolution out;
    out.z = z_grid;
    out.psi.resize(z_grid.size());
    const double tol = 1e-12;
    double acc = integrate(f, left, z_grid.front(), tol);
    out.psi[0] = acc;
    for (std::size_t i = 1; i < z_grid.size(); ++i) {
        acc += integrate(f, z_grid[i - 1], z_grid[i], tol);
        out.psi[i] = acc;
    }

    if (sol.b > 0.0) {
        const ClosedFormPieces cf = closed_form_pieces(sol, z_grid.front(), t);
        out.closed_form_defined = std::abs(cf.y_infinity) > 1.0;
        if (out.closed_form_defined)
            out.C = -cf.coeff2 * std::sqrt(1.0 + sol.m_sq / sol.b) * std::atanh(1.0 / cf.y_infinity);
    }
    return out;
}

ClosedFormPsi psi_closed_form(const SolitonSolution& sol, double z, double t) {
    ClosedFormPsi out;
    const ClosedFormPieces cf = closed_form_pieces(sol, z, t);
    if (!cf.b_positive) {
        out.violated = "requires b > 0";
        return out;
    }
    if (!(std::abs(cf.y) < 1.0)) {
        out.violated = "requires |Y| < 1 (arctanh domain)";
        return out;
    }
    const double root = std::sqrt(1.0 + sol.m_sq / sol.b);
    out.defined = true;
    out.value = cf.term1 + cf.coeff2 * root * (std::atanh(cf.y) - std::atanh(cf.y_infinity));
    return out;
}

double psi_closed_form_y(const SolitonSolution& sol, double z, double t) {
    const ClosedFormPieces cf = closed_form_pieces(sol, z, t);
    if (!cf.b_positive) throw std::domain_error("psi_closed_form_y: requires b > 0");
    return cf.y;
}

ClosedFormPsi psi_closed_form_arccoth(const SolitonSolution& sol, double z, double t) {
    ClosedFormPsi out;
    const ClosedFormPieces cf = closed_form_pieces(sol, z, t);
    if (!cf.b_positive) {
        out.violated = "requires b > 0";
        return out;
    }
    if (!(std::abs(cf.y) > 1.0) || !(std::abs(cf.y_infinity) > 1.0)) {
        out.violated = "requires |Y| > 1 (arccoth domain)";
        return out;
    }
    const double root = std::sqrt(1.0 + sol.m_sq / sol.b);
    out.defined = true;
    out.value =
        cf.term1 + cf.coeff2 * root * (std::atanh(1.0 / cf.y) - std::atanh(1.0 / cf.y_infinity));
    return out;
}

}  // namespace cosserat
