#pragma once

#include <string>
#include <vector>

#include "cosserat/dispersion.hpp"
#include "cosserat/material.hpp"

namespace cosserat {

enum class SolitonForm { ExactArcsin, ArctanBranch, Linearised };

/// Fully parameterized traveling-wave record. k is pinned to k_of_v(params, v)
/// and delta = ln(1/2) throughout. branch_sign +1 is the kink rising 0 -> 2pi;
/// -1 is its mirror, phi(-theta; -1) = 2pi - phi(theta; +1).
struct SolitonSolution {
    MaterialParams params;
    double v = 0.0;
    double k = 0.0;
    double delta = 0.0;  ///< ln(1/2)
    int branch_sign = 1;
    double m_sq = 0.0;
    double b = 0.0;
    SolitonForm form = SolitonForm::ExactArcsin;

    double r() const { return b / (m_sq + b); }
    double theta(double z, double t) const { return k * (z - v * t); }
};

/// Builds the record, checking that k(v) is defined and m^2 + b > 0.
/// Throws std::domain_error otherwise (message names the failure).
SolitonSolution make_soliton(const MaterialParams& params, double v, int branch_sign = 1,
                             SolitonForm form = SolitonForm::ExactArcsin);

/// The traveling pair consistent with a decaying displacement slope.
///
/// The constant of integration in the slope feeds back into the rotation
/// equation through its lambda sin(phi) dz(psi) term: with the decaying
/// (cos phi - 1) choice the effective sine coefficient becomes
///   m^2 + lambda^2/(rho rho_rot (v^2 - v_elas^2)),
/// the double sine-Gordon combination m^2 + b collapses to mu_c/rho_rot and
/// the wavenumber to the linearised k0. This is the admissible family for
/// dynamical runs (the non-decaying family carries a tail slope
/// 2 lambda/(rho (v^2 - v_elas^2)) that can push det F below zero).
/// Requires k0^2 > 0; throws std::domain_error otherwise.
SolitonSolution make_decaying_soliton(const MaterialParams& params, double v,
                                      int branch_sign = 1);

/// Exact kink profile of the double sine-Gordon equation in the traveling
/// coordinate theta, phi = 2 arcsin(X(e^theta)) continued monotonically
/// through pi; evaluated as 2 atan2(u, 1 - (1-r) u^2/4), which is exact and
/// overflow-safe for |theta| up to ~700.
struct ProfileEval {
    double phi = 0.0;
    double dphi = 0.0;    ///< d phi / d theta
    double d2phi = 0.0;   ///< d^2 phi / d theta^2
    double sin_phi = 0.0; ///< closed form, not sin(phi) recomputed
    double cos_phi = 0.0;
};
ProfileEval exact_profile(double r, double theta);

/// phi and its z/t derivatives for the exact form.
struct PhiEval {
    double phi = 0.0;
    double phi_z = 0.0;
    double phi_zz = 0.0;
    double phi_t = 0.0;
    double phi_tt = 0.0;
    double sin_phi = 0.0;
    double cos_phi = 0.0;
};
PhiEval phi_exact_eval(const SolitonSolution& sol, double z, double t);

double phi_exact(const SolitonSolution& sol, double z, double t);

/// Residual of the double sine-Gordon equation on the exact profile with
/// analytic derivatives: -(m^2+b) Phi'' + m^2 sin Phi + (b/2) sin 2 Phi.
double dsg_residual(const SolitonSolution& sol, double theta);

/// Overflow-safe 4 arctan(e^x).
double four_atan_exp(double x);

/// Single-exponential arctan branch form 4 arctan e^{k(z-vt)+delta}
/// (mirrored for branch_sign = -1). Coincides with phi_exact exactly when
/// b = 0; the deviation for b != 0 is what deviation_from_exact measures.
double phi_arctan_branch(const SolitonSolution& sol, double z, double t);

/// The two +-k +-delta branch curves and their meeting point
/// z* = ln4/(2k) + vt, where both equal pi.
struct BranchPair {
    double plus = 0.0;   ///< 4 arctan e^{+k(z-vt)+delta}
    double minus = 0.0;  ///< 4 arctan e^{-k(z-vt)-delta}
};
BranchPair arctan_branch_pair(double k, double v, double z, double t);
double branch_switch_z(double k, double v, double t);

/// Which piece of the piecewise form applies at z: 1 for e^{2k(z-vt)} < 4,
/// 2 beyond.
int arctan_branch_index(const SolitonSolution& sol, double z, double t);

/// max |phi_arctan_branch - phi_exact| over theta in [-span, span].
double arctan_form_deviation(const SolitonSolution& sol, double span, int samples);

/// Linearised soliton phi0 = 4 arctan e^{k0 (z - vt) + delta}; throws
/// std::domain_error when k0^2 <= 0 at this v.
double phi_linearised(const MaterialParams& params, double v, double z, double t,
                      int branch_sign = 1);

/// Linearised displacement psi0 = 4 M21/(v^2 - v_elas^2) arctan e^{k0(z-vt)+delta}.
double psi_linearised(const MaterialParams& params, double v, double z, double t,
                      int branch_sign = 1);

/// d psi/d z along the traveling wave with the decaying choice of
/// integration constant:
///   psi_z = M21/(v^2 - v_elas^2) phi_z + 2 lambda/(rho (v^2 - v_elas^2)) (cos phi - 1),
/// which vanishes at both tails and reproduces the second field equation on
/// differentiation.
double psi_z_closed(const SolitonSolution& sol, double z, double t);

/// Displacement by cumulative adaptive-Simpson quadrature of psi_z_closed
/// from the left tail (psi -> 0 as z -> -infinity).
struct DisplacementSolution {
    std::vector<double> z;
    std::vector<double> psi;
    /// Whether the companion closed form is evaluable here (b > 0 with the
    /// arccoth reading); the literal arctanh domain is empty, see
    /// psi_closed_form.
    bool closed_form_defined = false;
    double C = 0.0;  ///< alignment constant of the closed form (arccoth reading)
};
DisplacementSolution psi_quadrature(const SolitonSolution& sol, const std::vector<double>& z_grid,
                                    double t = 0.0);

/// Literal closed form: value defined only when b > 0 and |Y| < 1 (real
/// arctanh). The Y of the printed formula satisfies |Y| >= 1 identically, so
/// this reports the violated condition; the arccoth variant below evaluates
/// the same expression under the reading arctanh(1/Y), whose domain is
/// b > 0 and |Y| > 1.
struct ClosedFormPsi {
    bool defined = false;
    double value = 0.0;
    std::string violated;  ///< named violated condition when !defined
};
ClosedFormPsi psi_closed_form(const SolitonSolution& sol, double z, double t);
ClosedFormPsi psi_closed_form_arccoth(const SolitonSolution& sol, double z, double t);

/// The Y argument of the closed-form displacement (requires b > 0; throws
/// std::domain_error otherwise). Satisfies |Y| >= 1 for every admissible
/// input, with equality only in the m -> 0 limit.
double psi_closed_form_y(const SolitonSolution& sol, double z, double t);

}  // namespace cosserat
