#pragma once

#include <string>
#include <vector>

#include "cosserat/material.hpp"

namespace cosserat {

/// Closed-form wave-speed algebra derived from the material constants.
///
/// m is the 2x2 coupling matrix of the second-order system,
///   m11 = v_rot^2 = (kappa1 + 6 kappa3)/(3 rho_rot)
///   m12 = v_chi^2 = (3 chi1 - chi3)/(6 rho_rot)
///   m21 =           2 (3 chi1 - chi3)/(3 rho)
///   m22 = v_elas^2 = (lambda + 2 mu)/rho
/// v3^2 <= v4^2 are its eigenvalues; v1 = -v4, v2 = -v3. v0 is the speed at
/// which the wavenumber k vanishes; it is +infinity when mu_c = 0.
struct DerivedWaveQuantities {
    double m11 = 0.0, m12 = 0.0, m21 = 0.0, m22 = 0.0;
    double v_elas = 0.0, v_rot = 0.0;
    double v_chi_sq = 0.0;  ///< = m12, may be negative
    double m_sq = 0.0;      ///< (lambda + mu + mu_c)/rho_rot
    double m0_sq = 0.0;     ///< mu_c/rho_rot (linearised theory)
    double v0 = 0.0;        ///< +inf when mu_c == 0
    double v1 = 0.0, v2 = 0.0, v3 = 0.0, v4 = 0.0;
    double v3_sq = 0.0, v4_sq = 0.0;  ///< eigenvalues of M (v3_sq may be < 0)
    double discriminant = 0.0;  ///< (v_elas^2 - v_rot^2)^2 + 16 (rho_rot/rho) v_chi^4

    /// False when det M < 0: the smaller eigenvalue v3^2 is negative, the
    /// roots v2, v3 are not real and v2 = v3 = 0 is stored as a placeholder.
    /// k(v) stays well defined through the quartic; only the root table and
    /// regime classification lose meaning.
    bool roots_real = true;

    bool v0_infinite() const;
};

/// Throws std::domain_error for inadmissible params.
DerivedWaveQuantities derive(const MaterialParams& params);

/// b(v) = -(1/rho_rot) [ lambda^2/(rho (v^2 - v_elas^2)) + (lambda + mu) ].
/// defined == false marks the pole at v = v_elas.
struct BResult {
    bool defined = false;
    double value = 0.0;
};
BResult b_of_v(const MaterialParams& params, double v);

enum class KStatus {
    Defined,   ///< k real, >= 0
    Forbidden, ///< k^2 < 0: no traveling solution at this speed
    Pole       ///< v coincides with a root v3 or v4 of the denominator
};

struct KResult {
    KStatus status = KStatus::Forbidden;
    double k = 0.0;         ///< valid when status == Defined
    double radicand = 0.0;  ///< k^2, sign-carrying
    bool k0_defined = false;
    double k0 = 0.0;        ///< linearised wavenumber, when its radicand >= 0
};

/// Wavenumber k(v) >= 0 with k^2 = [lambda^2 + mu_c rho (v_elas^2 - v^2)]
/// / [rho rho_rot (v^2 - v3^2)(v^2 - v4^2)]. Forbidden regions are a
/// first-class status, never NaN.
KResult k_of_v(const MaterialParams& params, double v);

struct VelocityInterval {
    double lo = 0.0;
    double hi = 0.0;  ///< +inf for an unbounded band (mu_c = 0)
    bool lo_closed = false;
    bool hi_closed = false;
};

struct ClassificationReport {
    char regime = '?';  ///< one of a, b, c, d
    bool boundary_case = false;  ///< |v0 - v4| below classification tolerance
    DerivedWaveQuantities derived;
    std::vector<VelocityInterval> allowed_intervals;  ///< where k^2 > 0, v >= 0
    std::string notes;
};

/// Regime a iff v0 > v4; b iff v0 < v4; c iff 3 chi1 - chi3 = 0 (M diagonal);
/// d iff additionally v_elas = v_rot. Boundary ties |v0 - v4| < 1e-9 report
/// regime a with boundary_case set. Throws std::domain_error when the
/// characteristic speeds are not all real (see DerivedWaveQuantities).
ClassificationReport classify(const MaterialParams& params);

struct ApproxRoots {
    double v3_approx = 0.0;
    double v4_approx = 0.0;
    double validity = 0.0;  ///< smallness parameter (rho_rot/rho) v_chi^4/(v_elas^2-v_rot^2)^2
};

/// First-order expansions of v3, v4 in the small parameter above.
/// Throws std::domain_error when v_elas = v_rot (expansion invalid).
ApproxRoots approx_roots(const MaterialParams& params);

struct RescaleResult {
    bool defined = false;
    std::string reason;     ///< set when !defined
    double residual = 0.0;  ///< |k (z - v t) - sqrt((m^2+b)/(1-vhat^2)) (zhat - vhat t)|
};

/// Round trip between the (z, v) and rescaled (zhat, vhat) soliton phases.
RescaleResult rescale_roundtrip(const MaterialParams& params, double v, double z, double t);

struct AmplitudeCoefficients {
    double c1 = 0.0;  ///< 16 rho_rot v_chi^2 / (rho (v^2 - v_elas^2))
    double c2 = 0.0;  ///< 4 lambda / (rho k (v^2 - v_elas^2))
};

/// Throws std::domain_error at the v = v_elas pole or where k is undefined
/// or zero.
AmplitudeCoefficients amplitude_coefficients(const MaterialParams& params, double v);

}  // namespace cosserat
