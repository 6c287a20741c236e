#include "cosserat/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace cosserat {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kBoundaryTol = 1e-9;
constexpr double kDiagonalTol = 1e-12;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Quartic denominator of k^2 as a function of v^2:
// q(s) = s^2 - tr(M) s + det(M) = (s - v3^2)(s - v4^2).
double quartic_q(const DerivedWaveQuantities& d, double v_sq) {
    const double tr = d.m11 + d.m22;
    const double det = d.m11 * d.m22 - d.m12 * d.m21;
    return (v_sq - tr) * v_sq + det;
}

// Magnitude scale of q for roundoff-window pole detection: a speed computed
// as sqrt(v3_sq) does not square back to v3_sq exactly, so an exact zero
// test would never fire on the poles it is meant to flag.
double quartic_scale(const DerivedWaveQuantities& d, double v_sq) {
    const double tr = std::abs(d.m11) + std::abs(d.m22);
    const double det = std::abs(d.m11 * d.m22) + std::abs(d.m12 * d.m21);
    return v_sq * v_sq + tr * v_sq + det;
}

double k_numerator(const MaterialParams& p, const DerivedWaveQuantities& d, double v_sq) {
    return p.lambda * p.lambda + p.mu_c * p.rho * (d.m22 - v_sq);
}

double k_numerator_scale(const MaterialParams& p, const DerivedWaveQuantities& d, double v_sq) {
    return p.lambda * p.lambda + p.mu_c * p.rho * (d.m22 + v_sq);
}
}  // namespace

bool DerivedWaveQuantities::v0_infinite() const { return std::isinf(v0); }

DerivedWaveQuantities derive(const MaterialParams& p) {
    p.validate();

    DerivedWaveQuantities d;
    d.m11 = (p.kappa1 + 6.0 * p.kappa3) / (3.0 * p.rho_rot);
    d.m12 = (3.0 * p.chi1 - p.chi3) / (6.0 * p.rho_rot);
    d.m21 = 2.0 * (3.0 * p.chi1 - p.chi3) / (3.0 * p.rho);
    d.m22 = (p.lambda + 2.0 * p.mu) / p.rho;
    d.v_rot = std::sqrt(d.m11);
    d.v_elas = std::sqrt(d.m22);
    d.v_chi_sq = d.m12;

    d.m_sq = (p.lambda + p.mu + p.mu_c) / p.rho_rot;
    d.m0_sq = p.mu_c / p.rho_rot;

    // Discriminant in its manifestly non-negative form.
    const double diff = d.m22 - d.m11;
    d.discriminant = diff * diff + 16.0 * (p.rho_rot / p.rho) * d.v_chi_sq * d.v_chi_sq;

    const double sum = d.m11 + d.m22;
    const double root = std::sqrt(d.discriminant);
    d.v4_sq = 0.5 * (sum + root);
    d.v3_sq = 0.5 * (sum - root);
    d.v4 = std::sqrt(d.v4_sq);
    d.v1 = -d.v4;
    if (d.v3_sq >= 0.0) {
        d.v3 = std::sqrt(d.v3_sq);
        d.v2 = -d.v3;
    } else {
        d.roots_real = false;
        d.v3 = 0.0;
        d.v2 = 0.0;
    }

    d.v0 = (p.mu_c == 0.0)
               ? kInf
               : std::sqrt(p.lambda * p.lambda / (p.rho * p.mu_c) + d.m22);
    return d;
}

BResult b_of_v(const MaterialParams& p, double v) {
    const DerivedWaveQuantities d = derive(p);
    const double denom = v * v - d.m22;
    if (std::abs(denom) <= 32.0 * kEps * (v * v + d.m22)) return {false, 0.0};
    const double value =
        -(p.lambda * p.lambda / (p.rho * denom) + (p.lambda + p.mu)) / p.rho_rot;
    return {true, value};
}

KResult k_of_v(const MaterialParams& p, double v) {
    if (!(v >= 0.0)) throw std::invalid_argument("k_of_v: v must be >= 0");
    const DerivedWaveQuantities d = derive(p);
    const double v_sq = v * v;
    double q = quartic_q(d, v_sq);
    double num = k_numerator(p, d, v_sq);

    // Roundoff windows: v handed in as sqrt(v3_sq) or as v0 lands within a
    // few ulps of the exact pole/zero, not on it.
    if (std::abs(q) <= 64.0 * kEps * quartic_scale(d, v_sq)) q = 0.0;
    if (std::abs(num) <= 64.0 * kEps * k_numerator_scale(p, d, v_sq)) num = 0.0;

    KResult r;
    // Linearised k0^2 = (v_elas^2 - v^2) m0^2 / q.
    if (q != 0.0) {
        const double k0_sq = (d.m22 - v_sq) * d.m0_sq / q;
        if (k0_sq >= 0.0) {
            r.k0_defined = true;
            r.k0 = std::sqrt(k0_sq);
        }
    }

    if (q == 0.0) {
        r.status = KStatus::Pole;
        return r;
    }
    r.radicand = num / (p.rho * p.rho_rot * q);
    if (r.radicand < 0.0) {
        r.status = KStatus::Forbidden;
        return r;
    }
    r.status = KStatus::Defined;
    r.k = std::sqrt(r.radicand);
    return r;
}

ClassificationReport classify(const MaterialParams& p) {
    ClassificationReport rep;
    rep.derived = derive(p);
    const DerivedWaveQuantities& d = rep.derived;
    if (!d.roots_real)
        throw std::domain_error(
            "classify: det M < 0, characteristic speeds not all real; no regime label");

    const double off_diag = 3.0 * p.chi1 - p.chi3;
    if (std::abs(off_diag) <= kDiagonalTol) {
        rep.regime = (std::abs(d.v_elas - d.v_rot) < kBoundaryTol) ? 'd' : 'c';
    } else if (std::isinf(d.v0) || d.v0 > d.v4 + kBoundaryTol) {
        rep.regime = 'a';
    } else if (d.v0 < d.v4 - kBoundaryTol) {
        rep.regime = 'b';
    } else {
        rep.regime = 'a';
        rep.boundary_case = true;
        rep.notes = "v0 = v4 within tolerance: boundary between types a and b";
    }
    if (std::isinf(d.v0)) {
        if (!rep.notes.empty()) rep.notes += "; ";
        rep.notes += "mu_c = 0: v0 diverges, no upper bound on the allowed band";
    }

    // Allowed bands: sample k^2 between consecutive critical speeds and
    // confirm against the analytic signs of numerator and denominator.
    std::vector<double> crit = {0.0, d.v3, d.v4};
    if (!std::isinf(d.v0)) crit.push_back(d.v0);
    std::sort(crit.begin(), crit.end());
    crit.erase(std::unique(crit.begin(), crit.end(),
                           [](double a, double b) { return std::abs(a - b) < 1e-14; }),
               crit.end());

    const double v_top = crit.back() + std::max(1.0, crit.back());
    for (std::size_t i = 0; i < crit.size(); ++i) {
        const double lo = crit[i];
        const double hi = (i + 1 < crit.size()) ? crit[i + 1] : kInf;
        const double mid = std::isinf(hi) ? 0.5 * (lo + v_top) : 0.5 * (lo + hi);
        if (!(mid > lo)) continue;

        const double num = k_numerator(p, d, mid * mid);
        const double q = quartic_q(d, mid * mid);
        const bool analytic_allowed = (num / q) > 0.0 || num == 0.0;
        const KResult sampled = k_of_v(p, mid);
        const bool sampled_allowed = sampled.status == KStatus::Defined;
        if (analytic_allowed != sampled_allowed) {
            if (!rep.notes.empty()) rep.notes += "; ";
            rep.notes += "sign sampling disagreed with analytic sign near v = " +
                         std::to_string(mid);
        }
        if (!sampled_allowed) continue;

        VelocityInterval band;
        band.lo = lo;
        band.hi = hi;
        // An endpoint belongs to the band iff k is defined there (k(v0) = 0);
        // poles at v3, v4 are always open.
        band.lo_closed = (k_of_v(p, lo).status == KStatus::Defined);
        band.hi_closed = !std::isinf(hi) && (k_of_v(p, hi).status == KStatus::Defined);
        rep.allowed_intervals.push_back(band);
    }
    return rep;
}

ApproxRoots approx_roots(const MaterialParams& p) {
    const DerivedWaveQuantities d = derive(p);
    if (std::abs(d.v_elas - d.v_rot) < 1e-12)
        throw std::domain_error("approx_roots: v_elas = v_rot, expansion invalid");

    const double hi = std::max(d.v_elas, d.v_rot);
    const double lo = std::min(d.v_elas, d.v_rot);
    const double gap = hi * hi - lo * lo;
    const double chi4 = d.v_chi_sq * d.v_chi_sq;
    const double ratio = p.rho_rot / p.rho;

    ApproxRoots r;
    r.v4_approx = hi * (1.0 + 2.0 * ratio * chi4 / (gap * hi * hi));
    r.v3_approx = lo * (1.0 - 2.0 * ratio * chi4 / (gap * lo * lo));
    r.validity = ratio * chi4 / (gap * gap);
    return r;
}

RescaleResult rescale_roundtrip(const MaterialParams& p, double v, double z, double t) {
    const DerivedWaveQuantities d = derive(p);
    RescaleResult r;

    const double pole_gap = v * v - d.m22;
    if (pole_gap == 0.0) {
        r.reason = "v = v_elas: rescaling factor has a pole";
        return r;
    }
    const double c_sq = d.m11 + d.m12 * d.m21 / pole_gap;
    if (!(c_sq > 0.0)) {
        r.reason = "rescaling factor c^2 <= 0";
        return r;
    }
    const double c = std::sqrt(c_sq);
    const double vhat = v / c;
    const double one_minus = 1.0 - vhat * vhat;
    if (!(one_minus > 0.0)) {
        r.reason = "1 - vhat^2 <= 0";
        return r;
    }
    const BResult b = b_of_v(p, v);
    const double mb = d.m_sq + b.value;
    if (!(mb > 0.0)) {
        r.reason = "m^2 + b <= 0: no traveling kink exponent";
        return r;
    }
    const KResult k = k_of_v(p, v);
    if (k.status != KStatus::Defined) {
        r.reason = "k undefined at this v";
        return r;
    }

    const double zhat = z / c;
    const double theta_rescaled = std::sqrt(mb / one_minus) * (zhat - vhat * t);
    const double theta_direct = k.k * (z - v * t);
    r.defined = true;
    r.residual = std::abs(theta_direct - theta_rescaled);
    return r;
}

AmplitudeCoefficients amplitude_coefficients(const MaterialParams& p, double v) {
    const DerivedWaveQuantities d = derive(p);
    const double gap = v * v - d.m22;
    if (gap == 0.0)
        throw std::domain_error("amplitude_coefficients: pole at v = v_elas");
    const KResult k = k_of_v(p, v);
    if (k.status != KStatus::Defined || k.k == 0.0)
        throw std::domain_error("amplitude_coefficients: k undefined or zero at this v");

    AmplitudeCoefficients c;
    c.c1 = 16.0 * p.rho_rot * d.v_chi_sq / (p.rho * gap);
    c.c2 = 4.0 * p.lambda / (p.rho * k.k * gap);
    return c;
}

}  // namespace cosserat
