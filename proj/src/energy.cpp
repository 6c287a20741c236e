#include "cosserat/energy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cosserat {

void AnsatzFields::validate() const {
    if (phi.size() != psi.size())
        throw std::invalid_argument("fields: phi and psi must have equal length");
    validate_grid(phi.size(), h);
    for (double v : phi)
        if (!std::isfinite(v)) throw std::invalid_argument("fields: non-finite phi sample");
    for (double v : psi)
        if (!std::isfinite(v)) throw std::invalid_argument("fields: non-finite psi sample");
    if (!phi_t.empty() && phi_t.size() != phi.size())
        throw std::invalid_argument("fields: phi_t length mismatch");
    if (!psi_t.empty() && psi_t.size() != psi.size())
        throw std::invalid_argument("fields: psi_t length mismatch");
}

bool AnsatzFields::has_time_derivatives() const {
    return phi_t.size() == phi.size() && psi_t.size() == psi.size() && !phi.empty();
}

namespace {

struct PointwiseState {
    Matrix3 rbar;       // rotation_z(phi)
    Matrix3 f;          // 1 + diag(0,0,psi')
    Matrix3 curl_rbar;  // discrete matrix curl sample
};

std::vector<PointwiseState> assemble_state(const AnsatzFields& fields) {
    fields.validate();
    const std::size_t n = fields.phi.size();

    MatrixField1D rbar_field;
    rbar_field.h = fields.h;
    rbar_field.samples.reserve(n);
    for (double phi : fields.phi) rbar_field.samples.push_back(rotation_z(phi));
    const MatrixField1D curl = matrix_curl(rbar_field);

    const std::vector<double> psi_z = d_dz(fields.psi, fields.h);

    std::vector<PointwiseState> state(n);
    for (std::size_t i = 0; i < n; ++i) {
        state[i].rbar = rbar_field.samples[i];
        state[i].f = Matrix3::diag(1.0, 1.0, 1.0 + psi_z[i]);
        state[i].curl_rbar = curl.samples[i];
    }
    return state;
}

EnergyValue integrate_densities(const std::vector<double>& direct,
                                const std::vector<double>& expanded, double h) {
    EnergyValue ev;
    ev.value = trapezoid(direct, h);
    double scale = 1.0;
    for (std::size_t i = 0; i < direct.size(); ++i) {
        ev.max_pointwise_mismatch =
            std::max(ev.max_pointwise_mismatch, std::abs(direct[i] - expanded[i]));
        scale = std::max(scale, std::abs(direct[i]));
    }
    // The two density routes are algebraically identical; anything beyond
    // roundoff is an implementation defect, not a discretization effect.
    if (ev.max_pointwise_mismatch > 1e-10 * scale)
        throw std::logic_error("energy: defining and expanded density forms disagree");
    return ev;
}

}  // namespace

EnergyValue energy_elastic(const MaterialParams& params, const AnsatzFields& fields) {
    const auto state = assemble_state(fields);
    const Matrix3 one = Matrix3::identity();
    std::vector<double> direct(state.size()), expanded(state.size());
    for (std::size_t i = 0; i < state.size(); ++i) {
        const Matrix3 rtf = state[i].rbar.transpose() * state[i].f;
        const Matrix3 strain = sym(rtf) - one;
        direct[i] = params.mu * norm_sq(strain) +
                    0.5 * params.lambda * strain.trace() * strain.trace();
        expanded[i] = 3.0 * params.mu + 4.5 * params.lambda +
                      0.5 * params.mu * (rtf * rtf).trace() +
                      0.5 * params.mu * (state[i].f * state[i].f.transpose()).trace() -
                      (2.0 * params.mu + 3.0 * params.lambda) * rtf.trace() +
                      0.5 * params.lambda * rtf.trace() * rtf.trace();
    }
    return integrate_densities(direct, expanded, fields.h);
}

EnergyValue energy_curvature(const MaterialParams& params, const AnsatzFields& fields) {
    const auto state = assemble_state(fields);
    std::vector<double> direct(state.size()), expanded(state.size());
    for (std::size_t i = 0; i < state.size(); ++i) {
        const Matrix3& c = state[i].curl_rbar;
        const Matrix3 q = state[i].rbar.transpose() * c;
        direct[i] = params.kappa1 * norm_sq(dev(sym(q))) + params.kappa2 * norm_sq(skew(q)) +
                    params.kappa3 * q.trace() * q.trace();
        expanded[i] = 0.5 * (params.kappa1 - params.kappa2) * (q * q).trace() +
                      0.5 * (params.kappa1 + params.kappa2) * (c.transpose() * c).trace() -
                      (params.kappa1 / 3.0 - params.kappa3) * q.trace() * q.trace();
    }
    return integrate_densities(direct, expanded, fields.h);
}

EnergyValue energy_interaction(const MaterialParams& params, const AnsatzFields& fields) {
    const auto state = assemble_state(fields);
    const Matrix3 one = Matrix3::identity();
    std::vector<double> direct(state.size()), expanded(state.size());
    for (std::size_t i = 0; i < state.size(); ++i) {
        const Matrix3& c = state[i].curl_rbar;
        const Matrix3 q = state[i].rbar.transpose() * c;
        const Matrix3 rtf = state[i].rbar.transpose() * state[i].f;
        direct[i] = params.chi1 * q.trace() * rtf.trace() +
                    params.chi3 * frobenius(dev(sym(q)), dev(sym(rtf - one)));
        expanded[i] = (params.chi1 - params.chi3 / 3.0) * q.trace() * rtf.trace() +
                      0.5 * params.chi3 *
                          ((c.transpose() * state[i].f).trace() + (q * rtf).trace());
    }
    return integrate_densities(direct, expanded, fields.h);
}

EnergyValue energy_coupling(const MaterialParams& params, const AnsatzFields& fields) {
    const auto state = assemble_state(fields);
    const Matrix3 one = Matrix3::identity();
    std::vector<double> direct(state.size()), expanded(state.size());
    for (std::size_t i = 0; i < state.size(); ++i) {
        if (!(state[i].f(2, 2) > 0.0))
            throw std::domain_error(
                "energy_coupling: 1 + dz psi <= 0, polar factor leaves the rotation branch");
        const Matrix3 r = polar_decompose(state[i].f).rotation;
        const Matrix3 misalign = state[i].rbar.transpose() * r - one;
        direct[i] = params.mu_c * norm_sq(misalign);
        expanded[i] =
            2.0 * params.mu_c * (3.0 - (state[i].rbar.transpose() * r).trace());
    }
    return integrate_densities(direct, expanded, fields.h);
}

KineticEnergies kinetic_energies(const MaterialParams& params, const AnsatzFields& fields) {
    fields.validate();
    if (!fields.has_time_derivatives())
        throw std::invalid_argument("kinetic_energies: phi_t/psi_t arrays required");
    std::vector<double> elastic_density(fields.phi.size()), rot_density(fields.phi.size());
    for (std::size_t i = 0; i < fields.phi.size(); ++i) {
        elastic_density[i] = 0.5 * params.rho * fields.psi_t[i] * fields.psi_t[i];
        // ||dR/dt||^2 = 2 phi_t^2 for rotations about a fixed axis.
        rot_density[i] = 2.0 * params.rho_rot * fields.phi_t[i] * fields.phi_t[i];
    }
    KineticEnergies ke;
    ke.elastic = trapezoid(elastic_density, fields.h);
    ke.rotational = trapezoid(rot_density, fields.h);
    return ke;
}

double total_potential(const MaterialParams& params, const AnsatzFields& fields) {
    return energy_elastic(params, fields).value + energy_curvature(params, fields).value +
           energy_interaction(params, fields).value + energy_coupling(params, fields).value;
}

StaticFieldEquations static_field_equations(const MaterialParams& params,
                                            const AnsatzFields& fields) {
    fields.validate();
    const std::size_t n = fields.phi.size();
    const std::vector<double> phi_z = d_dz(fields.phi, fields.h);
    const std::vector<double> phi_zz = d2_dz2(fields.phi, fields.h);
    const std::vector<double> psi_z = d_dz(fields.psi, fields.h);
    const std::vector<double> psi_zz = d2_dz2(fields.psi, fields.h);

    StaticFieldEquations eq;
    eq.phi_equation.resize(n);
    eq.psi_equation.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double s = std::sin(fields.phi[i]);
        const double s2 = std::sin(2.0 * fields.phi[i]);
        const double rot =
            -(params.lambda + params.mu + params.mu_c) * s +
            0.5 * (params.lambda + params.mu) * s2 + 0.5 * params.lambda * s * psi_z[i] +
            (params.kappa1 / 3.0 + 2.0 * params.kappa3) * phi_zz[i] +
            (0.5 * params.chi1 - params.chi3 / 6.0) * psi_zz[i];
        eq.phi_equation[i] = -4.0 * rot;
        eq.psi_equation[i] = -params.lambda * (psi_zz[i] - 2.0 * phi_z[i] * s) -
                             2.0 * params.mu * psi_zz[i] +
                             (2.0 / 3.0) * (params.chi3 - 3.0 * params.chi1) * phi_zz[i];
    }
    return eq;
}

namespace {

std::vector<double> gaussian_bump(std::size_t n, double h, double center_fraction,
                                  double width_fraction) {
    const double span = double(n - 1) * h;
    const double zc = center_fraction * span;
    const double w = width_fraction * span;
    std::vector<double> bump(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double s = (double(i) * h - zc) / w;
        bump[i] = std::exp(-s * s);
    }
    return bump;
}

// kappa2-linear coefficient of the curvature energy.
double kappa2_energy_slope(const AnsatzFields& fields) {
    const std::size_t n = fields.phi.size();
    MatrixField1D rbar_field;
    rbar_field.h = fields.h;
    rbar_field.samples.reserve(n);
    for (double phi : fields.phi) rbar_field.samples.push_back(rotation_z(phi));
    const MatrixField1D curl = matrix_curl(rbar_field);
    std::vector<double> density(n);
    for (std::size_t i = 0; i < n; ++i)
        density[i] = norm_sq(skew(rbar_field.samples[i].transpose() * curl.samples[i]));
    return trapezoid(density, fields.h);
}

}  // namespace

VariationalReport variational_check(const MaterialParams& params, const AnsatzFields& fields,
                                    double h_fd) {
    fields.validate();
    if (!(h_fd >= 1e-8 && h_fd <= 1e-4))
        throw std::invalid_argument("variational_check: h_fd must lie in [1e-8, 1e-4]");

    const std::size_t n = fields.phi.size();
    const StaticFieldEquations eq = static_field_equations(params, fields);

    const double centers[] = {0.38, 0.50, 0.63};
    const double width = 0.06;

    VariationalReport report;
    double denom_phi = 0.0, denom_psi = 0.0;
    double kappa2_slope_variation = 0.0;

    for (const char* direction : {"phi", "psi"}) {
        const bool is_phi = std::string(direction) == "phi";
        for (double cf : centers) {
            const std::vector<double> bump = gaussian_bump(n, fields.h, cf, width);

            AnsatzFields plus = fields, minus = fields;
            std::vector<double>& target_plus = is_phi ? plus.phi : plus.psi;
            std::vector<double>& target_minus = is_phi ? minus.phi : minus.psi;
            for (std::size_t i = 0; i < n; ++i) {
                target_plus[i] += h_fd * bump[i];
                target_minus[i] -= h_fd * bump[i];
            }

            VariationalProbe probe;
            probe.direction = direction;
            probe.center_fraction = cf;
            probe.fd_variation =
                (total_potential(params, plus) - total_potential(params, minus)) / (2.0 * h_fd);

            std::vector<double> weighted(n);
            const std::vector<double>& density = is_phi ? eq.phi_equation : eq.psi_equation;
            for (std::size_t i = 0; i < n; ++i) weighted[i] = density[i] * bump[i];
            probe.analytic_variation = trapezoid(weighted, fields.h);

            if (is_phi) {
                denom_phi = std::max(denom_phi, std::abs(probe.analytic_variation));
                kappa2_slope_variation = std::max(
                    kappa2_slope_variation,
                    std::abs(kappa2_energy_slope(plus) - kappa2_energy_slope(minus)) /
                        (2.0 * h_fd));
            } else {
                denom_psi = std::max(denom_psi, std::abs(probe.analytic_variation));
            }
            report.probes.push_back(probe);
        }
    }

    for (const VariationalProbe& p : report.probes) {
        const double denom = std::max(p.direction == "phi" ? denom_phi : denom_psi, 1e-300);
        const double rel = std::abs(p.fd_variation - p.analytic_variation) / denom;
        if (p.direction == "phi")
            report.max_rel_discrepancy_phi = std::max(report.max_rel_discrepancy_phi, rel);
        else
            report.max_rel_discrepancy_psi = std::max(report.max_rel_discrepancy_psi, rel);
    }
    report.max_rel_discrepancy =
        std::max(report.max_rel_discrepancy_phi, report.max_rel_discrepancy_psi);
    report.kappa2_sensitivity = kappa2_slope_variation / std::max(denom_phi, 1e-300);
    report.diverged = report.max_rel_discrepancy > 1e-3;
    return report;
}

}  // namespace cosserat
