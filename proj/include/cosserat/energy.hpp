#pragma once

#include <string>
#include <vector>

#include "cosserat/field1d.hpp"
#include "cosserat/material.hpp"

namespace cosserat {

/// Discretized one-axis fields phi(z), psi(z) on a uniform grid; time
/// derivative arrays are optional and only required by kinetic_energies.
struct AnsatzFields {
    std::vector<double> phi;
    std::vector<double> psi;
    double h = 0.0;
    std::vector<double> phi_t;
    std::vector<double> psi_t;

    void validate() const;
    bool has_time_derivatives() const;
};

/// Energy integral plus the maximum pointwise mismatch between the defining
/// expression and its expanded trace form. The two are algebraically
/// identical, so the mismatch is a machine-precision self-check, not a
/// discretization error.
struct EnergyValue {
    double value = 0.0;
    double max_pointwise_mismatch = 0.0;
};

/// mu ||sym(R^T F) - 1||^2 + (lambda/2) [tr(sym(R^T F) - 1)]^2 with
/// R = rotation_z(phi), F = 1 + diag(0, 0, dz psi), trapezoidal in z.
EnergyValue energy_elastic(const MaterialParams& params, const AnsatzFields& fields);

/// kappa1 ||dev sym Q||^2 + kappa2 ||skew Q||^2 + kappa3 [tr Q]^2 with
/// Q = R^T Curl R (discrete matrix curl).
EnergyValue energy_curvature(const MaterialParams& params, const AnsatzFields& fields);

/// chi1 tr(Q) tr(R^T F) + chi3 <dev sym Q, dev sym(R^T F - 1)>.
EnergyValue energy_interaction(const MaterialParams& params, const AnsatzFields& fields);

/// mu_c ||R^T polar(F) - 1||^2; requires 1 + dz psi > 0 pointwise so that
/// the polar factor stays on the rotation branch (throws std::domain_error).
EnergyValue energy_coupling(const MaterialParams& params, const AnsatzFields& fields);

struct KineticEnergies {
    double elastic = 0.0;     ///< (1/2) rho integral psi_t^2
    double rotational = 0.0;  ///< rho_rot integral ||dR/dt||^2 = 2 rho_rot integral phi_t^2
};
KineticEnergies kinetic_energies(const MaterialParams& params, const AnsatzFields& fields);

/// Sum of the four potential energies.
double total_potential(const MaterialParams& params, const AnsatzFields& fields);

/// Static Euler-Lagrange densities of the two coupled field equations,
/// evaluated from the discrete fields with the module's stencils. The phi
/// equation carries the variational weight -4 (energy change per unit
/// delta phi); the psi equation has weight +1.
struct StaticFieldEquations {
    std::vector<double> phi_equation;  ///< -4 x static rotational equation density
    std::vector<double> psi_equation;  ///< static displacement equation density
};
StaticFieldEquations static_field_equations(const MaterialParams& params,
                                            const AnsatzFields& fields);

struct VariationalProbe {
    std::string direction;  ///< "phi" or "psi"
    double center_fraction = 0.0;
    double fd_variation = 0.0;
    double analytic_variation = 0.0;
};

struct VariationalReport {
    std::vector<VariationalProbe> probes;
    double max_rel_discrepancy_phi = 0.0;
    double max_rel_discrepancy_psi = 0.0;
    double max_rel_discrepancy = 0.0;
    /// Change of the reported variations per unit change of kappa2,
    /// relative to the phi variation scale. Computed directly from the
    /// kappa2-linear part of the energy, so no large-term cancellation.
    double kappa2_sensitivity = 0.0;
    bool diverged = false;  ///< discrepancy blew past 10x the expected order
};

/// Perturbs phi and psi by localized Gaussian bumps, compares the central
/// finite-difference first variation of the total potential against the
/// analytic static field equations. h_fd must lie in [1e-8, 1e-4].
VariationalReport variational_check(const MaterialParams& params, const AnsatzFields& fields,
                                    double h_fd);

}  // namespace cosserat
