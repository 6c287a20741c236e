#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cosserat/material.hpp"

namespace cosserat {

/// Discretized (phi, psi, phi_t, psi_t) on a uniform grid at one instant.
struct FieldState {
    double z0 = 0.0;
    double h = 0.0;
    double t = 0.0;
    std::vector<double> phi, psi, phi_t, psi_t;

    std::size_t n() const { return phi.size(); }
    double z(std::size_t i) const { return z0 + h * double(i); }
    void validate() const;
};

enum class BoundaryCondition {
    ClampedAsymptotic,  ///< end values pinned to their initial asymptotes
    Periodic
};

enum class SystemKind {
    Coupled,  ///< full two-field system
    Dsg       ///< scalar double sine-Gordon in rescaled coordinates
};

enum class TimeScheme { Leapfrog, Rk4 };

struct SimConfig {
    double t_end = 10.0;
    double dt = 0.0;       ///< used when dt_auto is false
    bool dt_auto = true;   ///< dt = 0.4 h / v4 (CFL on the stiffest characteristic)
    BoundaryCondition boundary = BoundaryCondition::ClampedAsymptotic;
    int record_every = 100;
    SystemKind system = SystemKind::Coupled;
    TimeScheme scheme = TimeScheme::Leapfrog;
    double dsg_m_sq = 1.0;  ///< used by SystemKind::Dsg
    double dsg_b = 0.0;
};

class instability_error : public std::runtime_error {
public:
    instability_error(long step_index, double t)
        : std::runtime_error("numerical instability: non-finite state after step " +
                             std::to_string(step_index) + " (t = " + std::to_string(t) + ")"),
          step_index(step_index) {}
    long step_index;
};

/// Accelerations of the coupled system,
///   phi_tt = M11 phi_zz + M12 psi_zz + (lambda sin phi)/(2 rho_rot) psi_z
///            - m^2 sin phi + (lambda+mu)/(2 rho_rot) sin 2 phi
///   psi_tt = M21 phi_zz + M22 psi_zz - (2 lambda sin phi)/rho phi_z .
void rhs_coupled(const MaterialParams& params, const FieldState& state,
                 BoundaryCondition bc, std::vector<double>& phi_tt,
                 std::vector<double>& psi_tt);

/// phi_tt = phi_zz - m^2 sin phi - (b/2) sin 2 phi.
void rhs_dsg(double m_sq, double b, const FieldState& state, BoundaryCondition bc,
             std::vector<double>& phi_tt);

/// CFL-limited step for the given spacing.
double auto_dt(const MaterialParams& params, const SimConfig& config, double h);

/// One explicit step (velocity Verlet by default, RK4 selectable). dt may be
/// negative (time reversal). Throws instability_error on non-finite output.
void step(FieldState& state, const SimConfig& config, const MaterialParams& params, double dt);

struct PropagationMetrics {
    std::optional<double> l2_shape_error;  ///< vs analytic reference, when provided
    double center_position = 0.0;          ///< final phi = pi crossing
    std::optional<double> measured_speed;  ///< linear fit of center vs t
    double energy_drift = 0.0;             ///< max |E(t)-E(0)| / |E(0)|
};

struct RunResult {
    std::vector<FieldState> snapshots;
    PropagationMetrics metrics;
    long steps_taken = 0;
    double dt_used = 0.0;
};

/// Reference profile phi(z, t) for shape-error measurement.
using ReferenceProfile = std::function<double(double z, double t)>;

/// Integrates to t_end recording snapshots every record_every steps (plus the
/// initial and final states), tracking the phi = pi crossing and the discrete
/// total energy. Deterministic: identical inputs give bit-identical output.
RunResult run(const FieldState& initial, const SimConfig& config, const MaterialParams& params,
              const ReferenceProfile& reference = nullptr);

/// Discrete total energy of the configured system (used for drift metrics).
double total_energy(const FieldState& state, const SimConfig& config,
                    const MaterialParams& params);

/// phi = pi crossing by linear interpolation; nullopt when no crossing exists.
std::optional<double> kink_center(const FieldState& state);

}  // namespace cosserat
