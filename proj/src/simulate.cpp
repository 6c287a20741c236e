#include "cosserat/simulate.hpp"

#include <algorithm>
#include <cmath>

#include "cosserat/dispersion.hpp"
#include "cosserat/energy.hpp"
#include "cosserat/field1d.hpp"

namespace cosserat {

void FieldState::validate() const {
    if (phi.size() < 16) throw std::invalid_argument("state: need n >= 16");
    if (phi.size() != psi.size() || phi.size() != phi_t.size() || phi.size() != psi_t.size())
        throw std::invalid_argument("state: array length mismatch");
    if (!(h > 0.0)) throw std::invalid_argument("state: h must be > 0");
    for (const auto* arr : {&phi, &psi, &phi_t, &psi_t})
        for (double v : *arr)
            if (!std::isfinite(v)) throw std::invalid_argument("state: non-finite entry");
}

namespace {

// Second derivative with the boundary treatment of the time stepper:
// clamped ends contribute zero acceleration, periodic wraps.
void second_derivative(const std::vector<double>& f, double h, BoundaryCondition bc,
                       std::vector<double>& out) {
    const std::size_t n = f.size();
    out.resize(n);
    const double invh2 = 1.0 / (h * h);
    for (std::size_t i = 1; i + 1 < n; ++i)
        out[i] = (f[i + 1] - 2.0 * f[i] + f[i - 1]) * invh2;
    if (bc == BoundaryCondition::Periodic) {
        out[0] = (f[1] - 2.0 * f[0] + f[n - 1]) * invh2;
        out[n - 1] = (f[0] - 2.0 * f[n - 1] + f[n - 2]) * invh2;
    } else {
        out[0] = 0.0;
        out[n - 1] = 0.0;
    }
}

void first_derivative(const std::vector<double>& f, double h, BoundaryCondition bc,
                      std::vector<double>& out) {
    const std::size_t n = f.size();
    out.resize(n);
    const double inv2h = 1.0 / (2.0 * h);
    for (std::size_t i = 1; i + 1 < n; ++i) out[i] = (f[i + 1] - f[i - 1]) * inv2h;
    if (bc == BoundaryCondition::Periodic) {
        out[0] = (f[1] - f[n - 1]) * inv2h;
        out[n - 1] = (f[0] - f[n - 2]) * inv2h;
    } else {
        out[0] = 0.0;
        out[n - 1] = 0.0;
    }
}

void accelerations(const SimConfig& config, const MaterialParams& params,
                   const FieldState& state, std::vector<double>& a_phi,
                   std::vector<double>& a_psi) {
    if (config.system == SystemKind::Coupled) {
        rhs_coupled(params, state, config.boundary, a_phi, a_psi);
    } else {
        rhs_dsg(config.dsg_m_sq, config.dsg_b, state, config.boundary, a_phi);
        a_psi.assign(state.n(), 0.0);
    }
}

}  // namespace

void rhs_coupled(const MaterialParams& params, const FieldState& state, BoundaryCondition bc,
                 std::vector<double>& phi_tt, std::vector<double>& psi_tt) {
    const std::size_t n = state.n();
    static thread_local std::vector<double> phi_zz, psi_zz, phi_z, psi_z;
    second_derivative(state.phi, state.h, bc, phi_zz);
    second_derivative(state.psi, state.h, bc, psi_zz);
    first_derivative(state.phi, state.h, bc, phi_z);
    first_derivative(state.psi, state.h, bc, psi_z);

    const DerivedWaveQuantities d = derive(params);
    const double m_sq = d.m_sq;
    const double lam_2rot = params.lambda / (2.0 * params.rho_rot);
    const double lammu_2rot = (params.lambda + params.mu) / (2.0 * params.rho_rot);
    const double twolam_rho = 2.0 * params.lambda / params.rho;

    phi_tt.resize(n);
    psi_tt.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double s = std::sin(state.phi[i]);
        const double s2 = std::sin(2.0 * state.phi[i]);
        phi_tt[i] = d.m11 * phi_zz[i] + d.m12 * psi_zz[i] + lam_2rot * s * psi_z[i] -
                    m_sq * s + lammu_2rot * s2;
        psi_tt[i] = d.m21 * phi_zz[i] + d.m22 * psi_zz[i] - twolam_rho * s * phi_z[i];
    }
    if (bc == BoundaryCondition::ClampedAsymptotic) {
        phi_tt[0] = phi_tt[n - 1] = 0.0;
        psi_tt[0] = psi_tt[n - 1] = 0.0;
    }
}

void rhs_dsg(double m_sq, double b, const FieldState& state, BoundaryCondition bc,
             std::vector<double>& phi_tt) {
    const std::size_t n = state.n();
    static thread_local std::vector<double> phi_zz;
    second_derivative(state.phi, state.h, bc, phi_zz);
    phi_tt.resize(n);
    for (std::size_t i = 0; i < n; ++i)
        phi_tt[i] = phi_zz[i] - m_sq * std::sin(state.phi[i]) -
                    0.5 * b * std::sin(2.0 * state.phi[i]);
    if (bc == BoundaryCondition::ClampedAsymptotic) phi_tt[0] = phi_tt[n - 1] = 0.0;
}

double auto_dt(const MaterialParams& params, const SimConfig& config, double h) {
    double speed_sq = 1.0;
    if (config.system == SystemKind::Coupled) speed_sq = derive(params).v4_sq;
    return 0.4 * h / std::sqrt(speed_sq);
}

namespace {

void check_finite(const FieldState& state, long step_index) {
    for (const auto* arr : {&state.phi, &state.psi, &state.phi_t, &state.psi_t})
        for (double v : *arr)
            if (!std::isfinite(v)) throw instability_error(step_index, state.t);
}

void leapfrog_step(FieldState& s, const SimConfig& config, const MaterialParams& params,
                   double dt) {
    std::vector<double> a_phi, a_psi;
    accelerations(config, params, s, a_phi, a_psi);
    const std::size_t n = s.n();
    for (std::size_t i = 0; i < n; ++i) {
        s.phi_t[i] += 0.5 * dt * a_phi[i];
        s.psi_t[i] += 0.5 * dt * a_psi[i];
        s.phi[i] += dt * s.phi_t[i];
        s.psi[i] += dt * s.psi_t[i];
    }
    accelerations(config, params, s, a_phi, a_psi);
    for (std::size_t i = 0; i < n; ++i) {
        s.phi_t[i] += 0.5 * dt * a_phi[i];
        s.psi_t[i] += 0.5 * dt * a_psi[i];
    }
    s.t += dt;
}

void rk4_step(FieldState& s, const SimConfig& config, const MaterialParams& params, double dt) {
    const std::size_t n = s.n();
    const FieldState s0 = s;

    auto eval = [&](const FieldState& at, std::vector<double>& a_phi,
                    std::vector<double>& a_psi) {
        accelerations(config, params, at, a_phi, a_psi);
    };

    std::vector<double> a1p, a1q, a2p, a2q, a3p, a3q, a4p, a4q;
    FieldState tmp = s0;

    eval(s0, a1p, a1q);

    for (std::size_t i = 0; i < n; ++i) {
        tmp.phi[i] = s0.phi[i] + 0.5 * dt * s0.phi_t[i];
        tmp.psi[i] = s0.psi[i] + 0.5 * dt * s0.psi_t[i];
        tmp.phi_t[i] = s0.phi_t[i] + 0.5 * dt * a1p[i];
        tmp.psi_t[i] = s0.psi_t[i] + 0.5 * dt * a1q[i];
    }
    eval(tmp, a2p, a2q);
    const FieldState k2 = tmp;

    for (std::size_t i = 0; i < n; ++i) {
        tmp.phi[i] = s0.phi[i] + 0.5 * dt * k2.phi_t[i];
        tmp.psi[i] = s0.psi[i] + 0.5 * dt * k2.psi_t[i];
        tmp.phi_t[i] = s0.phi_t[i] + 0.5 * dt * a2p[i];
        tmp.psi_t[i] = s0.psi_t[i] + 0.5 * dt * a2q[i];
    }
    eval(tmp, a3p, a3q);
    const FieldState k3 = tmp;

    for (std::size_t i = 0; i < n; ++i) {
        tmp.phi[i] = s0.phi[i] + dt * k3.phi_t[i];
        tmp.psi[i] = s0.psi[i] + dt * k3.psi_t[i];
        tmp.phi_t[i] = s0.phi_t[i] + dt * a3p[i];
        tmp.psi_t[i] = s0.psi_t[i] + dt * a3q[i];
    }
    eval(tmp, a4p, a4q);
    const FieldState k4 = tmp;

    for (std::size_t i = 0; i < n; ++i) {
        s.phi[i] = s0.phi[i] + dt / 6.0 *
                                   (s0.phi_t[i] + 2.0 * k2.phi_t[i] + 2.0 * k3.phi_t[i] +
                                    k4.phi_t[i]);
        s.psi[i] = s0.psi[i] + dt / 6.0 *
                                   (s0.psi_t[i] + 2.0 * k2.psi_t[i] + 2.0 * k3.psi_t[i] +
                                    k4.psi_t[i]);
        s.phi_t[i] = s0.phi_t[i] + dt / 6.0 * (a1p[i] + 2.0 * a2p[i] + 2.0 * a3p[i] + a4p[i]);
        s.psi_t[i] = s0.psi_t[i] + dt / 6.0 * (a1q[i] + 2.0 * a2q[i] + 2.0 * a3q[i] + a4q[i]);
    }
    s.t += dt;
}

}  // namespace

void step(FieldState& state, const SimConfig& config, const MaterialParams& params, double dt) {
    if (config.scheme == TimeScheme::Leapfrog)
        leapfrog_step(state, config, params, dt);
    else
        rk4_step(state, config, params, dt);
}

double total_energy(const FieldState& state, const SimConfig& config,
                    const MaterialParams& params) {
    if (config.system == SystemKind::Coupled) {
        AnsatzFields fields;
        fields.phi = state.phi;
        fields.psi = state.psi;
        fields.h = state.h;
        fields.phi_t = state.phi_t;
        fields.psi_t = state.psi_t;
        const KineticEnergies ke = kinetic_energies(params, fields);
        return ke.elastic + ke.rotational + total_potential(params, fields);
    }
    // Double sine-Gordon Hamiltonian density:
    // phi_t^2/2 + phi_z^2/2 + m^2 (1 - cos phi) + (b/4)(1 - cos 2 phi).
    const std::size_t n = state.n();
    const std::vector<double> phi_z = d_dz(state.phi, state.h);
    std::vector<double> density(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double c = std::cos(state.phi[i]);
        const double c2 = std::cos(2.0 * state.phi[i]);
        density[i] = 0.5 * state.phi_t[i] * state.phi_t[i] + 0.5 * phi_z[i] * phi_z[i] +
                     config.dsg_m_sq * (1.0 - c) + 0.25 * config.dsg_b * (1.0 - c2);
    }
    return trapezoid(density, state.h);
}

std::optional<double> kink_center(const FieldState& state) {
    const double target = M_PI;
    for (std::size_t i = 0; i + 1 < state.n(); ++i) {
        const double a = state.phi[i] - target;
        const double b = state.phi[i + 1] - target;
        if (a == 0.0) return state.z(i);
        if (a * b < 0.0) {
            const double frac = a / (a - b);
            return state.z(i) + frac * state.h;
        }
    }
    return std::nullopt;
}

RunResult run(const FieldState& initial, const SimConfig& config, const MaterialParams& params,
              const ReferenceProfile& reference) {
    initial.validate();
    if (!(config.t_end >= 0.0)) throw std::invalid_argument("run: t_end must be >= 0");

    RunResult result;
    FieldState state = initial;

    double dt = config.dt_auto ? auto_dt(params, config, state.h) : config.dt;
    long n_steps = 0;
    if (config.t_end > 0.0) {
        if (!(dt > 0.0)) throw std::invalid_argument("run: dt must be > 0");
        n_steps = long(std::ceil(config.t_end / dt - 1e-12));
        dt = config.t_end / double(n_steps);
    }
    result.dt_used = dt;

    std::vector<double> energies;
    std::vector<std::pair<double, double>> centers;

    auto record = [&](const FieldState& s, long step_index) {
        result.snapshots.push_back(s);
        try {
            energies.push_back(total_energy(s, config, params));
        } catch (const std::domain_error&) {
            // A blow-up can drive the state out of the admissible branch
            // (1 + dz psi <= 0) while still finite: same diagnostic.
            throw instability_error(step_index, s.t);
        }
        if (const auto c = kink_center(s)) centers.emplace_back(s.t, *c);
    };

    record(state, 0);
    for (long step_index = 1; step_index <= n_steps; ++step_index) {
        step(state, config, params, dt);
        check_finite(state, step_index);
        if (step_index % config.record_every == 0 || step_index == n_steps)
            record(state, step_index);
    }

    PropagationMetrics& m = result.metrics;
    if (const auto c = kink_center(state)) m.center_position = *c;

    if (centers.size() >= 2) {
        // Least-squares slope of center(t).
        double st = 0.0, sc = 0.0, stt = 0.0, stc = 0.0;
        for (const auto& [t, c] : centers) {
            st += t;
            sc += c;
            stt += t * t;
            stc += t * c;
        }
        const double n = double(centers.size());
        const double denom = n * stt - st * st;
        if (denom > 0.0) m.measured_speed = (n * stc - st * sc) / denom;
    }

    if (!energies.empty() && energies.front() != 0.0) {
        double drift = 0.0;
        for (double e : energies) drift = std::max(drift, std::abs(e - energies.front()));
        m.energy_drift = drift / std::abs(energies.front());
    }

    if (reference) {
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < state.n(); ++i) {
            const double ref = reference(state.z(i), state.t);
            const double diff = state.phi[i] - ref;
            num += diff * diff;
            den += ref * ref;
        }
        if (den > 0.0) m.l2_shape_error = std::sqrt(num / den);
    }

    result.steps_taken = n_steps;
    return result;
}

}  // namespace cosserat
