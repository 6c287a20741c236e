#pragma once

#include "cosserat/simulate.hpp"
#include "cosserat/soliton.hpp"

namespace cosserat {

/// Samples the analytic soliton (phi from the exact profile, psi from the
/// displacement quadrature, time derivatives from the traveling-wave chain
/// rule) onto a uniform grid as integrator initial data at time t0.
FieldState soliton_initial_state(const SolitonSolution& sol, double z_min, double z_max,
                                 std::size_t n, double t0 = 0.0);

/// Static kink of the scalar double sine-Gordon system in its own
/// coordinates (unit wave speed), for SystemKind::Dsg runs.
FieldState dsg_kink_initial_state(double m_sq, double b, double z_min, double z_max,
                                  std::size_t n);

/// Exact kink profile of the dsg system at rest, phi(z) with rate
/// sqrt(m^2 + b).
double dsg_kink_profile(double m_sq, double b, double z);

}  // namespace cosserat
