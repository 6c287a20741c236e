#include "cosserat/initial_data.hpp"

#include <cmath>
#include <stdexcept>

namespace cosserat {

FieldState soliton_initial_state(const SolitonSolution& sol, double z_min, double z_max,
                                 std::size_t n, double t0) {
    if (n < 16) throw std::invalid_argument("soliton_initial_state: need n >= 16");
    if (!(z_max > z_min)) throw std::invalid_argument("soliton_initial_state: empty window");

    FieldState s;
    s.z0 = z_min;
    s.h = (z_max - z_min) / double(n - 1);
    s.t = t0;
    s.phi.resize(n);
    s.psi.resize(n);
    s.phi_t.resize(n);
    s.psi_t.resize(n);

    std::vector<double> grid(n);
    for (std::size_t i = 0; i < n; ++i) grid[i] = s.z(i);
    const DisplacementSolution disp = psi_quadrature(sol, grid, t0);

    for (std::size_t i = 0; i < n; ++i) {
        const PhiEval p = phi_exact_eval(sol, grid[i], t0);
        s.phi[i] = p.phi;
        s.phi_t[i] = p.phi_t;
        s.psi[i] = disp.psi[i];
        s.psi_t[i] = -sol.v * psi_z_closed(sol, grid[i], t0);
    }
    return s;
}

double dsg_kink_profile(double m_sq, double b, double z) {
    const double mb = m_sq + b;
    if (!(mb > 0.0)) throw std::domain_error("dsg_kink_profile: m^2 + b must be > 0");
    const double r = b / mb;
    return exact_profile(r, std::sqrt(mb) * z).phi;
}

FieldState dsg_kink_initial_state(double m_sq, double b, double z_min, double z_max,
                                  std::size_t n) {
    if (n < 16) throw std::invalid_argument("dsg_kink_initial_state: need n >= 16");
    FieldState s;
    s.z0 = z_min;
    s.h = (z_max - z_min) / double(n - 1);
    s.t = 0.0;
    s.phi.resize(n);
    s.psi.assign(n, 0.0);
    s.phi_t.assign(n, 0.0);
    s.psi_t.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) s.phi[i] = dsg_kink_profile(m_sq, b, s.z(i));
    return s;
}

}  // namespace cosserat
