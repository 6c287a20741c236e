#pragma once

#include "cosserat/material.hpp"

namespace cosserat::fixtures {

/// Reference parameter sets used by the fixture files, the verification
/// suites and the regression tests. kappa2 is not pinned by the wave
/// analysis (it cancels from the one-axis reduction); a nonzero value is
/// used so the cancellation is exercised, not assumed.
inline MaterialParams type_a() {
    MaterialParams p;
    p.kappa1 = 0.7;
    p.kappa2 = 0.5;
    p.kappa3 = 0.5;
    p.chi1 = 0.5;
    p.chi3 = 0.1;
    p.rho = 0.1;
    p.rho_rot = 0.1;
    p.mu_c = 0.3;
    p.lambda = 1.0;
    p.mu = 0.5;
    return p;
}

/// mu_c raised to 1.2, all else as type_a.
inline MaterialParams type_b() {
    MaterialParams p = type_a();
    p.mu_c = 1.2;
    return p;
}

/// chi3 raised to 1.5 so that 3 chi1 - chi3 = 0 (M diagonal).
inline MaterialParams type_c() {
    MaterialParams p = type_a();
    p.chi3 = 1.5;
    return p;
}

/// As type_c with kappa1 = 3.0, making v_elas = v_rot.
inline MaterialParams type_d() {
    MaterialParams p = type_c();
    p.kappa1 = 3.0;
    return p;
}

/// Type a with the couple modulus removed (v0 diverges).
inline MaterialParams type_a_mu_c_zero() {
    MaterialParams p = type_a();
    p.mu_c = 0.0;
    return p;
}

}  // namespace cosserat::fixtures
