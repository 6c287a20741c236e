#pragma once

#include <string>

namespace cosserat {

/// Constitutive constants of the micropolar model.
///
/// kappa1..kappa3 are the curvature moduli, chi1/chi3 the interaction moduli,
/// mu_c the Cosserat couple modulus, lambda/mu the Lame parameters, rho the
/// mass density and rho_rot the rotational density. kappa2 enters the
/// curvature energy but cancels from the one-axis reduction; it is kept live
/// so that cancellation can be tested rather than assumed.
struct MaterialParams {
    double kappa1 = 0.0;
    double kappa2 = 0.0;
    double kappa3 = 0.0;
    double chi1 = 0.0;
    double chi3 = 0.0;
    double rho = 0.0;
    double rho_rot = 0.0;
    double mu_c = 0.0;
    double lambda = 0.0;
    double mu = 0.0;

    /// Throws std::invalid_argument naming the violated invariant:
    /// rho > 0, rho_rot > 0, mu > 0, mu_c >= 0, lambda + 2 mu > 0,
    /// kappa1 + 6 kappa3 > 0, all entries finite.
    void validate() const;

    bool admissible() const;
};

/// Parses a params JSON object with exactly the ten keys
/// kappa1 kappa2 kappa3 chi1 chi3 rho rho_rot mu_c lambda mu,
/// validating admissibility. Throws std::invalid_argument on any violation.
MaterialParams params_from_json_text(const std::string& text);

MaterialParams load_params_file(const std::string& path);

std::string params_to_json_text(const MaterialParams& p);

}  // namespace cosserat
