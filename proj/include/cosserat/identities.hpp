#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cosserat/matrix3.hpp"

namespace cosserat {

inline constexpr std::uint64_t kDefaultIdentitySeed = 20240817u;

struct IdentityCheck {
    std::string name;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct IdentityReport {
    std::uint64_t seed = 0;
    int trials = 0;
    std::vector<IdentityCheck> checks;
    bool all_pass = false;
};

/// Verifies on random matrices (entries in [-1,1], central differences with
/// step 1e-6, tolerance 1e-6 relative):
///   d/dX tr(XA)   = A^T
///   d/dX tr(AXB)  = A^T B^T
///   d/dX tr(XX^T) = 2X
///   d/dX tr(AXBX) = A^T X^T B^T + B^T X^T A^T
/// and, on smooth periodic 1D matrix fields with discrete integration by
/// parts, the curl-variation identity
///   <tr(A) B, Curl W> = <-B (grad tr A)* + tr(A) Curl B, W>
/// together with its A = 1 corollary <B, Curl W> = <Curl B, W>.
IdentityReport matrix_identity_suite(int trials, std::uint64_t seed = kDefaultIdentitySeed);

}  // namespace cosserat
