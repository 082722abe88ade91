#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fcauchy {

/// Sizes of the exact-identity sweeps.
struct IdentityGrid {
    unsigned moment_max = 6;       ///< m, k, j, n range for the moment ratio
    unsigned p_max = 3;            ///< operator powers
    unsigned s_max = 3;            ///< radial powers in the eigen-identity
    unsigned harmonic_degree = 6;  ///< harmonic degrees in the eigen-identity
    unsigned eigen_m_max = 12;     ///< degree range for the minimal eigenvalue
    unsigned eigen_n_max = 4;
    unsigned samples = 200;        ///< random polynomials per inequality suite
    unsigned degree_max = 10;      ///< degree of those polynomials (n <= 3)
    std::uint64_t seed = 20240601;

    static IdentityGrid small();
    static IdentityGrid standard();
    static IdentityGrid full();
    /// "small", "default" or "full"; throws std::invalid_argument otherwise.
    static IdentityGrid named(const std::string& name);
};

struct IdentityResult {
    std::string name;
    std::size_t instances = 0;
    std::size_t failures = 0;
    /// First failing instance.
    std::optional<std::string> counterexample;
    double seconds = 0;

    bool passed() const { return failures == 0; }
};

IdentityResult check_moment_ratios(const IdentityGrid& g);
IdentityResult check_eigen_identity(const IdentityGrid& g);
/// e_{p,m} = d_p(0,m) = min_s d_p(s, m-2s) = 2^(2p) p! I_{2m+2p+n-1} / I_{2m+n-1}.
IdentityResult check_minimal_eigenvalue(const IdentityGrid& g);
/// <Delta f, f>_F = 0 and <Delta f, f>_rF >= 0.
IdentityResult check_laplacian_products(const IdentityGrid& g);
/// ||D^a f||_F^2 <= m^|a| ||f||_F^2 and ||D^a f||_rF^2 <= (2m)^|a| ||f||_rF^2.
IdentityResult check_derivative_bounds(const IdentityGrid& g);
/// || |x|^(2k) f ||_rF^2 = I_{2m+4k+n-1} / I_{2m+n-1} ||f||_rF^2.
IdentityResult check_radial_multiplication(const IdentityGrid& g);
/// ||Delta^p(|x|^(2p) f)||_rF >= e_{p,m} ||f||_rF.
IdentityResult check_standard_estimate(const IdentityGrid& g);
/// <Q(D) f, g>_F = <f, Q* g>_F.
IdentityResult check_fischer_adjoint(const IdentityGrid& g);
/// <d_j f, g>_rF + <f, d_j g>_rF = 2 <x_j f, g>_rF.
IdentityResult check_partial_integration(const IdentityGrid& g);
/// Gauss decomposition reconstructs f with harmonic components.
IdentityResult check_gauss_decomposition(const IdentityGrid& g);

/// Every suite above, in a fixed order.
std::vector<IdentityResult> run_identity_suites(const IdentityGrid& g);

}  // namespace fcauchy
