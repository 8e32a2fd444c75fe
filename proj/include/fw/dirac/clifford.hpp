#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "fw/alg/rational.hpp"

namespace fw::dirac {

/// Basis element rho_a (x) sigma_b of the 4x4 Dirac-matrix algebra, a, b in 0..3
/// (index 0 is the 2x2 unit). In this basis
///   beta = rho3, alpha_i = rho1 sigma_i, Sigma_i = sigma_i, gamma5 = rho1,
///   Pi_i = beta Sigma_i = rho3 sigma_i.
struct Gamma {
    std::uint8_t rho = 0;
    std::uint8_t sigma = 0;

    friend auto operator<=>(const Gamma&, const Gamma&) = default;
    friend bool operator==(const Gamma&, const Gamma&) = default;
};

struct GammaProduct {
    alg::Complex phase;
    Gamma gamma;
};

GammaProduct multiply(Gamma a, Gamma b);

// Spatial axes are 0, 1, 2.
inline constexpr Gamma unit_gamma{0, 0};
inline constexpr Gamma beta_gamma{3, 0};
inline constexpr Gamma gamma5{1, 0};
constexpr Gamma alpha(int axis) { return {1, static_cast<std::uint8_t>(axis + 1)}; }
constexpr Gamma Sigma(int axis) { return {0, static_cast<std::uint8_t>(axis + 1)}; }
constexpr Gamma Pi(int axis) { return {3, static_cast<std::uint8_t>(axis + 1)}; }

/// Conventional name: "1", "beta", "alpha2", "Sigma3", "Pi1", "gamma5", ...
std::string gamma_name(Gamma g);

/// Levi-Civita symbol on axes 0..2.
int levi_civita(int i, int j, int k);

}  // namespace fw::dirac
