#include "fw/dirac/clifford.hpp"

#include <fmt/format.h>

namespace fw::dirac {

using alg::Complex;

int levi_civita(int i, int j, int k)
{
    if (i == j || j == k || i == k) return 0;
    return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

namespace {

// Pauli product sigma_a sigma_b = phase * sigma_c (index 0 = unit).
std::pair<Complex, std::uint8_t> pauli(std::uint8_t a, std::uint8_t b)
{
    if (a == 0) return {Complex(1), b};
    if (b == 0) return {Complex(1), a};
    if (a == b) return {Complex(1), 0};
    int c = 6 - a - b;
    int eps = levi_civita(a - 1, b - 1, c - 1);
    return {Complex(0, eps), static_cast<std::uint8_t>(c)};
}

}  // namespace

GammaProduct multiply(Gamma a, Gamma b)
{
    auto [pr, r] = pauli(a.rho, b.rho);
    auto [ps, s] = pauli(a.sigma, b.sigma);
    return {pr * ps, Gamma{r, s}};
}

std::string gamma_name(Gamma g)
{
    if (g.sigma == 0) {
        switch (g.rho) {
        case 0: return "1";
        case 1: return "gamma5";
        case 2: return "rho2";
        default: return "beta";
        }
    }
    int axis = g.sigma;
    switch (g.rho) {
    case 0: return fmt::format("Sigma{}", axis);
    case 1: return fmt::format("alpha{}", axis);
    case 2: return fmt::format("rho2*Sigma{}", axis);
    default: return fmt::format("Pi{}", axis);
    }
}

}  // namespace fw::dirac
