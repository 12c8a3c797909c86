#pragma once

#include <cstddef>
#include <vector>

namespace tfdc::quadrature {

/// Upper bound on Gauss–Laguerre order. Beyond this the weights underflow
/// double precision.
inline constexpr std::size_t kMaxGaussLaguerreNodes = 128;

struct Rule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Nodes and weights for ∫_0^∞ e^{-r} f(r) dr (Golub–Welsch). Exact for
/// polynomials of degree ≤ 2·count − 1.
Rule gauss_laguerre(std::size_t count);

/// Smallest rule exact for polynomial degree `degree`; throws
/// std::length_error above kMaxGaussLaguerreNodes.
Rule gauss_laguerre_for_degree(std::size_t degree);

}  // namespace tfdc::quadrature
