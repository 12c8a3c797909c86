#include "tfdc/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <fmt/format.h>
#include <stdexcept>

namespace tfdc::quadrature {

Rule gauss_laguerre(std::size_t count)
{
    if (count == 0) throw std::invalid_argument("Gauss-Laguerre rule needs at least one node");
    if (count > kMaxGaussLaguerreNodes)
        throw std::length_error(
            fmt::format("Gauss-Laguerre order {} exceeds the cap of {}", count, kMaxGaussLaguerreNodes));

    // Jacobi matrix of the monic Laguerre recurrence: diagonal 2k+1, off-diagonal k.
    const auto n = static_cast<Eigen::Index>(count);
    Eigen::VectorXd diag(n);
    Eigen::VectorXd sub(n > 1 ? n - 1 : 0);
    for (Eigen::Index k = 0; k < n; ++k) diag(k) = 2.0 * static_cast<double>(k) + 1.0;
    for (Eigen::Index k = 1; k < n; ++k) sub(k - 1) = static_cast<double>(k);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    if (solver.info() != Eigen::Success) throw std::runtime_error("Gauss-Laguerre eigen-decomposition failed");

    Rule rule;
    rule.nodes.resize(count);
    rule.weights.resize(count);
    for (Eigen::Index k = 0; k < n; ++k) {
        rule.nodes[static_cast<std::size_t>(k)] = solver.eigenvalues()(k);
        const double v0 = solver.eigenvectors()(0, k);
        rule.weights[static_cast<std::size_t>(k)] = v0 * v0;
    }
    return rule;
}

Rule gauss_laguerre_for_degree(std::size_t degree)
{
    // 2·count − 1 ≥ degree
    const std::size_t count = degree / 2 + 1;
    if (count > kMaxGaussLaguerreNodes)
        throw std::length_error(fmt::format(
            "polynomial degree {} needs {} Gauss-Laguerre nodes (cap {})", degree, count, kMaxGaussLaguerreNodes));
    return gauss_laguerre(count);
}

}  // namespace tfdc::quadrature
