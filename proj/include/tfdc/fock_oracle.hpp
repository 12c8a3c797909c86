#pragma once

// Truncated Fock-space brute force. Builds the ladder operators as dense
// matrices, the a-sector TFD amplitudes, and evaluates second moments by
// direct contraction, independently of the closed-form covariance blocks.

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "tfdc/oracle_report.hpp"
#include "tfdc/params.hpp"

namespace tfdc::fock {

inline constexpr int kMaxDim = 128;
inline constexpr int kDefaultDim = 60;

struct TruncatedOperator {
    int dim = 0;
    Eigen::MatrixXcd entries;
    std::string label;

    TruncatedOperator operator*(const TruncatedOperator& rhs) const;
    TruncatedOperator operator+(const TruncatedOperator& rhs) const;
    TruncatedOperator operator-(const TruncatedOperator& rhs) const;
    TruncatedOperator scaled(std::complex<double> s) const;
    static TruncatedOperator identity(int dim);
};

enum class LadderKind { a, a_dagger };

/// (a)_{n−1,n} = √n; a_dagger is its transpose. 2 ≤ N ≤ kMaxDim.
TruncatedOperator ladder_matrix(LadderKind kind, int dim);

/// ħω(a†a + 1/2) assembled from ladder_matrix.
TruncatedOperator hamiltonian_matrix(int dim, const PhysicalParams& params);

/// Amplitudes c_{n,n'} over |n⟩_L|n'⟩_R of a two-mode state.
struct TwoModeState {
    int dim = 0;
    Eigen::MatrixXcd amplitudes;
    double norm_deficit = 0.0;  ///< 1 − Σ|c|²
};

/// a-sector of the time-evolved TFD, normalized on its own:
/// c_{n,n} = sqrt(1 − e^{−βħω}) e^{−βħωn/2} e^{−iωt(n+1/2)}.
TwoModeState tfd_a_sector_state(double t, const PhysicalParams& params, int dim = kDefaultDim);

/// ⟨ψ| left ⊗ right |ψ⟩.
std::complex<double> expectation(const TwoModeState& state, const Eigen::MatrixXcd& left,
                                  const Eigen::MatrixXcd& right);

struct OracleCovariance {
    Eigen::Matrix2d plus;
    Eigen::Matrix2d minus;
    double norm_deficit = 0.0;
    std::vector<std::string> warnings;
};

/// Anticommutator second moments ⟨{ξ^a, ξ^b}⟩/ħ of ξ = (X₁±, P₁±) in the
/// truncated a-sector state. Requires βħω ≥ 0.5.
OracleCovariance oracle_covariance_1pm(double t, const PhysicalParams& params, int dim = kDefaultDim);

/// Commutator and angular-momentum checks on the first N−1 basis states.
OracleReport commutator_report(int dim = kDefaultDim);

}  // namespace tfdc::fock
