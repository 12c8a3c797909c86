#include "tfdc/fock_oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <stdexcept>

#include <fmt/format.h>

namespace tfdc::fock {
namespace {

using cd = std::complex<double>;

void check_dim(int dim)
{
    if (dim < 2) throw std::invalid_argument(fmt::format("truncation dimension {} < 2", dim));
    if (dim > kMaxDim) throw std::invalid_argument(fmt::format("truncation dimension {} exceeds cap {}", dim, kMaxDim));
}

Eigen::MatrixXcd random_amplitudes(int dim, std::mt19937_64& rng, int support)
{
    std::normal_distribution<double> normal;
    Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(dim, dim);
    for (int i = 0; i < support; ++i)
        for (int j = 0; j < support; ++j) c(i, j) = cd(normal(rng), normal(rng));
    return c;
}

}  // namespace

TruncatedOperator TruncatedOperator::operator*(const TruncatedOperator& rhs) const
{
    return {dim, entries * rhs.entries, label + "*" + rhs.label};
}

TruncatedOperator TruncatedOperator::operator+(const TruncatedOperator& rhs) const
{
    return {dim, entries + rhs.entries, "(" + label + "+" + rhs.label + ")"};
}

TruncatedOperator TruncatedOperator::operator-(const TruncatedOperator& rhs) const
{
    return {dim, entries - rhs.entries, "(" + label + "-" + rhs.label + ")"};
}

TruncatedOperator TruncatedOperator::scaled(cd s) const { return {dim, entries * s, label}; }

TruncatedOperator TruncatedOperator::identity(int dim)
{
    check_dim(dim);
    return {dim, Eigen::MatrixXcd::Identity(dim, dim), "1"};
}

TruncatedOperator ladder_matrix(LadderKind kind, int dim)
{
    check_dim(dim);
    Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    if (kind == LadderKind::a) return {dim, a, "a"};
    return {dim, a.transpose(), "a+"};
}

TruncatedOperator hamiltonian_matrix(int dim, const PhysicalParams& params)
{
    const auto a = ladder_matrix(LadderKind::a, dim);
    const auto ad = ladder_matrix(LadderKind::a_dagger, dim);
    auto h = (ad * a + TruncatedOperator::identity(dim).scaled(0.5)).scaled(params.hbar * params.omega);
    h.label = "H";
    return h;
}

TwoModeState tfd_a_sector_state(double t, const PhysicalParams& params, int dim)
{
    check_dim(dim);
    params.validate();
    const double bw = params.beta_hbar_omega();
    if (!(bw > 0.0)) throw std::domain_error("tfd_a_sector_state: beta*hbar*omega must be > 0");

    TwoModeState s;
    s.dim = dim;
    s.amplitudes = Eigen::MatrixXcd::Zero(dim, dim);
    const double wt = params.omega * t;
    if (params.zero_temperature()) {
        s.amplitudes(0, 0) = std::polar(1.0, -0.5 * wt);
        s.norm_deficit = 0.0;
        return s;
    }
    const double pref = std::sqrt(-std::expm1(-bw));
    for (int n = 0; n < dim; ++n)
        s.amplitudes(n, n) = std::polar(pref * std::exp(-0.5 * bw * n), -wt * (n + 0.5));
    s.norm_deficit = std::exp(-bw * dim);
    return s;
}

cd expectation(const TwoModeState& state, const Eigen::MatrixXcd& left, const Eigen::MatrixXcd& right)
{
    const Eigen::MatrixXcd acted = left * state.amplitudes * right.transpose();
    return (state.amplitudes.conjugate().array() * acted.array()).sum();
}

OracleCovariance oracle_covariance_1pm(double t, const PhysicalParams& params, int dim)
{
    params.validate();
    if (!(params.beta_hbar_omega() >= 0.5))
        throw std::domain_error("oracle_covariance_1pm: needs beta*hbar*omega >= 0.5 for a negligible truncation tail");

    const auto state = tfd_a_sector_state(t, params, dim);
    const Eigen::MatrixXcd a = ladder_matrix(LadderKind::a, dim).entries;
    const Eigen::MatrixXcd ad = ladder_matrix(LadderKind::a_dagger, dim).entries;
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);

    const double hbar = params.hbar;
    const double mw = params.mass * params.omega;
    const Eigen::MatrixXcd x = std::sqrt(hbar / (2.0 * mw)) * (a + ad);
    const Eigen::MatrixXcd p = cd(0.0, std::sqrt(hbar * mw / 2.0)) * (ad - a);
    const std::array<const Eigen::MatrixXcd*, 2> xi{&x, &p};

    OracleCovariance out;
    out.norm_deficit = state.norm_deficit;
    if (state.norm_deficit > 1e-10)
        out.warnings.push_back(fmt::format("truncation tail {:.3e} exceeds 1e-10 at N={}", state.norm_deficit, dim));

    // ξ± = (A_L ± A_R)/√2:
    // ⟨{ξa±, ξb±}⟩ = ½⟨{A,B}⊗1 + 1⊗{A,B}⟩ ± ⟨A⊗B + B⊗A⟩
    for (int sign : {+1, -1}) {
        Eigen::Matrix2d block;
        for (int r = 0; r < 2; ++r)
            for (int s = 0; s < 2; ++s) {
                const Eigen::MatrixXcd& A = *xi[static_cast<std::size_t>(r)];
                const Eigen::MatrixXcd& B = *xi[static_cast<std::size_t>(s)];
                const Eigen::MatrixXcd anti = A * B + B * A;
                const cd local = 0.5 * (expectation(state, anti, id) + expectation(state, id, anti));
                const cd cross = expectation(state, A, B) + expectation(state, B, A);
                block(r, s) = (local + static_cast<double>(sign) * cross).real() / hbar;
            }
        (sign > 0 ? out.plus : out.minus) = block;
    }
    return out;
}

OracleReport commutator_report(int dim)
{
    if (dim < 4) throw std::invalid_argument("commutator_report: dimension must be >= 4");
    check_dim(dim);
    const Eigen::MatrixXcd a = ladder_matrix(LadderKind::a, dim).entries;
    const Eigen::MatrixXcd ad = ladder_matrix(LadderKind::a_dagger, dim).entries;
    const Eigen::MatrixXcd comm = a * ad - ad * a;
    const int interior = dim - 1;

    OracleReport report;
    {
        const Eigen::MatrixXcd dev =
            comm.topLeftCorner(interior, interior) - Eigen::MatrixXcd::Identity(interior, interior);
        report.add("commutator [a,a+] interior", dev.cwiseAbs().maxCoeff(), 1e-12);
        const double edge = comm(dim - 1, dim - 1).real();
        if (std::abs(edge + (dim - 1)) > 1e-9)
            report.warn(fmt::format("unexpected truncation edge value {}", edge));
    }

    std::mt19937_64 rng(20240917);
    // b acts on the right factor: b_R C = C bᵀ.
    {
        const Eigen::MatrixXcd c = random_amplitudes(dim, rng, interior);
        const Eigen::MatrixXcd acted = c * comm.transpose();
        report.add("commutator [b,b+] interior", (acted - c).cwiseAbs().maxCoeff(), 1e-12);
    }
    {
        const Eigen::MatrixXcd c = random_amplitudes(dim, rng, dim);
        const Eigen::MatrixXcd ab = a * (c * a.transpose());
        const Eigen::MatrixXcd ba = (a * c) * a.transpose();
        report.add("commutator [a,b]", (ab - ba).cwiseAbs().maxCoeff(), 1e-12);
    }
    {
        // L_z = −ħ(a†a − b†b); eigenvalue ħ(k − n) on |n,k⟩ (ħ = 1 here).
        const Eigen::MatrixXcd c = random_amplitudes(dim, rng, dim);
        const Eigen::MatrixXcd num = ad * a;
        const Eigen::MatrixXcd lz = -(num * c - c * num.transpose());
        double worst = 0.0;
        for (int n = 0; n < dim; ++n)
            for (int k = 0; k < dim; ++k) worst = std::max(worst, std::abs(lz(n, k) - static_cast<double>(k - n) * c(n, k)));
        report.add("angular momentum L_z eigenvalues", worst, 1e-10);
    }
    return report;
}

}  // namespace tfdc::fock
