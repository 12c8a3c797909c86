#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "tfdc/laguerre.hpp"
#include "tfdc/quadrature.hpp"

using namespace tfdc;
using namespace tfdc::quantization;
using boost::multiprecision::cpp_rational;

namespace {

// L_n^{(a)}(x) = Σ_i (−1)^i C(n+a, n−i) x^i / i!, exact in rationals.
cpp_rational laguerre_exact(int n, int a, cpp_rational x)
{
    cpp_rational sum = 0;
    cpp_rational power = 1;
    cpp_rational factorial = 1;
    for (int i = 0; i <= n; ++i) {
        if (i > 0) {
            power *= x;
            factorial *= i;
        }
        cpp_rational binom = 1;
        for (int j = 1; j <= n - i; ++j) binom = binom * (a + i + j) / j;
        const cpp_rational term = binom * power / factorial;
        sum += (i % 2 == 0) ? term : cpp_rational(-term);
    }
    return sum;
}

PhysicalParams unit_params()
{
    PhysicalParams p;
    p.omega = 1.0;
    return p;
}

}  // namespace

TEST_CASE("Laguerre polynomials against exact rationals")
{
    CHECK(laguerre(2, 3, 1.0) == 5.5);
    CHECK(laguerre(0, 4, 2.0) == 1.0);
    CHECK(laguerre(1, 2, 0.5) == 2.5);

    for (double r : {0.1, 1.0, 5.0})
        for (int n = 0; n <= 10; ++n)
            for (int ell = 0; ell <= 10; ++ell) {
                const double exact = static_cast<double>(laguerre_exact(n, ell, cpp_rational(r)));
                CHECK(laguerre(n, ell, r) == doctest::Approx(exact).epsilon(1e-12).scale(1.0));
            }

    CHECK_THROWS_AS(laguerre(-1, 0, 1.0), std::domain_error);
    CHECK_THROWS_AS(laguerre(1, -1, 1.0), std::domain_error);
    CHECK_THROWS_AS(laguerre(1, 0, -1.0), std::domain_error);
}

TEST_CASE("Gauss-Laguerre rule")
{
    const auto rule = quadrature::gauss_laguerre(12);
    double mass = 0.0;
    double third = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        mass += rule.weights[i];
        third += rule.weights[i] * std::pow(rule.nodes[i], 5);
    }
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(third == doctest::Approx(120.0).epsilon(1e-13));
    CHECK(quadrature::gauss_laguerre_for_degree(9).nodes.size() == 5);
    CHECK_THROWS_AS(quadrature::gauss_laguerre_for_degree(400), std::length_error);
}

TEST_CASE("Laguerre orthogonality")
{
    CHECK(laguerre_norm_integral(0, 0, 0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(laguerre_norm_integral(1, 0, 2)) < 1e-13);
    CHECK(laguerre_norm_integral(2, 2, 3) == doctest::Approx(60.0).epsilon(1e-13));
    CHECK(laguerre_norm_expected(2, 2, 3) == doctest::Approx(60.0).epsilon(1e-14));
    CHECK(laguerre_norm_expected(2, 1, 3) == 0.0);

    for (int ell = 0; ell <= 4; ++ell)
        for (int n = 0; n <= 6; ++n)
            for (int m = 0; m <= 6; ++m) {
                const double scale =
                    std::sqrt(laguerre_norm_expected(n, n, ell) * laguerre_norm_expected(m, m, ell));
                CHECK(std::abs(laguerre_norm_integral(n, m, ell) - laguerre_norm_expected(n, m, ell)) <= 1e-9 * scale);
            }
    CHECK_THROWS_AS(laguerre_norm_integral(-1, 0, 0), std::domain_error);
}

TEST_CASE("wavefunctions")
{
    const auto p = unit_params();
    CHECK(length_scale(p) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
    CHECK(std::abs(wavefunction({0, 0}, 0.0, 0.3, p)) == doctest::Approx(1.0 / (std::sqrt(2.0) * std::sqrt(M_PI))));
    CHECK(std::abs(wavefunction({1, 2}, 0.0, 0.0, p)) == 0.0);

    // Adaptive Gauss–Kronrod on the radial density; |Ψ| does not depend on φ.
    const double lambda = length_scale(p);
    for (auto q : {QuantumNumbers{2, 1}, QuantumNumbers{3, -2}, QuantumNumbers{1, 4}}) {
        auto density = [&](double rho) { return std::norm(wavefunction(q, rho, 0.0, p)) * rho; };
        const double radial = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(density, 0.0, 15.0, 8, 1e-14);
        CHECK(2.0 * M_PI * lambda * lambda * radial == doctest::Approx(1.0).epsilon(1e-9));
    }

    const auto s = sample_wavefunction({1, -1}, 0.7, 1.1, p);
    CHECK(s.lambda == length_scale(p));
    CHECK(std::arg(s.value / wavefunction({1, -1}, 0.7, 0.0, p)) == doctest::Approx(-1.1));

    CHECK_THROWS_AS(QuantumNumbers(-1, 0), std::domain_error);
    CHECK_THROWS_AS(QuantumNumbers(1, -2), std::domain_error);
    CHECK(QuantumNumbers(2, -1).k() == 1);
    CHECK_THROWS_AS(wavefunction({0, 0}, -1.0, 0.0, p), std::domain_error);
}

TEST_CASE("spectrum")
{
    PhysicalParams p;
    p.omega = 2.0;
    p.hbar = 0.5;
    CHECK(energy(0, p) == 0.5);
    CHECK(energy(3, p) == 3.5);
    CHECK_THROWS_AS(energy(-1, p), std::domain_error);
}

TEST_CASE("Gram matrix")
{
    CHECK(gram_deviation(4, unit_params()) < 1e-8);
    PhysicalParams p;
    p.omega = 0.3;
    p.mass = 2.0;
    CHECK(gram_deviation(4, p) < 1e-8);
    CHECK_THROWS_AS(gram_deviation(-1, p), std::domain_error);
}

TEST_CASE("ladder actions")
{
    const auto p = unit_params();

    auto r = ladder_action_check({1, 0}, Ladder::a_dagger, p);
    CHECK(r.target == QuantumNumbers(2, -1));
    CHECK(r.coefficient == doctest::Approx(std::sqrt(2.0)).epsilon(1e-4));

    r = ladder_action_check({0, 2}, Ladder::b_dagger, p);
    CHECK(r.target == QuantumNumbers(0, 3));
    CHECK(r.coefficient == doctest::Approx(std::sqrt(3.0)).epsilon(1e-4));

    CHECK(ladder_action_check({0, 0}, Ladder::a, p).annihilates);
    CHECK(ladder_action_check({2, -2}, Ladder::b, p).annihilates);

    for (int n = 0; n <= 2; ++n)
        for (int ell = -n; ell <= 2; ++ell) {
            const QuantumNumbers q(n, ell);
            if (n > 0) CHECK(std::abs(ladder_action_check(q, Ladder::a, p).coefficient - std::sqrt(double(n))) < 1e-4);
            CHECK(std::abs(ladder_action_check(q, Ladder::a_dagger, p).coefficient - std::sqrt(n + 1.0)) < 1e-4);
            if (q.k() > 0)
                CHECK(std::abs(ladder_action_check(q, Ladder::b, p).coefficient - std::sqrt(double(q.k()))) < 1e-4);
            CHECK(std::abs(ladder_action_check(q, Ladder::b_dagger, p).coefficient - std::sqrt(q.k() + 1.0)) < 1e-4);
        }
}

TEST_CASE("angular momentum")
{
    const auto p = unit_params();
    // 4th-order differences on 128 φ points: relative error ≈ (ℓh)⁴/30.
    for (auto q : {QuantumNumbers{0, 0}, QuantumNumbers{1, -1}, QuantumNumbers{2, 3}})
        CHECK(angular_momentum_expectation(q, p) == doctest::Approx(q.ell()).epsilon(1e-4).scale(1.0));
}
