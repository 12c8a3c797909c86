#include <cmath>
#include <stdexcept>

#include "tfdc/kernels/series.hpp"
#include "tfdc/tfd_core.hpp"

namespace tfdc::kernels {
namespace {

double clamp_roundoff(double u) { return (u < 0.0 && u > -1e-14) ? 0.0 : u; }

}  // namespace

SeriesCoefficients SeriesCoefficients::from(const PhysicalParams& params)
{
    const auto tfd = core::alpha_of(params);
    const double w = params.omega;
    const double wr = params.omega_ref;
    const double denom = 2.0 * wr * w;
    const double lr = std::log(wr / w);

    SeriesCoefficients c;
    c.omega = w;
    c.base = std::log(6.0) * std::log(6.0) + lr * lr;
    // (ω_R²+ω²)cosh2α − 2ω_Rω = (ω_R²+ω²)(cosh2α − 1) + (ω_R − ω)²
    c.a_minus_one = ((wr * wr + w * w) * tfd.cosh2a_minus_one + (wr - w) * (wr - w)) / denom;
    c.q = (wr * wr - w * w) * tfd.sinh2a / denom;
    return c;
}

double arccosh_ratio(double u)
{
    if (u < kSeriesThreshold) return 1.0 - u / 3.0;
    const double s = std::sqrt(u * (u + 2.0));
    return std::log1p(u + s) / s;
}

SeriesPoint evaluate_point(const SeriesCoefficients& c, double t)
{
    const double theta = c.omega * t;
    const double cs = std::cos(theta);
    const double sn = std::sin(theta);
    const double up = clamp_roundoff(c.a_minus_one + c.q * cs);
    const double um = clamp_roundoff(c.a_minus_one - c.q * cs);
    const double sp = std::sqrt(up * (up + 2.0));
    const double sm = std::sqrt(um * (um + 2.0));
    const double hp = std::log1p(up + sp);
    const double hm = std::log1p(um + sm);
    const double comp = std::sqrt(c.base + 0.5 * (hp * hp + hm * hm));

    const double gp = up < kSeriesThreshold ? 1.0 - up / 3.0 : hp / sp;
    const double gm = um < kSeriesThreshold ? 1.0 - um / 3.0 : hm / sm;
    // Ȧ₊ = −qω sin ωt, Ȧ₋ = +qω sin ωt
    const double adot = c.q * c.omega * sn;
    const double rate = adot * (gm - gp) / (2.0 * comp);
    return {comp, rate};
}

void complexity_series_scalar(const SeriesCoefficients& c, std::span<const double> times,
                              std::span<double> complexity, std::span<double> rate)
{
    if (complexity.size() != times.size() || (!rate.empty() && rate.size() != times.size()))
        throw std::invalid_argument("complexity_series: output spans must match the time grid");
    for (std::size_t i = 0; i < times.size(); ++i) {
        const auto p = evaluate_point(c, times[i]);
        complexity[i] = p.complexity;
        if (!rate.empty()) rate[i] = p.rate;
    }
}

}  // namespace tfdc::kernels
