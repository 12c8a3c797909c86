#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "tfdc/sweep.hpp"
#include "tfdc/tfd_core.hpp"

using namespace tfdc;
using namespace tfdc::sweep;

namespace {

std::string metadata(const SweepTable& t, const std::string& key)
{
    for (const auto& [k, v] : t.metadata)
        if (k == key) return v;
    return {};
}

}  // namespace

TEST_CASE("mode and format names")
{
    for (Mode m : {Mode::time_series, Mode::beta_sweep, Mode::omega_sweep, Mode::lloyd, Mode::verify})
        CHECK(parse_mode(mode_name(m)) == m);
    CHECK(parse_format("json") == Format::json);
    CHECK_THROWS_AS(parse_mode("sweep"), ConfigError);
    CHECK_THROWS_AS(parse_format("xml"), ConfigError);
}

TEST_CASE("ranges")
{
    const auto r = Range::parse("0.01:100:5:log");
    CHECK(r.log_spaced);
    const auto v = r.values();
    REQUIRE(v.size() == 5);
    CHECK(v.front() == 0.01);
    CHECK(v[2] == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(v.back() == 100.0);
    CHECK(Range::parse(r.to_string()) == r);

    const auto lin = Range::parse("0:1:3").values();
    CHECK(lin == std::vector<double>{0.0, 0.5, 1.0});

    CHECK_THROWS_AS(Range::parse("1:0:5"), ConfigError);
    CHECK_THROWS_AS(Range::parse("0:1:1"), ConfigError);
    CHECK_THROWS_AS(Range::parse("0:1:5:log"), ConfigError);
    CHECK_THROWS_AS(Range::parse("0:1"), ConfigError);
    CHECK_THROWS_AS(Range::parse("0:1:2.5"), ConfigError);
    CHECK_THROWS_AS(Range::parse("a:1:3"), ConfigError);
    CHECK_THROWS_AS(Range::parse("0:1:3:lin"), ConfigError);
}

TEST_CASE("number formatting")
{
    CHECK(format_number(0.1) == "0.10000000000000001");
    CHECK(format_number(INFINITY) == "inf");
    CHECK(format_number(-INFINITY) == "-inf");
    CHECK(format_number(NAN) == "nan");
    CHECK(std::stod(format_number(M_PI)) == M_PI);
}

TEST_CASE("config validation and JSON round trip")
{
    for (Mode m : {Mode::time_series, Mode::beta_sweep, Mode::omega_sweep, Mode::lloyd, Mode::verify}) {
        auto c = SweepConfig::defaults_for(m);
        CHECK_NOTHROW(c.validate());
        const auto back = SweepConfig::from_json(nlohmann::json::parse(c.to_json().dump()));
        CHECK(back == c);
        CHECK(back.resolved_range() == c.resolved_range());
    }

    auto c = SweepConfig::defaults_for(Mode::time_series);
    c.range = Range::parse("0:3.3:17");
    c.params.omega = 0.3;
    c.output = "x.csv";
    c.format = Format::json;
    c.betas = {kInfiniteBeta, 0.0, 1.0 / 3.0};
    CHECK(SweepConfig::from_json(nlohmann::json::parse(c.to_json().dump())) == c);

    auto bad = SweepConfig::defaults_for(Mode::beta_sweep);
    bad.range = Range{0.0, 1.0, 4, false};
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad = SweepConfig::defaults_for(Mode::time_series);
    bad.betas = {-1.0};
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad.betas.clear();
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad = SweepConfig::defaults_for(Mode::verify);
    bad.fock_dim = 200;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad = SweepConfig::defaults_for(Mode::lloyd);
    bad.samples_per_period = 5;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    bad = SweepConfig::defaults_for(Mode::omega_sweep);
    bad.params.omega_ref = -1.0;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
    CHECK_THROWS_AS(run_beta_sweep(SweepConfig::defaults_for(Mode::lloyd)), ConfigError);
}

TEST_CASE("time series table")
{
    const auto c = SweepConfig::defaults_for(Mode::time_series);
    const auto t = run_time_series(c);
    CHECK(t.rows.size() == 5 * 513);
    for (const auto& row : t.rows) CHECK(row.size() == t.columns.size());
    CHECK(metadata(t, "omega") == "0.10000000000000001");
    CHECK(metadata(t, "beta") == "inf,10,1,0.10000000000000001,0");
    CHECK_FALSE(metadata(t, "limit.beta=0").empty());

    const auto beta = t.column("beta");
    const auto time = t.column("t");
    const auto comp = t.column("complexity");
    const auto rate = t.column("rate");
    const double c0 = core::zero_temperature_complexity(0.1, 1.0);
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        if (std::isinf(beta[i])) CHECK(comp[i] == doctest::Approx(c0).epsilon(1e-14));
        if (time[i] == 0.0) CHECK(rate[i] == 0.0);
        if (beta[i] == 0.0) {
            CHECK(std::isinf(comp[i]));
            CHECK(rate[i] == core::high_T_rate_limit(time[i], 0.1, 1.0));
        } else {
            CHECK(std::isfinite(comp[i]));
        }
    }
    CHECK(c0 == doctest::Approx(3.71675).epsilon(1e-6));
}

TEST_CASE("deterministic output")
{
    auto c = SweepConfig::defaults_for(Mode::time_series);
    const auto once = to_csv(run_time_series(c));
    setenv("TFD_SEED_THREADS", "1", 1);
    CHECK(thread_budget() == 1);
    const auto serial = to_csv(run_time_series(c));
    unsetenv("TFD_SEED_THREADS");
    CHECK(once == serial);
    CHECK(to_csv(run_time_series(c)) == once);

    std::istringstream in(once);
    std::string line;
    std::getline(in, line);
    CHECK(line == "# mode=time-series");
    while (std::getline(in, line) && line.starts_with("#")) {
    }
    CHECK(line == "beta,t,complexity,rate");
}

TEST_CASE("beta and omega sweeps")
{
    const auto b = run_beta_sweep(SweepConfig::defaults_for(Mode::beta_sweep));
    CHECK(b.rows.size() == 64);
    const auto half = b.column("complexity_at_half_period");
    CHECK(std::is_sorted(half.rbegin(), half.rend()));
    const auto amp = b.column("amplitude");
    CHECK(amp.back() < 1e-10);
    CHECK(amp.front() < std::log(1.25));
    CHECK(half.back() == doctest::Approx(core::zero_temperature_complexity(2.0, 1.0)).epsilon(1e-12));

    const auto o = run_omega_sweep(SweepConfig::defaults_for(Mode::omega_sweep));
    const auto omegas = o.column("omega");
    const auto oc = o.column("complexity_at_half_period");
    const auto oa = o.column("amplitude");
    CHECK(metadata(o, "omega") == "swept");
    CHECK(oc.front() > oc[oc.size() / 2]);
    CHECK(oc.back() > oc[oc.size() / 2]);
    CHECK(oa.front() > oa[oa.size() / 2]);
    CHECK(oa.back() < 1e-40);
    CHECK(oc.back() / (std::sqrt(2.0) * std::log(omegas.back())) == doctest::Approx(1.0).epsilon(0.1));
}

TEST_CASE("Lloyd table")
{
    auto c = SweepConfig::defaults_for(Mode::lloyd);
    c.range = Range::parse("0.01:100:25:log");
    for (double omega : {0.1, 0.5, 2.0}) {
        c.params.omega = omega;
        const auto t = run_lloyd(c);
        CHECK(lloyd_violations(t).empty());
        const auto rate = t.column("max_rate");
        const auto bound = t.column("bound");
        for (std::size_t i = 0; i < rate.size(); ++i) CHECK(rate[i] < bound[i]);
    }

    SweepTable fake;
    fake.columns = {{"beta", ""}, {"max_rate", ""}, {"bound", ""}, {"satisfied", ""}, {"argmax_t", ""}};
    fake.add_row({1, 2, 1, 0, 0});
    fake.add_row({1, 0, 1, 1, 0});
    CHECK(lloyd_violations(fake) == std::vector<std::size_t>{0});
    CHECK_THROWS_AS(fake.add_row({1.0}), std::logic_error);
    CHECK_THROWS_AS(static_cast<void>(fake.column("nope")), std::out_of_range);
}

TEST_CASE("JSON tables and file output")
{
    auto c = SweepConfig::defaults_for(Mode::time_series);
    c.betas = {0.0, 1.0};
    c.samples_per_period = 4;
    const auto t = run_time_series(c);
    const auto j = to_json(t);
    CHECK(j["columns"].size() == 4);
    CHECK(j["rows"][0][2] == "inf");
    CHECK(j["metadata"]["mode"] == "time-series");

    const auto path = std::filesystem::temp_directory_path() / "tfdc_test_table.json";
    c.output = path.string();
    c.format = Format::json;
    write_table(t, c);
    std::ifstream in(path);
    CHECK(nlohmann::json::parse(in) == j);
    std::filesystem::remove(path);
}

TEST_CASE("verify run")
{
    auto c = SweepConfig::defaults_for(Mode::verify);
    c.fock_dim = 40;
    const auto report = run_verify(c);
    CHECK(report.passed());
    CHECK(report.suites.size() >= 9);
    for (const auto& s : report.suites) CHECK_MESSAGE(s.passed, s.name);
}
