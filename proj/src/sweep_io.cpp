#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>

#include <fmt/format.h>

#include "tfdc/sweep.hpp"

namespace tfdc {

double parse_beta(const std::string& token)
{
    std::string lower;
    for (char ch : token) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (lower == "inf" || lower == "+inf" || lower == "infinity") return kInfiniteBeta;
    double v = 0.0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || !std::isfinite(v))
        throw std::invalid_argument(fmt::format("cannot parse beta '{}'", token));
    return v;
}

}  // namespace tfdc

namespace tfdc::sweep {
namespace {

double parse_double(std::string_view text, std::string_view what)
{
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size())
        throw ConfigError(fmt::format("cannot parse {} '{}'", what, text));
    return v;
}

nlohmann::json number_json(double v)
{
    if (std::isfinite(v)) return v;
    return format_number(v);
}

double number_from_json(const nlohmann::json& j)
{
    if (j.is_string()) return parse_beta(j.get<std::string>());
    return j.get<double>();
}

}  // namespace

std::string format_number(double v)
{
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return fmt::format("{:.17g}", v);
}

std::string_view mode_name(Mode m)
{
    switch (m) {
    case Mode::time_series: return "time-series";
    case Mode::beta_sweep: return "beta-sweep";
    case Mode::omega_sweep: return "omega-sweep";
    case Mode::lloyd: return "lloyd";
    case Mode::verify: return "verify";
    }
    return "?";
}

Mode parse_mode(std::string_view s)
{
    for (Mode m : {Mode::time_series, Mode::beta_sweep, Mode::omega_sweep, Mode::lloyd, Mode::verify})
        if (mode_name(m) == s) return m;
    throw ConfigError(fmt::format("unknown mode '{}'", s));
}

std::string_view format_name(Format f) { return f == Format::csv ? "csv" : "json"; }

Format parse_format(std::string_view s)
{
    if (s == "csv") return Format::csv;
    if (s == "json") return Format::json;
    throw ConfigError(fmt::format("unknown format '{}'", s));
}

void Range::validate() const
{
    if (count < 2) throw ConfigError(fmt::format("range count {} < 2", count));
    if (!std::isfinite(start) || !std::isfinite(stop)) throw ConfigError("range bounds must be finite");
    if (!(start < stop)) throw ConfigError(fmt::format("range start {} must be < stop {}", start, stop));
    if (log_spaced && !(start > 0.0)) throw ConfigError("log-spaced range needs start > 0");
}

std::vector<double> Range::values() const
{
    validate();
    std::vector<double> out(static_cast<std::size_t>(count));
    const double last = count - 1;
    if (log_spaced) {
        const double a = std::log(start);
        const double b = std::log(stop);
        for (int k = 0; k < count; ++k) out[static_cast<std::size_t>(k)] = std::exp(a + (b - a) * (k / last));
    } else {
        for (int k = 0; k < count; ++k) out[static_cast<std::size_t>(k)] = start + (stop - start) * (k / last);
    }
    out.front() = start;
    out.back() = stop;
    return out;
}

std::string Range::to_string() const
{
    return fmt::format("{}:{}:{}{}", format_number(start), format_number(stop), count, log_spaced ? ":log" : "");
}

Range Range::parse(std::string_view text)
{
    std::vector<std::string_view> parts;
    std::size_t pos = 0;
    while (true) {
        const auto next = text.find(':', pos);
        parts.push_back(text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    if (parts.size() != 3 && parts.size() != 4)
        throw ConfigError(fmt::format("range '{}' must be start:stop:count[:log]", text));
    Range r;
    r.start = parse_double(parts[0], "range start");
    r.stop = parse_double(parts[1], "range stop");
    const double count = parse_double(parts[2], "range count");
    if (count != std::floor(count) || count > 1e7) throw ConfigError(fmt::format("range count '{}' invalid", parts[2]));
    r.count = static_cast<int>(count);
    if (parts.size() == 4) {
        if (parts[3] != "log") throw ConfigError(fmt::format("range flag '{}' must be 'log'", parts[3]));
        r.log_spaced = true;
    }
    r.validate();
    return r;
}

SweepConfig SweepConfig::defaults_for(Mode mode)
{
    SweepConfig c;
    c.mode = mode;
    c.params = PhysicalParams{};
    switch (mode) {
    case Mode::time_series:
        c.params.omega = 0.1;
        c.betas = {kInfiniteBeta, 10.0, 1.0, 0.1, 0.0};
        break;
    case Mode::beta_sweep:
        c.params.omega = 2.0;
        break;
    case Mode::omega_sweep:
        c.params.beta = 1.0;
        break;
    case Mode::lloyd:
        c.params.omega = 0.1;
        break;
    case Mode::verify:
        c.params.omega = 0.5;
        break;
    }
    return c;
}

Range SweepConfig::resolved_range() const
{
    if (range) return *range;
    switch (mode) {
    case Mode::time_series: {
        const int spp = resolved_samples();
        return {0.0, 2.0 * params.period(), 2 * spp + 1, false};
    }
    case Mode::beta_sweep:
    case Mode::omega_sweep:
    case Mode::lloyd:
    case Mode::verify:
        break;
    }
    return {1e-2, 1e2, 64, true};
}

int SweepConfig::resolved_samples() const
{
    if (samples_per_period > 0) return samples_per_period;
    if (mode == Mode::time_series) return 256;
    if (mode == Mode::lloyd) return 257;
    return 0;
}

void SweepConfig::validate() const
{
    try {
        PhysicalParams p = params;
        if (mode == Mode::beta_sweep || mode == Mode::lloyd || mode == Mode::time_series) p.beta = kInfiniteBeta;
        if (mode == Mode::omega_sweep) p.omega = 1.0;
        p.validate();
    } catch (const std::domain_error& e) {
        throw ConfigError(e.what());
    }
    resolved_range().validate();
    if (mode == Mode::time_series) {
        if (betas.empty()) throw ConfigError("time-series needs at least one beta");
        for (double b : betas)
            if (!(b >= 0.0)) throw ConfigError(fmt::format("beta {} must be >= 0 (0 = high-T limit, inf = T=0)", b));
    }
    if ((mode == Mode::beta_sweep || mode == Mode::omega_sweep || mode == Mode::lloyd) && !(resolved_range().start > 0.0))
        throw ConfigError("swept beta/omega must be > 0");
    if (mode == Mode::lloyd && resolved_samples() < 8) throw ConfigError("lloyd needs samples >= 8");
    if (samples_per_period < 0) throw ConfigError("samples must be > 0");
    if (fock_dim < 4 || fock_dim > fock::kMaxDim)
        throw ConfigError(fmt::format("fock-dim must be in [4, {}]", fock::kMaxDim));
}

nlohmann::json SweepConfig::to_json() const
{
    nlohmann::json j;
    j["mode"] = std::string(mode_name(mode));
    j["params"] = {{"hbar", params.hbar},
                   {"mass", params.mass},
                   {"omega", params.omega},
                   {"omega_ref", params.omega_ref},
                   {"beta", number_json(params.beta)}};
    auto& b = j["betas"] = nlohmann::json::array();
    for (double v : betas) b.push_back(number_json(v));
    j["range"] = range ? nlohmann::json(range->to_string()) : nlohmann::json(nullptr);
    j["samples_per_period"] = samples_per_period;
    j["fock_dim"] = fock_dim;
    j["output"] = output;
    j["format"] = std::string(format_name(format));
    return j;
}

SweepConfig SweepConfig::from_json(const nlohmann::json& j)
{
    SweepConfig c;
    c.mode = parse_mode(j.at("mode").get<std::string>());
    const auto& p = j.at("params");
    c.params.hbar = p.at("hbar").get<double>();
    c.params.mass = p.at("mass").get<double>();
    c.params.omega = p.at("omega").get<double>();
    c.params.omega_ref = p.at("omega_ref").get<double>();
    c.params.beta = number_from_json(p.at("beta"));
    for (const auto& v : j.at("betas")) c.betas.push_back(number_from_json(v));
    if (!j.at("range").is_null()) c.range = Range::parse(j.at("range").get<std::string>());
    c.samples_per_period = j.at("samples_per_period").get<int>();
    c.fock_dim = j.at("fock_dim").get<int>();
    c.output = j.at("output").get<std::string>();
    c.format = parse_format(j.at("format").get<std::string>());
    return c;
}

std::string to_csv(const SweepTable& table)
{
    std::string out;
    for (const auto& [k, v] : table.metadata) out += fmt::format("# {}={}\n", k, v);
    for (std::size_t i = 0; i < table.columns.size(); ++i) {
        if (i) out += ',';
        out += table.columns[i].name;
    }
    out += '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += format_number(row[i]);
        }
        out += '\n';
    }
    return out;
}

nlohmann::json to_json(const SweepTable& table)
{
    nlohmann::json j;
    auto& meta = j["metadata"] = nlohmann::json::object();
    for (const auto& [k, v] : table.metadata) meta[k] = v;
    auto& cols = j["columns"] = nlohmann::json::array();
    for (const auto& c : table.columns) cols.push_back({{"name", c.name}, {"unit", c.unit}});
    auto& rows = j["rows"] = nlohmann::json::array();
    for (const auto& row : table.rows) {
        auto r = nlohmann::json::array();
        for (double v : row) r.push_back(number_json(v));
        rows.push_back(std::move(r));
    }
    return j;
}

void write_table(const SweepTable& table, const SweepConfig& config)
{
    const std::string text = config.format == Format::csv ? to_csv(table) : to_json(table).dump(2) + "\n";
    if (config.output.empty() || config.output == "-") {
        std::cout << text;
        return;
    }
    std::ofstream file(config.output, std::ios::binary);
    if (!file) throw ConfigError(fmt::format("cannot open '{}' for writing", config.output));
    file << text;
}

}  // namespace tfdc::sweep
