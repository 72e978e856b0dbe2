#include "roadcov/config.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "roadcov/errors.hpp"

namespace roadcov {

namespace {

std::string trim(const std::string& s) {
    std::size_t begin = 0;
    std::size_t end = s.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) {
        ++begin;
    }
    while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) {
        --end;
    }
    return s.substr(begin, end - begin);
}

double parse_double(const std::string& key, const std::string& value, int line) {
    const std::string v = trim(value);
    char* end = nullptr;
    errno = 0;
    const double d = std::strtod(v.c_str(), &end);
    if (v.empty() || end != v.c_str() + v.size() || errno == ERANGE || !std::isfinite(d)) {
        throw ConfigError(key + ": expected a number, got '" + v + "'", line);
    }
    return d;
}

int parse_int(const std::string& key, const std::string& value, int line) {
    const double d = parse_double(key, value, line);
    if (d != std::floor(d) || d < -2e9 || d > 2e9) {
        throw ConfigError(key + ": expected an integer, got '" + trim(value) + "'", line);
    }
    return static_cast<int>(d);
}

std::uint64_t parse_u64(const std::string& key, const std::string& value, int line) {
    const std::string v = trim(value);
    char* end = nullptr;
    errno = 0;
    const unsigned long long u = std::strtoull(v.c_str(), &end, 10);
    if (v.empty() || v[0] == '-' || end != v.c_str() + v.size() || errno == ERANGE) {
        throw ConfigError(key + ": expected an unsigned integer, got '" + v + "'", line);
    }
    return static_cast<std::uint64_t>(u);
}

std::vector<double> parse_double_list(const std::string& key, const std::string& value,
                                      int line) {
    std::vector<double> out;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(parse_double(key, item, line));
    }
    if (out.empty()) {
        throw ConfigError(key + ": expected a comma-separated list of numbers", line);
    }
    return out;
}

bool parse_bool(const std::string& key, const std::string& value, int line) {
    const std::string v = trim(value);
    if (v == "true" || v == "1" || v == "on") {
        return true;
    }
    if (v == "false" || v == "0" || v == "off") {
        return false;
    }
    throw ConfigError(key + ": expected true/false, got '" + v + "'", line);
}

void require(bool ok, const std::string& message, int line) {
    if (!ok) {
        throw ConfigError(message, line);
    }
}

} // namespace

ConfigValues parse_config(const std::string& text) {
    ConfigValues values;
    std::istringstream stream(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(stream, raw)) {
        ++line_no;
        const std::size_t hash = raw.find('#');
        if (hash != std::string::npos) {
            raw.erase(hash);
        }
        const std::string line = trim(raw);
        if (line.empty()) {
            continue;
        }
        const std::size_t eq = line.find('=');
        require(eq != std::string::npos, "expected key=value, got '" + line + "'", line_no);
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        auto set_double = [&](std::optional<double>& slot, auto check,
                              const std::string& what) {
            require(!slot.has_value(), "duplicate key '" + key + "'", line_no);
            const double d = parse_double(key, value, line_no);
            require(check(d), key + ": " + what + ", got " + value, line_no);
            slot = d;
        };

        if (key == "chi_km") {
            set_double(values.chi_km, [](double d) { return d > 0.0; }, "must be > 0");
        } else if (key == "line_intensity") {
            set_double(values.line_intensity, [](double d) { return d >= 0.0; },
                       "must be >= 0");
        } else if (key == "vehicles") {
            require(!values.vehicles.has_value(), "duplicate key '" + key + "'", line_no);
            const int n = parse_int(key, value, line_no);
            require(n >= 0, "vehicles: must be >= 0, got " + value, line_no);
            values.vehicles = n;
        } else if (key == "realizations") {
            require(!values.realizations.has_value(), "duplicate key '" + key + "'",
                    line_no);
            const int n = parse_int(key, value, line_no);
            require(n >= 1, "realizations: must be >= 1, got " + value, line_no);
            values.realizations = n;
        } else if (key == "seed") {
            require(!values.seed.has_value(), "duplicate key '" + key + "'", line_no);
            values.seed = parse_u64(key, value, line_no);
        } else if (key == "freq_ghz") {
            set_double(values.freq_ghz,
                       [](double d) { return d >= 0.5 && d <= 100.0; },
                       "must be in [0.5, 100] GHz");
        } else if (key == "tx_power_dbm") {
            set_double(values.tx_power_dbm, [](double) { return true; }, "");
        } else if (key == "tx_gain_dbi") {
            set_double(values.tx_gain_dbi, [](double) { return true; }, "");
        } else if (key == "rx_gain_dbi") {
            set_double(values.rx_gain_dbi, [](double) { return true; }, "");
        } else if (key == "bandwidth_mhz") {
            set_double(values.bandwidth_mhz, [](double d) { return d > 0.0; },
                       "must be > 0");
        } else if (key == "noise_figure_db") {
            set_double(values.noise_figure_db, [](double d) { return d >= 0.0; },
                       "must be >= 0");
        } else if (key == "snr_threshold_db") {
            set_double(values.snr_threshold_db, [](double) { return true; }, "");
        } else if (key == "los_model") {
            require(!values.los_model.has_value(), "duplicate key '" + key + "'", line_no);
            if (value == "auto") {
                values.los_model = LosChoice::Auto;
            } else if (value == "uma_standard") {
                values.los_model = LosChoice::UmaStandard;
            } else if (value == "uma_aerial") {
                values.los_model = LosChoice::UmaAerial;
            } else if (value == "elevation_sigmoid") {
                values.los_model = LosChoice::ElevationSigmoid;
            } else {
                throw ConfigError("los_model: expected auto, uma_standard, uma_aerial or "
                                  "elevation_sigmoid, got '" +
                                      value + "'",
                                  line_no);
            }
        } else if (key == "shadowing") {
            require(!values.shadowing.has_value(), "duplicate key '" + key + "'", line_no);
            values.shadowing = parse_bool(key, value, line_no);
        } else if (key == "gbs_height_m") {
            set_double(values.gbs_height_m, [](double d) { return d > 0.0; },
                       "must be > 0");
        } else if (key == "abs_heights_m") {
            require(!values.abs_heights_m.has_value(), "duplicate key '" + key + "'",
                    line_no);
            auto list = parse_double_list(key, value, line_no);
            for (double h : list) {
                require(h > 0.0, "abs_heights_m: heights must be > 0", line_no);
            }
            values.abs_heights_m = std::move(list);
        } else if (key == "lambda_grid") {
            require(!values.lambda_grid.has_value(), "duplicate key '" + key + "'",
                    line_no);
            auto list = parse_double_list(key, value, line_no);
            for (double l : list) {
                require(l >= 0.0, "lambda_grid: densities must be >= 0", line_no);
            }
            values.lambda_grid = std::move(list);
        } else if (key == "placement") {
            require(!values.placement.has_value(), "duplicate key '" + key + "'", line_no);
            if (value == "ppp") {
                values.placement = PlacementMode::Ppp;
            } else if (value == "central") {
                values.placement = PlacementMode::Central;
            } else {
                throw ConfigError("placement: expected ppp or central, got '" + value + "'",
                                  line_no);
            }
        } else {
            throw ConfigError("unknown key '" + key + "'", line_no);
        }
    }
    return values;
}

ConfigValues parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

ResolvedExperiment resolve_experiment(const ConfigValues& values, ExperimentKind kind) {
    ResolvedExperiment r;
    r.kind = kind;

    switch (kind) {
    case ExperimentKind::DensitySweep:
        r.base.disc.radius_km = values.chi_km.value_or(1.0);
        r.gbs_height_m = values.gbs_height_m.value_or(25.0);
        r.abs_heights_m = values.abs_heights_m.value_or(std::vector<double>{25, 50, 100});
        r.lambda_grid =
            values.lambda_grid.value_or(std::vector<double>{1, 2, 4, 8, 12});
        r.base.placement = values.placement.value_or(PlacementMode::Ppp);
        break;
    case ExperimentKind::SnrCdf:
        r.base.disc.radius_km = values.chi_km.value_or(2.0);
        r.gbs_height_m = values.gbs_height_m.value_or(25.0);
        r.abs_heights_m = values.abs_heights_m.value_or(std::vector<double>{25, 50, 100});
        r.lambda_grid = values.lambda_grid.value_or(std::vector<double>{1});
        r.base.placement = values.placement.value_or(PlacementMode::Ppp);
        break;
    case ExperimentKind::SeTable:
        r.base.disc.radius_km = values.chi_km.value_or(0.5);
        r.gbs_height_m = values.gbs_height_m.value_or(15.0);
        r.abs_heights_m =
            values.abs_heights_m.value_or(std::vector<double>{40, 60, 80, 100});
        r.lambda_grid = values.lambda_grid.value_or(std::vector<double>{1});
        r.base.placement = values.placement.value_or(PlacementMode::Central);
        break;
    }

    r.base.roads.line_intensity = values.line_intensity.value_or(2.0);
    r.base.vehicle_count = values.vehicles.value_or(200);
    r.base.realizations = values.realizations.value_or(500);
    r.base.master_seed = values.seed.value_or(1);
    r.base.snr_threshold_db = values.snr_threshold_db.value_or(30.0);
    r.base.bs_intensity_per_km2 = r.lambda_grid.front();

    r.base.channel.carrier_freq_ghz = values.freq_ghz.value_or(3.5);
    r.base.channel.tx_power_dbm = values.tx_power_dbm.value_or(23.0);
    r.base.channel.tx_gain_dbi = values.tx_gain_dbi.value_or(10.0);
    r.base.channel.rx_gain_dbi = values.rx_gain_dbi.value_or(2.0);
    r.base.channel.bandwidth_mhz = values.bandwidth_mhz.value_or(20.0);
    r.base.channel.noise_figure_db = values.noise_figure_db.value_or(9.0);
    r.base.channel.shadowing_enabled = values.shadowing.value_or(false);
    r.los_choice = values.los_model.value_or(LosChoice::Auto);

    std::sort(r.lambda_grid.begin(), r.lambda_grid.end());
    std::sort(r.abs_heights_m.begin(), r.abs_heights_m.end());

    auto resolve_model = [&](StationKind station_kind) {
        switch (r.los_choice) {
        case LosChoice::Auto:
            return default_los_model(station_kind);
        case LosChoice::UmaStandard:
            return LosModel::UmaStandard;
        case LosChoice::UmaAerial:
            return LosModel::UmaAerialHeightDependent;
        case LosChoice::ElevationSigmoid:
            return LosModel::ElevationSigmoid;
        }
        return default_los_model(station_kind);
    };

    r.variants.push_back({StationKind::GBS, r.gbs_height_m, resolve_model(StationKind::GBS)});
    for (double h : r.abs_heights_m) {
        r.variants.push_back({StationKind::ABS, h, resolve_model(StationKind::ABS)});
    }
    return r;
}

namespace {

std::string full_precision(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string full_precision_list(const std::vector<double>& list) {
    std::string out;
    for (std::size_t i = 0; i < list.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += full_precision(list[i]);
    }
    return out;
}

const char* los_choice_name(LosChoice c) {
    switch (c) {
    case LosChoice::Auto:
        return "auto";
    case LosChoice::UmaStandard:
        return "uma_standard";
    case LosChoice::UmaAerial:
        return "uma_aerial";
    case LosChoice::ElevationSigmoid:
        return "elevation_sigmoid";
    }
    return "auto";
}

} // namespace

std::string emit_config_echo(const ResolvedExperiment& r) {
    std::string out;
    out += "chi_km=" + full_precision(r.base.disc.radius_km) + "\n";
    out += "line_intensity=" + full_precision(r.base.roads.line_intensity) + "\n";
    out += "vehicles=" + std::to_string(r.base.vehicle_count) + "\n";
    out += "realizations=" + std::to_string(r.base.realizations) + "\n";
    out += "seed=" + std::to_string(r.base.master_seed) + "\n";
    out += "freq_ghz=" + full_precision(r.base.channel.carrier_freq_ghz) + "\n";
    out += "tx_power_dbm=" + full_precision(r.base.channel.tx_power_dbm) + "\n";
    out += "tx_gain_dbi=" + full_precision(r.base.channel.tx_gain_dbi) + "\n";
    out += "rx_gain_dbi=" + full_precision(r.base.channel.rx_gain_dbi) + "\n";
    out += "bandwidth_mhz=" + full_precision(r.base.channel.bandwidth_mhz) + "\n";
    out += "noise_figure_db=" + full_precision(r.base.channel.noise_figure_db) + "\n";
    out += "snr_threshold_db=" + full_precision(r.base.snr_threshold_db) + "\n";
    out += std::string("los_model=") + los_choice_name(r.los_choice) + "\n";
    out += std::string("shadowing=") + (r.base.channel.shadowing_enabled ? "true" : "false") +
           "\n";
    out += "gbs_height_m=" + full_precision(r.gbs_height_m) + "\n";
    out += "abs_heights_m=" + full_precision_list(r.abs_heights_m) + "\n";
    out += "lambda_grid=" + full_precision_list(r.lambda_grid) + "\n";
    out += std::string("placement=") +
           (r.base.placement == PlacementMode::Ppp ? "ppp" : "central") + "\n";
    return out;
}

bool operator==(const ResolvedExperiment& a, const ResolvedExperiment& b) {
    auto variant_eq = [](const Variant& x, const Variant& y) {
        return x.kind == y.kind && x.height_m == y.height_m && x.los_model == y.los_model;
    };
    if (a.variants.size() != b.variants.size()) {
        return false;
    }
    for (std::size_t i = 0; i < a.variants.size(); ++i) {
        if (!variant_eq(a.variants[i], b.variants[i])) {
            return false;
        }
    }
    const ChannelParams& ca = a.base.channel;
    const ChannelParams& cb = b.base.channel;
    return a.kind == b.kind && a.los_choice == b.los_choice &&
           a.gbs_height_m == b.gbs_height_m && a.abs_heights_m == b.abs_heights_m &&
           a.lambda_grid == b.lambda_grid &&
           a.base.disc.radius_km == b.base.disc.radius_km &&
           a.base.roads.line_intensity == b.base.roads.line_intensity &&
           a.base.vehicle_count == b.base.vehicle_count &&
           a.base.realizations == b.base.realizations &&
           a.base.master_seed == b.base.master_seed &&
           a.base.snr_threshold_db == b.base.snr_threshold_db &&
           a.base.placement == b.base.placement &&
           a.base.bs_intensity_per_km2 == b.base.bs_intensity_per_km2 &&
           ca.carrier_freq_ghz == cb.carrier_freq_ghz &&
           ca.tx_power_dbm == cb.tx_power_dbm && ca.tx_gain_dbi == cb.tx_gain_dbi &&
           ca.rx_gain_dbi == cb.rx_gain_dbi && ca.bandwidth_mhz == cb.bandwidth_mhz &&
           ca.noise_figure_db == cb.noise_figure_db &&
           ca.shadowing_enabled == cb.shadowing_enabled;
}

} // namespace roadcov
