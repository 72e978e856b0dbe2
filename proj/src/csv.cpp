#include "roadcov/csv.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace roadcov {

namespace {

std::string sig6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

const char* kind_name(StationKind k) {
    return k == StationKind::GBS ? "GBS" : "ABS";
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    out << content;
    if (!out) {
        throw std::runtime_error("failed while writing '" + path + "'");
    }
}

} // namespace

std::string experiment_stem(ExperimentKind kind) {
    switch (kind) {
    case ExperimentKind::DensitySweep:
        return "density_sweep";
    case ExperimentKind::SnrCdf:
        return "snr_cdf";
    case ExperimentKind::SeTable:
        return "se_table";
    }
    return "experiment";
}

std::string render_csv(ExperimentKind kind, const std::vector<ExperimentResult>& results) {
    std::string out;
    switch (kind) {
    case ExperimentKind::DensitySweep:
        out = "bs_kind,height_m,lambda_per_km2,coverage_prob,coverage_stderr\n";
        for (const ExperimentResult& r : results) {
            out += kind_name(r.kind);
            out += "," + sig6(r.height_m) + "," + sig6(r.lambda_per_km2) + "," +
                   sig6(r.summary.coverage_prob) + "," + sig6(r.summary.coverage_stderr) +
                   "\n";
        }
        break;
    case ExperimentKind::SnrCdf:
        out = "bs_kind,height_m,snr_db,cdf\n";
        for (const ExperimentResult& r : results) {
            for (const CdfPoint& p : r.summary.cdf_points) {
                out += kind_name(r.kind);
                out += "," + sig6(r.height_m) + "," + sig6(p.snr_db) + "," +
                       sig6(p.fraction) + "\n";
            }
        }
        break;
    case ExperimentKind::SeTable:
        out = "bs_kind,height_m,se_bits_per_hz,se_stderr\n";
        for (const ExperimentResult& r : results) {
            out += kind_name(r.kind);
            out += "," + sig6(r.height_m) + "," + sig6(r.summary.mean_se) + "," +
                   sig6(r.summary.se_stderr) + "\n";
        }
        break;
    }
    return out;
}

namespace {

// One (kind, height) pair per curve, in first-seen order.
std::vector<std::pair<StationKind, double>>
unique_variants(const std::vector<ExperimentResult>& results) {
    std::vector<std::pair<StationKind, double>> out;
    for (const ExperimentResult& r : results) {
        const std::pair<StationKind, double> v{r.kind, r.height_m};
        bool seen = false;
        for (const auto& u : out) {
            if (u == v) {
                seen = true;
                break;
            }
        }
        if (!seen) {
            out.push_back(v);
        }
    }
    return out;
}

std::string curve_expr(StationKind kind, double height, int value_column) {
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "((strcol(1) eq '%s' && column(2) == %g) ? column(%d) : NaN)",
                  kind_name(kind), height, value_column);
    return buf;
}

} // namespace

std::string render_plot_script(ExperimentKind kind,
                               const std::vector<ExperimentResult>& results) {
    const std::string stem = experiment_stem(kind);
    const std::string csv = stem + ".csv";
    std::string out;
    out += "# gnuplot script for " + csv + "\n";
    out += "set datafile separator ','\n";
    out += "set datafile missing NaN\n";
    out += "set key outside right\n";
    out += "set grid\n";
    out += "set term pngcairo size 900,600\n";
    out += "set output '" + stem + ".png'\n";

    const auto variants = unique_variants(results);
    switch (kind) {
    case ExperimentKind::DensitySweep: {
        out += "set xlabel 'station density (per km^2)'\n";
        out += "set ylabel 'coverage probability'\n";
        out += "set yrange [0:1]\n";
        out += "plot \\\n";
        for (std::size_t i = 0; i < variants.size(); ++i) {
            const auto& [k, h] = variants[i];
            out += "  '" + csv + "' skip 1 using 3:" + curve_expr(k, h, 4) +
                   " with linespoints title '" + variant_label(k, h) + "'";
            out += i + 1 < variants.size() ? ", \\\n" : "\n";
        }
        break;
    }
    case ExperimentKind::SnrCdf: {
        out += "set xlabel 'SNR (dB)'\n";
        out += "set ylabel 'CDF'\n";
        out += "set yrange [0:1]\n";
        out += "plot \\\n";
        for (std::size_t i = 0; i < variants.size(); ++i) {
            const auto& [k, h] = variants[i];
            out += "  '" + csv + "' skip 1 using 3:" + curve_expr(k, h, 4) +
                   " with lines title '" + variant_label(k, h) + "'";
            out += i + 1 < variants.size() ? ", \\\n" : "\n";
        }
        break;
    }
    case ExperimentKind::SeTable: {
        out += "set xlabel 'station height (m)'\n";
        out += "set ylabel 'spectral efficiency (bit/s/Hz)'\n";
        out += "plot \\\n";
        out += "  '" + csv +
               "' skip 1 using 2:((strcol(1) eq 'ABS') ? column(3) : NaN):4 "
               "with yerrorlines title 'ABS', \\\n";
        out += "  '" + csv +
               "' skip 1 using 2:((strcol(1) eq 'GBS') ? column(3) : NaN):4 "
               "with yerrorbars title 'GBS'\n";
        break;
    }
    }
    return out;
}

EmittedFiles emit_results(const ResolvedExperiment& resolved,
                          const std::vector<ExperimentResult>& results,
                          const std::string& out_dir) {
    if (results.empty()) {
        throw std::runtime_error("emit_results: no results");
    }
    std::filesystem::path dir(out_dir.empty() ? "." : out_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec); // best effort; open() reports failures

    const std::string stem = experiment_stem(resolved.kind);
    EmittedFiles files;
    files.csv = (dir / (stem + ".csv")).string();
    files.plot_script = (dir / (stem + ".gp")).string();
    files.config_echo = (dir / (stem + "_config.txt")).string();

    write_file(files.csv, render_csv(resolved.kind, results));
    write_file(files.plot_script, render_plot_script(resolved.kind, results));
    write_file(files.config_echo, emit_config_echo(resolved));
    return files;
}

} // namespace roadcov
