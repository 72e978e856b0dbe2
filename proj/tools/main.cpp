#include <cstdio>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "roadcov/channel.hpp"
#include "roadcov/csv.hpp"
#include "roadcov/errors.hpp"

namespace {

struct CommonOptions {
    std::string config_path;
    std::string out_dir = ".";
    std::uint64_t seed = 0;
    CLI::Option* seed_opt = nullptr;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    bool plot = false;

    bool seed_set() const { return seed_opt != nullptr && seed_opt->count() > 0; }
};

void add_common_options(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("--config", opts.config_path, "Config file (key=value lines)")
        ->check(CLI::ExistingFile);
    cmd->add_option("--out", opts.out_dir, "Output directory")->capture_default_str();
    opts.seed_opt =
        cmd->add_option("--seed", opts.seed, "Master seed, overrides the config's seed");
    cmd->add_option("--threads", opts.threads, "Worker threads for realizations")
        ->capture_default_str();
    cmd->add_flag("--plot", opts.plot, "Run gnuplot on the emitted script");
}

void print_summary(const std::vector<roadcov::ExperimentResult>& results,
                   roadcov::ExperimentKind kind) {
    using roadcov::ExperimentKind;
    for (const auto& r : results) {
        switch (kind) {
        case ExperimentKind::DensitySweep:
            std::printf("%-7s lambda=%-5g CP=%.4f +- %.4f\n", r.label.c_str(),
                        r.lambda_per_km2, r.summary.coverage_prob,
                        r.summary.coverage_stderr);
            break;
        case ExperimentKind::SnrCdf:
            std::printf("%-7s mean SNR=%.3f dB +- %.3f  CP(threshold)=%.4f\n",
                        r.label.c_str(), r.summary.mean_snr_db, r.summary.mean_snr_stderr,
                        r.summary.coverage_prob);
            break;
        case ExperimentKind::SeTable:
            std::printf("%-7s SE=%.4f bit/s/Hz +- %.4f\n", r.label.c_str(),
                        r.summary.mean_se, r.summary.se_stderr);
            break;
        }
    }
}

void report_channel_warnings() {
    const auto& w = roadcov::channel_warnings();
    const auto clamped_heights = w.aerial_height_clamped.load();
    const auto clamped_distances = w.distance_clamped.load();
    if (clamped_heights > 0) {
        std::fprintf(stderr,
                     "warning: %llu link(s) used an aerial height outside (22.5, 100] m; "
                     "clamped to the boundary\n",
                     static_cast<unsigned long long>(clamped_heights));
    }
    if (clamped_distances > 0) {
        std::fprintf(stderr,
                     "warning: %llu link(s) closer than 1 m horizontally; distance "
                     "clamped to 1 m\n",
                     static_cast<unsigned long long>(clamped_distances));
    }
}

int run_experiment(roadcov::ExperimentKind kind, const CommonOptions& opts) {
    using namespace roadcov;

    ConfigValues values;
    try {
        if (!opts.config_path.empty()) {
            values = parse_config_file(opts.config_path);
        }
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 1;
    }

    ResolvedExperiment resolved = resolve_experiment(values, kind);
    if (opts.seed_set()) {
        resolved.base.master_seed = opts.seed;
    }

    channel_warnings().reset();
    try {
        std::vector<ExperimentResult> results;
        switch (kind) {
        case ExperimentKind::DensitySweep:
            results = density_sweep(resolved.base, resolved.lambda_grid,
                                    resolved.variants, opts.threads);
            break;
        case ExperimentKind::SnrCdf:
            results = cdf_experiment(resolved.base, resolved.variants, opts.threads);
            break;
        case ExperimentKind::SeTable:
            results = se_height_table(resolved.base, resolved.variants, opts.threads);
            break;
        }

        const EmittedFiles files = emit_results(resolved, results, opts.out_dir);
        print_summary(results, kind);
        std::printf("wrote %s, %s, %s\n", files.csv.c_str(), files.plot_script.c_str(),
                    files.config_echo.c_str());
        report_channel_warnings();

        if (opts.plot) {
            const std::string cmd = "gnuplot '" + files.plot_script + "'";
            if (std::system(cmd.c_str()) != 0) {
                std::fprintf(stderr, "warning: gnuplot failed or is not installed; "
                                     "plot script left at %s\n",
                             files.plot_script.c_str());
            }
        }
        return 0;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Monte Carlo coverage simulator for road vehicles served by "
                 "terrestrial and aerial base stations"};
    app.require_subcommand(1);

    CommonOptions sweep_opts;
    CLI::App* sweep = app.add_subcommand(
        "sweep-density", "Coverage probability vs. station density");
    add_common_options(sweep, sweep_opts);

    CommonOptions cdf_opts;
    CLI::App* cdf = app.add_subcommand("snr-cdf", "Pooled SNR distribution per variant");
    add_common_options(cdf, cdf_opts);

    CommonOptions se_opts;
    CLI::App* se = app.add_subcommand(
        "se-table", "Spectral efficiency vs. station height, central placement");
    add_common_options(se, se_opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (sweep->parsed()) {
        return run_experiment(roadcov::ExperimentKind::DensitySweep, sweep_opts);
    }
    if (cdf->parsed()) {
        return run_experiment(roadcov::ExperimentKind::SnrCdf, cdf_opts);
    }
    return run_experiment(roadcov::ExperimentKind::SeTable, se_opts);
}
