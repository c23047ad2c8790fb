// loopconv: sampling, verification and hull experiments for based loops in SU(n).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "loopconv/experiments.hpp"
#include "loopconv/io.hpp"
#include "loopconv/svg.hpp"

using namespace loopconv;

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void add_config_flags(CLI::App* cmd, ExperimentConfig& cfg, std::vector<std::string>& tol_overrides) {
    cmd->add_option("--n", cfg.n, "SU(n) rank parameter (2..4)")->capture_default_str();
    cmd->add_option("--samples", cfg.samples, "number of accepted samples")->capture_default_str();
    cmd->add_option("--depth", cfg.depth, "maximum number of coweight factors per loop")->capture_default_str();
    cmd->add_option("--max-norm", cfg.max_coweight_norm, "maximum |entry| of each coweight")->capture_default_str();
    cmd->add_option("--e-cut", cfg.e_cut, "energy cutoff for samples")->capture_default_str();
    cmd->add_option("--seed", cfg.seed, "root seed")->capture_default_str();
    cmd->add_option("--threads", cfg.threads, "worker threads (0: all cores)")->capture_default_str();
    cmd->add_option("--tol", tol_overrides, "tolerance override NAME=VALUE (repeatable)");
}

void apply_overrides(ExperimentConfig& cfg, const std::vector<std::string>& overrides) {
    for (const auto& o : overrides) {
        const auto eq = o.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError("--tol expects NAME=VALUE, got '" + o + "'");
        try {
            cfg.tolerances[o.substr(0, eq)] = std::stod(o.substr(eq + 1));
        } catch (const std::exception&) {
            throw UsageError("--tol value is not a number: '" + o + "'");
        }
    }
    try {
        cfg.validate();
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
}

// Writes to the named file, or stdout for "-" or an empty name.
void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot open " + path + " for writing");
    f << text;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw UsageError("cannot open " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::string csv_of(const std::vector<DeltaPoint>& pts, int n) {
    std::ostringstream out;
    write_delta_csv(out, pts, n);
    return out.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Numerical laboratory for based algebraic loops in SU(n)"};
    app.require_subcommand(1);

    ExperimentConfig cfg;
    std::vector<std::string> tol_overrides;
    std::string out_path, in_path, loops_path, vertices_path, report_path, hull_prefix, dump_path, title;
    bool real_locus = false;
    int radius = 3;
    double threshold = -1.0;

    auto* sample = app.add_subcommand("sample", "write Delta-points of sampled loops as CSV");
    add_config_flags(sample, cfg, tol_overrides);
    sample->add_option("--out", out_path, "CSV output (default stdout)");
    sample->add_option("--loops-out", loops_path, "also write the sampled loops as JSON lines");
    sample->add_flag("--real", real_locus, "sample the real locus (real coefficients)");

    auto* verify = app.add_subcommand("verify", "run every invariant suite");
    add_config_flags(verify, cfg, tol_overrides);
    verify->add_option("--report", report_path, "also write the report to this file");

    auto* duis = app.add_subcommand("duistermaat", "compare full and real-locus Delta-hulls");
    add_config_flags(duis, cfg, tol_overrides);
    duis->add_option("--hull-out", hull_prefix, "write PREFIX_full.json and PREFIX_real.json");
    duis->add_option("--threshold", threshold, "exit 1 if the Hausdorff distance exceeds this");

    auto* grass = app.add_subcommand("grassmann-check", "Grassmannian model and symplectic embedding suites");
    add_config_flags(grass, cfg, tol_overrides);
    grass->add_option("--radius", radius, "coweight radius of the weight table")->capture_default_str();
    grass->add_option("--dump", dump_path, "write the embedded first sample loop as JSON");

    auto* verts = app.add_subcommand("vertices", "coweight moments over the lattice ball, as CSV");
    verts->add_option("--n", cfg.n, "SU(n) rank parameter (2..4)")->capture_default_str();
    verts->add_option("--radius", radius, "max |entry| of the coweights")->capture_default_str();
    verts->add_option("--out", out_path, "CSV output (default stdout)");

    auto* plot = app.add_subcommand("plot", "SVG scatter of Delta-points with vertex overlay");
    plot->add_option("--in", in_path, "Delta-point CSV")->required();
    plot->add_option("--vertices", vertices_path, "vertex CSV (default: coweights within --radius)");
    plot->add_option("--radius", radius, "coweight radius when --vertices is absent")->capture_default_str();
    plot->add_option("--title", title, "plot title");
    plot->add_option("--out", out_path, "SVG output (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return kUsage;
    }

    try {
        if (*sample) {
            apply_overrides(cfg, tol_overrides);
            const auto pts = sample_points(cfg, real_locus);
            std::vector<DeltaPoint> deltas;
            for (const auto& p : pts) deltas.push_back(p.delta);
            emit(out_path, csv_of(deltas, cfg.n));
            if (!loops_path.empty()) {
                std::string text;
                for (const auto& p : pts) {
                    const LoopPoly g = sample_loop(sample_seed(cfg, p.index), cfg.n, p.depth,
                                                   cfg.max_coweight_norm, real_locus);
                    text += loop_to_json(g) + '\n';
                }
                emit(loops_path, text);
            }
            return kOk;
        }
        if (*verify) {
            apply_overrides(cfg, tol_overrides);
            const VerifyReport r = run_verify(cfg);
            const std::string text = r.format();
            std::cout << text;
            if (!report_path.empty()) emit(report_path, text);
            return r.all_passed() ? kOk : kVerifyFailed;
        }
        if (*duis) {
            apply_overrides(cfg, tol_overrides);
            const DuistermaatResult r = duistermaat(cfg);
            std::printf("samples %d\nfull_extremes %zu\nreal_extremes %zu\nhausdorff %.17g\ntorus_hausdorff %.17g\n",
                        r.samples, r.full.extremes.size(), r.real.extremes.size(), r.hausdorff, r.torus_hausdorff);
            if (!hull_prefix.empty()) {
                emit(hull_prefix + "_full.json", hull_to_json(r.full) + "\n");
                emit(hull_prefix + "_real.json", hull_to_json(r.real) + "\n");
            }
            return threshold >= 0.0 && r.hausdorff > threshold ? kVerifyFailed : kOk;
        }
        if (*grass) {
            apply_overrides(cfg, tol_overrides);
            const VerifyReport r = run_grassmann_suites(cfg);
            std::cout << r.format();
            std::cout << "\nrotation weight of embedded coweight loops (relative to the identity)\n";
            std::cout << "rep          coweight        weight  energy\n";
            for (const auto& row : weight_table(cfg.n, radius)) {
                std::string lam = "(";
                for (int i = 0; i < row.lambda.size(); ++i) lam += (i ? "," : "") + std::to_string(row.lambda[i]);
                lam += ")";
                std::printf("%-12s %-15s %6ld  %.17g\n", row.rep == Rep::Adjoint ? "adjoint" : "fundamental",
                            lam.c_str(), row.weight, row.energy);
            }
            if (!dump_path.empty()) {
                const LoopPoly g = sample_loop(sample_seed(cfg, 0), cfg.n, sample_depth(cfg, 0),
                                               cfg.max_coweight_norm, false);
                const int deg = rep_degree(Rep::Adjoint, g);
                const Window w = Window::make(-std::max(deg, 1), deg, fiber_dim(Rep::Adjoint, cfg.n));
                emit(dump_path, grass_point_to_json(embed(g, Rep::Adjoint, w)) + "\n");
            }
            return r.all_passed() ? kOk : kVerifyFailed;
        }
        if (*verts) {
            if (cfg.n < 2 || cfg.n > 4) throw UsageError("n must be between 2 and 4");
            if (radius < 0) throw UsageError("radius must be nonnegative");
            emit(out_path, csv_of(coweight_vertices(cfg.n, radius), cfg.n));
            return kOk;
        }
        if (*plot) {
            std::istringstream in(slurp(in_path));
            const auto pts = read_delta_csv(in);
            std::vector<DeltaPoint> vs;
            if (!vertices_path.empty()) {
                std::istringstream vin(slurp(vertices_path));
                vs = read_delta_csv(vin);
            } else if (!pts.empty()) {
                vs = coweight_vertices(static_cast<int>(pts.front().v.v.size()), radius);
            }
            PlotOptions opts;
            opts.title = title;
            emit(out_path, render_delta_svg(pts, vs, opts));
            return kOk;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n\n" << app.help();
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
