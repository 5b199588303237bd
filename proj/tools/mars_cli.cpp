// Command-line frontend: generate / solve / bench / hist / convert.
//
// Exit codes: 0 success, 2 usage error, 3 input/data error, 4 runtime error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mars/errors.hpp"
#include "mars/io.hpp"
#include "mars/model.hpp"
#include "mars/runner.hpp"
#include "mars/solvers.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;
constexpr int kExitRuntime = 4;

using nlohmann::json;

struct SolveOptions {
    std::string input;
    std::string format = "auto";
    std::string solver = "mars";
    std::int64_t runs = 1;
    std::uint64_t seed = 1;
    int workers = 0;
    std::string out;
    std::string report = "human";
    std::string detail = "energies";
    bool no_volatile = false;
    bool progress = false;

    // mars
    mars::MarsParams mars;
    std::string start_mode = "grid";
    // sa
    mars::SaParams sa;
    std::string sa_schedule = "geometric";
    // mfa
    mars::MfaParams mfa;
    // nmfa
    double nmfa_alpha = 0.15, nmfa_noise = 0.15, nmfa_thi = 2.0, nmfa_tlo = 0.02;
    std::int64_t nmfa_iters = 1000, nmfa_points = 64;
    // simcim
    double simcim_step = 0.1, simcim_noise = 0.03, simcim_pump_from = -2.0, simcim_pump_to = 1.0;
    std::int64_t simcim_iters = 1000, simcim_points = 64;
};

int env_workers() {
    if (const char* v = std::getenv("MARS_WORKERS")) {
        try {
            return std::max(0, std::stoi(v));
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring invalid MARS_WORKERS='" << v << "'\n";
        }
    }
    return 0;
}

std::optional<mars::InstanceFormat> forced_format(const std::string& fmt) {
    if (fmt == "gset") return mars::InstanceFormat::GsetGraph;
    if (fmt == "matrix") return mars::InstanceFormat::DenseMatrix;
    return std::nullopt;
}

mars::SolverParams build_params(const SolveOptions& o) {
    if (o.solver == "mars") {
        mars::MarsParams p = o.mars;
        p.start_mode = o.start_mode == "random" ? mars::StartMode::UniformRandom
                                                : mars::StartMode::GridSweep;
        return p;
    }
    if (o.solver == "sa") {
        mars::SaParams p = o.sa;
        p.schedule = o.sa_schedule == "linear" ? mars::CoolingSchedule::Linear
                                               : mars::CoolingSchedule::Geometric;
        return p;
    }
    if (o.solver == "mfa") return o.mfa;
    if (o.solver == "nmfa") {
        mars::NmfaParams p;
        p.alpha = o.nmfa_alpha;
        p.noise_sigma = o.nmfa_noise;
        p.iters = o.nmfa_iters;
        p.schedule = mars::linear_schedule(o.nmfa_thi, o.nmfa_tlo, o.nmfa_points);
        return p;
    }
    mars::SimCimParams p;
    p.step_size = o.simcim_step;
    p.noise_sigma = o.simcim_noise;
    p.iters = o.simcim_iters;
    p.pump_schedule = mars::linear_schedule(o.simcim_pump_from, o.simcim_pump_to, o.simcim_points);
    return p;
}

// Effective-configuration banner; every run is reproducible from this line.
void print_banner(const std::string& cmd, const std::vector<std::pair<std::string, std::string>>& kv) {
    std::cout << "# mars " << cmd;
    for (const auto& [k, v] : kv) std::cout << ' ' << k << '=' << v;
    std::cout << '\n';
}

// Frozen CSV column order; new columns are only ever appended.
const char* kCsvHeader =
    "instance,solver,n,runs,completed,skipped,failed,best_energy,mean_energy,best_cut,mean_cut,"
    "hit_count,success_probability,total_seconds,mean_seconds_per_run,status,error,winner";

std::string csv_row(const std::string& instance, const std::string& solver, int n,
                    std::int64_t runs, const mars::BatchStats* stats, const std::string& error,
                    bool winner) {
    std::ostringstream ss;
    ss.precision(17);
    ss << instance << ',' << solver << ',' << n << ',' << runs << ',';
    if (stats) {
        ss << stats->completed_runs << ',' << stats->skipped_runs << ',' << stats->failed_runs
           << ',' << stats->best_energy << ',' << stats->mean_energy << ',' << stats->best_cut
           << ',' << stats->mean_cut << ',' << stats->hit_count << ','
           << stats->success_probability << ',' << stats->total_seconds << ','
           << stats->mean_seconds_per_run << ",ok,,";
    } else {
        ss << ",,,,,,,,,,,failed," << error << ',';
    }
    ss << (winner ? 1 : 0);
    return ss.str();
}

void print_stats_human(const std::string& instance, const std::string& solver,
                       const mars::BatchStats& s) {
    std::cout << "instance      : " << instance << "\n"
              << "solver        : " << solver << "\n"
              << "runs          : " << s.completed_runs << " completed, " << s.skipped_runs
              << " skipped, " << s.failed_runs << " failed\n";
    std::cout.precision(12);
    std::cout << "f_best        : " << s.best_energy << "\n"
              << "f_avg         : " << s.mean_energy << "\n"
              << "best cut      : " << s.best_cut << "\n"
              << "mean cut      : " << s.mean_cut << "\n"
              << "hit count     : " << s.hit_count << "\n"
              << "P             : " << s.success_probability << "\n";
    std::cout.precision(4);
    std::cout << "t(s) total    : " << s.total_seconds << "\n"
              << "t(s) per run  : " << s.mean_seconds_per_run << "\n";
}

json stats_to_json(const std::string& instance, const std::string& solver,
                   const mars::BatchStats& s) {
    json j;
    j["instance"] = instance;
    j["solver"] = solver;
    j["completed_runs"] = s.completed_runs;
    j["skipped_runs"] = s.skipped_runs;
    j["failed_runs"] = s.failed_runs;
    j["best_energy"] = s.best_energy;
    j["mean_energy"] = s.mean_energy;
    j["best_cut"] = s.best_cut;
    j["mean_cut"] = s.mean_cut;
    j["hit_count"] = s.hit_count;
    j["success_probability"] = s.success_probability;
    j["total_seconds"] = s.total_seconds;
    j["mean_seconds_per_run"] = s.mean_seconds_per_run;
    return j;
}

int cmd_generate(int n, std::uint64_t seed, const std::string& out) {
    print_banner("generate", {{"n", std::to_string(n)},
                              {"seed", std::to_string(seed)},
                              {"out", out}});
    const mars::IsingProblem p = mars::generate_sk(n, seed);
    mars::write_matrix_file(p, out);
    std::cout << "wrote SK(" << n << ") instance to " << out << "\n";
    return kExitOk;
}

int cmd_solve(const SolveOptions& o) {
    const mars::SolverParams params = build_params(o);
    std::vector<std::pair<std::string, std::string>> banner = {
        {"input", o.input},   {"format", o.format},  {"solver", o.solver},
        {"runs", std::to_string(o.runs)}, {"seed", std::to_string(o.seed)},
        {"workers", std::to_string(o.workers)}, {"report", o.report},
        {"detail", o.detail}, {"no_volatile", o.no_volatile ? "1" : "0"},
        {"out", o.out.empty() ? "-" : o.out}};
    const json pj = mars::solver_params_to_json(params);
    for (const auto& [k, v] : pj.items())
        banner.emplace_back(k, v.is_string() ? v.get<std::string>() : v.dump());
    print_banner("solve", banner);

    const mars::LoadedProblem loaded = mars::load_problem(o.input, forced_format(o.format));
    const mars::IsingProblem& problem = loaded.problem;

    mars::BatchSpec spec;
    spec.params = params;
    spec.runs = o.runs;
    spec.base_seed = o.seed;
    spec.workers = o.workers;

    mars::ProgressFn progress;
    if (o.progress) {
        progress = [](std::int64_t idx, double best) {
            std::cerr << "\rrun " << idx << "  best " << best << std::flush;
        };
    }
    const mars::BatchStats stats = mars::run_batch(problem, spec, progress);
    if (o.progress) std::cerr << "\n";

    if (o.report == "csv") {
        std::cout << kCsvHeader << "\n"
                  << csv_row(o.input, o.solver, problem.size(), mars::effective_runs(spec),
                             &stats, "", true)
                  << "\n";
    } else if (o.report == "json") {
        std::cout << stats_to_json(o.input, o.solver, stats).dump(2) << "\n";
    } else {
        print_stats_human(o.input, o.solver, stats);
    }

    if (!o.out.empty()) {
        const mars::DocDetail detail = o.detail == "full"      ? mars::DocDetail::Full
                                       : o.detail == "summary" ? mars::DocDetail::Summary
                                                               : mars::DocDetail::Energies;
        const mars::ResultDocument doc =
            mars::make_result_document(o.input, problem, params, stats, detail, !o.no_volatile);
        mars::save_result(doc, o.out);
        std::cout << "wrote result document to " << o.out << "\n";
    }
    return kExitOk;
}

struct BenchConfig {
    std::vector<std::string> instances;
    std::vector<mars::SolverParams> solvers;
    std::int64_t runs = 1;
    std::uint64_t seed = 1;
    int workers = 0;
};

BenchConfig load_bench_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw mars::InputError("cannot open '" + path + "'");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::exception& e) {
        throw mars::ParseError(std::string("invalid bench config: ") + e.what());
    }
    try {
        BenchConfig cfg;
        cfg.instances = j.at("instances").get<std::vector<std::string>>();
        cfg.runs = j.value("runs", std::int64_t{1});
        cfg.seed = j.value("seed", std::uint64_t{1});
        cfg.workers = j.value("workers", 0);
        for (const json& s : j.at("solvers")) {
            const std::string name = s.at("solver").get<std::string>();
            json params = s;
            params.erase("solver");
            // Convenience expansions for schedule endpoints.
            if (name == "nmfa" && !params.contains("schedule")) {
                const double hi = params.value("t_hi", 2.0);
                const double lo = params.value("t_lo", 0.02);
                const std::int64_t pts = params.value("points", std::int64_t{64});
                params["schedule"] = mars::linear_schedule(hi, lo, pts);
                params.erase("t_hi"); params.erase("t_lo"); params.erase("points");
            }
            if (name == "simcim" && !params.contains("pump_schedule")) {
                const double from = params.value("pump_from", -2.0);
                const double to = params.value("pump_to", 1.0);
                const std::int64_t pts = params.value("points", std::int64_t{64});
                params["pump_schedule"] = mars::linear_schedule(from, to, pts);
                params.erase("pump_from"); params.erase("pump_to"); params.erase("points");
            }
            cfg.solvers.push_back(mars::solver_params_from_json(name, params));
        }
        if (cfg.instances.empty() || cfg.solvers.empty())
            throw mars::InputError("bench config needs at least one instance and one solver");
        return cfg;
    } catch (const json::exception& e) {
        throw mars::ParseError(std::string("malformed bench config: ") + e.what());
    }
}

int cmd_bench(const std::string& config_path, const std::string& report, const std::string& out,
              int workers_override, bool workers_set) {
    print_banner("bench", {{"config", config_path},
                           {"report", report},
                           {"out", out.empty() ? "-" : out}});
    BenchConfig cfg = load_bench_config(config_path);
    if (workers_set) cfg.workers = workers_override;

    std::ostringstream body;
    body.precision(17);
    json jrows = json::array();
    std::size_t total_rows = 0, failed_rows = 0;

    if (report == "csv") body << kCsvHeader << "\n";
    for (const std::string& inst : cfg.instances) {
        std::vector<mars::ComparisonRow> rows;
        int winner = -1;
        int n = 0;
        try {
            const mars::LoadedProblem loaded = mars::load_problem(inst);
            n = loaded.problem.size();
            std::vector<mars::BatchSpec> specs;
            for (const mars::SolverParams& sp : cfg.solvers)
                specs.push_back({sp, cfg.runs, cfg.seed, cfg.workers});
            mars::Comparison cmp = mars::compare_solvers(loaded.problem, specs);
            rows = std::move(cmp.rows);
            winner = cmp.winner;
        } catch (const std::exception& e) {
            // Instance-level failure: one failed row per configured solver.
            for (const mars::SolverParams& sp : cfg.solvers) {
                mars::ComparisonRow row;
                row.solver = mars::solver_name(sp);
                row.failed = true;
                row.error = e.what();
                rows.push_back(std::move(row));
            }
        }
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            const mars::ComparisonRow& row = rows[static_cast<std::size_t>(r)];
            ++total_rows;
            if (row.failed) ++failed_rows;
            if (report == "csv") {
                body << csv_row(inst, row.solver, n, cfg.runs,
                                row.failed ? nullptr : &row.stats, row.error, r == winner)
                     << "\n";
            } else if (report == "json") {
                json jr = row.failed ? json{{"instance", inst},
                                            {"solver", row.solver},
                                            {"error", row.error}}
                                     : stats_to_json(inst, row.solver, row.stats);
                jr["winner"] = (r == winner);
                jrows.push_back(std::move(jr));
            } else {
                body << "--- " << inst << " / " << row.solver
                     << (r == winner ? "  [winner]" : "") << "\n";
                if (row.failed) {
                    body << "failed: " << row.error << "\n";
                } else {
                    std::ostringstream tmp;
                    std::streambuf* old = std::cout.rdbuf(tmp.rdbuf());
                    print_stats_human(inst, row.solver, row.stats);
                    std::cout.rdbuf(old);
                    body << tmp.str();
                }
            }
        }
    }
    if (report == "json") body << jrows.dump(2) << "\n";

    if (out.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream f(out);
        if (!f) throw mars::InputError("cannot write '" + out + "'");
        f << body.str();
        std::cout << "wrote bench report to " << out << "\n";
    }
    if (failed_rows) std::cerr << failed_rows << " of " << total_rows << " rows failed\n";
    return failed_rows == total_rows ? kExitRuntime : kExitOk;
}

int cmd_hist(const std::string& input, std::int64_t bins, const std::string& out) {
    print_banner("hist", {{"input", input},
                          {"bins", std::to_string(bins)},
                          {"out", out.empty() ? "-" : out}});
    const mars::ResultDocument doc = mars::load_result(input);
    if (doc.stats.energies.empty())
        throw mars::InputError(
            "result document '" + input +
            "' carries no per-run energies (written with --detail summary); re-run solve with "
            "--detail energies or full to produce histogram input");
    const mars::Histogram h = mars::histogram(doc.stats.energies, bins);

    std::ostringstream body;
    body.precision(17);
    body << "bin_lo,bin_hi,count\n";
    for (std::size_t k = 0; k < h.counts.size(); ++k)
        body << h.bin_edges[k] << ',' << h.bin_edges[k + 1] << ',' << h.counts[k] << "\n";

    if (out.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream f(out);
        if (!f) throw mars::InputError("cannot write '" + out + "'");
        f << body.str();
        std::cout << "wrote histogram to " << out << "\n";
    }
    return kExitOk;
}

int cmd_convert(const std::string& input, const std::string& format, const std::string& to,
                const std::string& out) {
    print_banner("convert", {{"input", input}, {"format", format}, {"to", to}, {"out", out}});
    const mars::LoadedProblem loaded = mars::load_problem(input, forced_format(format));
    const mars::IsingProblem& p = loaded.problem;

    if (to == "matrix") {
        if (p.size() > 5000)
            throw mars::InputError("refusing dense matrix output for n > 5000 (n = " +
                                   std::to_string(p.size()) + ")");
        mars::write_matrix_file(p, out);
    } else {
        mars::GsetGraph g;
        g.n_vertices = p.size();
        bool ok = true;
        p.visit_upper([&](int i, int j, double w) {
            if (w != std::nearbyint(w)) ok = false;
            g.edges.push_back({i + 1, j + 1, static_cast<long long>(std::nearbyint(w))});
        });
        if (!ok)
            throw mars::InputError("G-set output needs integer edge weights; matrix has reals");
        std::ofstream f(out);
        if (!f) throw mars::InputError("cannot write '" + out + "'");
        mars::write_gset(g, f);
    }
    std::cout << "wrote " << to << " file to " << out << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"MARS: mean-field annealing from a random state, with SA/MFA/NMFA/SimCIM "
                 "baselines, for Ising ground-state search and MAX-CUT"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "Generate a seeded SK instance (dense matrix file)");
    int gen_n = 0;
    std::uint64_t gen_seed = 1;
    std::string gen_out;
    gen->add_option("--n", gen_n, "number of spins")->required()->check(CLI::Range(2, 100000));
    gen->add_option("--seed", gen_seed, "generator seed (default 1)");
    gen->add_option("--out", gen_out, "output path")->required();

    // solve
    SolveOptions so;
    auto* solve = app.add_subcommand("solve", "Run a solver batch on an instance file");
    solve->add_option("--input", so.input, "instance file (G-set or dense matrix)")->required();
    solve->add_option("--format", so.format, "input format (default auto)")
        ->check(CLI::IsMember({"auto", "gset", "matrix"}));
    solve->add_option("--solver", so.solver, "solver (default mars)")
        ->check(CLI::IsMember({"mars", "sa", "mfa", "nmfa", "simcim"}));
    solve->add_option("--runs", so.runs, "restarts (ignored by mars grid mode; default 1)")
        ->check(CLI::PositiveNumber);
    solve->add_option("--seed", so.seed, "batch base seed (default 1)");
    auto* wopt = solve->add_option("--workers", so.workers,
                                   "worker threads, 0 = auto (default; env MARS_WORKERS)");
    solve->add_option("--out", so.out, "write a result document (JSON) here");
    solve->add_option("--report", so.report, "stdout report format (default human)")
        ->check(CLI::IsMember({"human", "csv", "json"}));
    solve->add_option("--detail", so.detail,
                      "document detail: full|energies|summary (default energies)")
        ->check(CLI::IsMember({"full", "energies", "summary"}));
    solve->add_flag("--no-volatile", so.no_volatile,
                    "omit timestamp and timing fields from the document");
    solve->add_flag("--progress", so.progress, "live best-so-far line on stderr");

    solve->add_option("--tmin", so.mars.t_min, "mars: lowest starting temperature (default 0)")
        ->group("mars");
    solve->add_option("--tmax", so.mars.t_max, "mars: highest starting temperature (default 30)")
        ->group("mars");
    solve->add_option("--tstep", so.mars.t_step, "mars: grid spacing (default 1)")->group("mars");
    solve->add_option("--cstep", so.mars.c_step, "mars: cooling decrement (default 1)")
        ->group("mars");
    solve->add_option("--dmin", so.mars.d_min, "mars: convergence threshold (default 1e-4)")
        ->group("mars");
    solve->add_option("--start-mode", so.start_mode, "mars: grid|random (default grid)")
        ->check(CLI::IsMember({"grid", "random"}))
        ->group("mars");

    solve->add_option("--sa-tinit", so.sa.t_init, "sa: initial temperature (default 5)")
        ->group("sa");
    solve->add_option("--sa-tfinal", so.sa.t_final, "sa: final temperature (default 0.01)")
        ->group("sa");
    solve->add_option("--sa-schedule", so.sa_schedule, "sa: geometric|linear (default geometric)")
        ->check(CLI::IsMember({"geometric", "linear"}))
        ->group("sa");
    solve->add_option("--sa-ratio", so.sa.geometric_ratio,
                      "sa: geometric ratio in (0,1); 0 = derive from sweeps (default)")
        ->group("sa");
    solve->add_option("--sa-sweeps", so.sa.sweeps, "sa: MC sweeps (default 100000)")
        ->check(CLI::PositiveNumber)
        ->group("sa");

    solve->add_option("--mfa-tinit", so.mfa.t_init, "mfa: initial temperature (default 2)")
        ->group("mfa");
    solve->add_option("--mfa-tfinal", so.mfa.t_final, "mfa: final temperature (default 0.01)")
        ->group("mfa");
    solve->add_option("--mfa-tdecay", so.mfa.t_decay, "mfa: cooling factor (default 0.9)")
        ->group("mfa");
    solve->add_option("--mfa-init-noise", so.mfa.init_noise_sigma,
                      "mfa: sigma of the init perturbation (default 0.1)")
        ->group("mfa");
    solve->add_option("--mfa-max-relax", so.mfa.max_relax_iters,
                      "mfa: sweep cap per temperature (default 100)")
        ->check(CLI::PositiveNumber)
        ->group("mfa");

    solve->add_option("--nmfa-alpha", so.nmfa_alpha, "nmfa: mixing weight (default 0.15)")
        ->group("nmfa");
    solve->add_option("--nmfa-noise", so.nmfa_noise, "nmfa: noise sigma (default 0.15)")
        ->group("nmfa");
    solve->add_option("--nmfa-iters", so.nmfa_iters, "nmfa: iterations (default 1000)")
        ->check(CLI::PositiveNumber)
        ->group("nmfa");
    solve->add_option("--nmfa-thi", so.nmfa_thi, "nmfa: schedule start temperature (default 2)")
        ->group("nmfa");
    solve->add_option("--nmfa-tlo", so.nmfa_tlo, "nmfa: schedule end temperature (default 0.02)")
        ->group("nmfa");

    solve->add_option("--simcim-step", so.simcim_step, "simcim: step size (default 0.1)")
        ->group("simcim");
    solve->add_option("--simcim-noise", so.simcim_noise, "simcim: noise sigma (default 0.03)")
        ->group("simcim");
    solve->add_option("--simcim-iters", so.simcim_iters, "simcim: iterations (default 1000)")
        ->check(CLI::PositiveNumber)
        ->group("simcim");
    solve->add_option("--simcim-pump-from", so.simcim_pump_from,
                      "simcim: pump ramp start (default -2)")
        ->group("simcim");
    solve->add_option("--simcim-pump-to", so.simcim_pump_to, "simcim: pump ramp end (default 1)")
        ->group("simcim");

    // bench
    auto* bench = app.add_subcommand("bench", "Run an instances x solvers comparison matrix");
    std::string bench_config, bench_report = "human", bench_out;
    int bench_workers = 0;
    bench->add_option("--config", bench_config, "JSON config file")->required();
    bench->add_option("--report", bench_report, "report format (default human)")
        ->check(CLI::IsMember({"human", "csv", "json"}));
    bench->add_option("--out", bench_out, "write the report here instead of stdout");
    auto* bench_wopt =
        bench->add_option("--workers", bench_workers, "override the config's worker count");

    // hist
    auto* hist = app.add_subcommand("hist", "Histogram the energies of a result document");
    std::string hist_input, hist_out;
    std::int64_t hist_bins = 0;
    hist->add_option("--input", hist_input, "result document (JSON)")->required();
    hist->add_option("--bins", hist_bins, "number of bins")->required()->check(CLI::PositiveNumber);
    hist->add_option("--out", hist_out, "CSV output path (default stdout)");

    // convert
    auto* convert = app.add_subcommand("convert", "Convert between G-set and dense matrix formats");
    std::string conv_input, conv_format = "auto", conv_to, conv_out;
    convert->add_option("--input", conv_input, "input instance file")->required();
    convert->add_option("--format", conv_format, "input format (default auto)")
        ->check(CLI::IsMember({"auto", "gset", "matrix"}));
    convert->add_option("--to", conv_to, "output format")
        ->required()
        ->check(CLI::IsMember({"gset", "matrix"}));
    convert->add_option("--out", conv_out, "output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gen->parsed()) return cmd_generate(gen_n, gen_seed, gen_out);
        if (solve->parsed()) {
            if (wopt->count() == 0) so.workers = env_workers();
            return cmd_solve(so);
        }
        if (bench->parsed()) {
            bool workers_set = bench_wopt->count() > 0;
            if (!workers_set && env_workers() > 0) {
                bench_workers = env_workers();
                workers_set = true;
            }
            return cmd_bench(bench_config, bench_report, bench_out, bench_workers, workers_set);
        }
        if (hist->parsed()) return cmd_hist(hist_input, hist_bins, hist_out);
        if (convert->parsed()) return cmd_convert(conv_input, conv_format, conv_to, conv_out);
    } catch (const mars::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const mars::StructuralError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const mars::IntegrityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const mars::VersionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const mars::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "runtime error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitUsage;
}
