#include "mars/io.hpp"

#include <cctype>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstring>
#include <ctime>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "mars/errors.hpp"
#include "mars/rng.hpp"

namespace mars {

using nlohmann::json;

namespace {

bool is_comment_or_blank(const std::string& line) {
    for (char c : line) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '#' || c == '%';
    }
    return true;
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

long long parse_int_token(const std::string& tok, std::size_t line_no, const char* what) {
    long long value = 0;
    const auto* begin = tok.data();
    const auto* end = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end)
        throw ParseError(std::string("expected integer ") + what + ", got '" + tok + "'", line_no);
    return value;
}

double parse_real_token(const std::string& tok, std::size_t line_no, const char* what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError(std::string("expected real ") + what + ", got '" + tok + "'", line_no);
    }
}

std::string format_real(double v) {
    char buf[32];
    snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

bool operator==(const GsetEdge& a, const GsetEdge& b) {
    return a.u == b.u && a.v == b.v && a.w == b.w;
}

bool operator==(const GsetGraph& a, const GsetGraph& b) {
    return a.n_vertices == b.n_vertices && a.edges == b.edges;
}

GsetGraph parse_gset(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    GsetGraph g;
    long long edge_count = -1;

    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment_or_blank(line)) continue;
        const auto toks = tokens_of(line);
        if (toks.size() != 2)
            throw ParseError("header must be two integers: vertex count, edge count", line_no);
        g.n_vertices = static_cast<int>(parse_int_token(toks[0], line_no, "vertex count"));
        edge_count = parse_int_token(toks[1], line_no, "edge count");
        break;
    }
    if (edge_count < 0) throw ParseError("missing header line");
    if (g.n_vertices <= 0) throw StructuralError("vertex count must be positive");

    std::unordered_set<std::uint64_t> seen;
    seen.reserve(static_cast<std::size_t>(edge_count));
    g.edges.reserve(static_cast<std::size_t>(edge_count));

    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment_or_blank(line)) continue;
        const auto toks = tokens_of(line);
        if (toks.size() != 2 && toks.size() != 3)
            throw ParseError("edge line must be 'u v' or 'u v w'", line_no);
        GsetEdge e;
        e.u = static_cast<int>(parse_int_token(toks[0], line_no, "endpoint"));
        e.v = static_cast<int>(parse_int_token(toks[1], line_no, "endpoint"));
        e.w = toks.size() == 3 ? parse_int_token(toks[2], line_no, "weight") : 1;
        if (e.u < 1 || e.u > g.n_vertices || e.v < 1 || e.v > g.n_vertices)
            throw StructuralError("line " + std::to_string(line_no) + ": vertex out of range 1.." +
                                  std::to_string(g.n_vertices));
        if (e.u == e.v)
            throw StructuralError("line " + std::to_string(line_no) + ": self-loop at vertex " +
                                  std::to_string(e.u));
        const auto a = static_cast<std::uint64_t>(std::min(e.u, e.v));
        const auto b = static_cast<std::uint64_t>(std::max(e.u, e.v));
        if (!seen.insert(a * 1000003ull + b).second)
            throw StructuralError("line " + std::to_string(line_no) + ": duplicate edge (" +
                                  std::to_string(e.u) + "," + std::to_string(e.v) + ")");
        g.edges.push_back(e);
        if (static_cast<long long>(g.edges.size()) > edge_count)
            throw StructuralError("more edge lines than the declared count " +
                                  std::to_string(edge_count));
    }
    if (static_cast<long long>(g.edges.size()) != edge_count)
        throw StructuralError("edge count mismatch: header declares " + std::to_string(edge_count) +
                              ", file has " + std::to_string(g.edges.size()));
    return g;
}

GsetGraph load_gset(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    return parse_gset(in);
}

void write_gset(const GsetGraph& g, std::ostream& out) {
    out << g.n_vertices << ' ' << g.edges.size() << '\n';
    for (const GsetEdge& e : g.edges) out << e.u << ' ' << e.v << ' ' << e.w << '\n';
}

IsingProblem gset_to_problem(const GsetGraph& g) {
    std::vector<IsingProblem::Edge> edges;
    edges.reserve(g.edges.size());
    for (const GsetEdge& e : g.edges)
        edges.push_back({e.u - 1, e.v - 1, static_cast<double>(e.w)});
    return IsingProblem::from_edges(g.n_vertices, edges);
}

IsingProblem generate_sk(int n, std::uint64_t seed) {
    if (n < 2) throw InputError("SK instance needs n >= 2");
    Rng rng(seed);
    std::vector<double> j(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int k = i + 1; k < n; ++k) {
            const double w = rng.gaussian();
            j[static_cast<std::size_t>(i) * n + k] = w;
            j[static_cast<std::size_t>(k) * n + i] = w;
        }
    }
    return IsingProblem::dense(n, std::move(j));
}

void write_matrix(const IsingProblem& p, std::ostream& out) {
    if (p.has_field())
        throw InputError("the dense matrix format stores couplings only; field is nonzero");
    const int n = p.size();
    out << n << '\n';
    for (int i = 0; i < n; ++i) {
        const std::vector<double> row = p.row_values(i);
        for (int k = 0; k < n; ++k) {
            if (k) out << ' ';
            out << format_real(row[static_cast<std::size_t>(k)]);
        }
        out << '\n';
    }
}

void write_matrix_file(const IsingProblem& p, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write '" + path + "'");
    write_matrix(p, out);
    if (!out.good()) throw InputError("short write to '" + path + "'");
}

IsingProblem read_matrix(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    int n = -1;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment_or_blank(line)) continue;
        const auto toks = tokens_of(line);
        if (toks.size() != 1) throw ParseError("matrix header must be a single integer n", line_no);
        n = static_cast<int>(parse_int_token(toks[0], line_no, "matrix size"));
        break;
    }
    if (n <= 0) throw ParseError("missing or non-positive matrix size", line_no);

    std::vector<double> j(static_cast<std::size_t>(n) * n, 0.0);
    int row = 0;
    while (row < n && std::getline(in, line)) {
        ++line_no;
        if (is_comment_or_blank(line)) continue;
        const auto toks = tokens_of(line);
        if (static_cast<int>(toks.size()) != n)
            throw ParseError("row " + std::to_string(row) + " has " + std::to_string(toks.size()) +
                                 " entries, expected " + std::to_string(n),
                             line_no);
        for (int k = 0; k < n; ++k)
            j[static_cast<std::size_t>(row) * n + k] = parse_real_token(toks[k], line_no, "entry");
        ++row;
    }
    if (row != n) throw ParseError("matrix ends after " + std::to_string(row) + " of " +
                                   std::to_string(n) + " rows");
    try {
        return IsingProblem::dense(n, std::move(j));
    } catch (const InputError& e) {
        throw StructuralError(std::string("invalid matrix: ") + e.what());
    }
}

IsingProblem read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    return read_matrix(in);
}

InstanceFormat detect_format(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_comment_or_blank(line)) continue;
        const auto toks = tokens_of(line);
        if (toks.size() == 1) return InstanceFormat::DenseMatrix;
        if (toks.size() == 2) return InstanceFormat::GsetGraph;
        throw ParseError("cannot detect format: first data line has " +
                             std::to_string(toks.size()) + " tokens (expected 1 or 2)",
                         line_no);
    }
    throw ParseError("cannot detect format of an empty file");
}

LoadedProblem load_problem(const std::string& path, std::optional<InstanceFormat> forced) {
    InstanceFormat fmt;
    if (forced) {
        fmt = *forced;
    } else {
        std::ifstream probe(path);
        if (!probe) throw InputError("cannot open '" + path + "'");
        fmt = detect_format(probe);
    }
    if (fmt == InstanceFormat::GsetGraph)
        return {gset_to_problem(load_gset(path)), InstanceFormat::GsetGraph};
    return {read_matrix_file(path), InstanceFormat::DenseMatrix};
}

std::uint64_t problem_hash(const IsingProblem& p) {
    constexpr std::uint64_t kOffset = 0xcbf29ce484222325ull;
    constexpr std::uint64_t kPrime = 0x100000001b3ull;
    std::uint64_t h = kOffset;
    auto mix64 = [&h](std::uint64_t v) {
        for (int b = 0; b < 8; ++b) {
            h ^= (v >> (8 * b)) & 0xffu;
            h *= kPrime;
        }
    };
    auto mix_double = [&](double d) {
        std::uint64_t bits;
        static_assert(sizeof bits == sizeof d);
        std::memcpy(&bits, &d, sizeof bits);
        mix64(bits);
    };
    const int n = p.size();
    mix64(static_cast<std::uint64_t>(n));
    p.visit_upper([&](int i, int k, double w) {
        mix64(static_cast<std::uint64_t>(i));
        mix64(static_cast<std::uint64_t>(k));
        mix_double(w);
    });
    for (int i = 0; i < n; ++i) {
        const double hv = p.field()[static_cast<std::size_t>(i)];
        if (hv == 0.0) continue;
        mix64(static_cast<std::uint64_t>(i));
        mix_double(hv);
    }
    return h;
}

// --- result documents ---

json solver_params_to_json(const SolverParams& params) {
    json j;
    if (const auto* mp = std::get_if<MarsParams>(&params)) {
        j["t_min"] = mp->t_min;
        j["t_max"] = mp->t_max;
        j["t_step"] = mp->t_step;
        j["c_step"] = mp->c_step;
        j["d_min"] = mp->d_min;
        j["start_mode"] = mp->start_mode == StartMode::GridSweep ? "grid" : "random";
    } else if (const auto* sp = std::get_if<SaParams>(&params)) {
        j["t_init"] = sp->t_init;
        j["t_final"] = sp->t_final;
        j["schedule"] = sp->schedule == CoolingSchedule::Linear ? "linear" : "geometric";
        j["geometric_ratio"] = sp->geometric_ratio;
        j["sweeps"] = sp->sweeps;
    } else if (const auto* fp = std::get_if<MfaParams>(&params)) {
        j["t_init"] = fp->t_init;
        j["t_final"] = fp->t_final;
        j["t_decay"] = fp->t_decay;
        j["init_noise_sigma"] = fp->init_noise_sigma;
        j["max_relax_iters"] = fp->max_relax_iters;
    } else if (const auto* np = std::get_if<NmfaParams>(&params)) {
        j["noise_sigma"] = np->noise_sigma;
        j["alpha"] = np->alpha;
        j["schedule"] = np->schedule;
        j["iters"] = np->iters;
    } else {
        const auto& cp = std::get<SimCimParams>(params);
        j["step_size"] = cp.step_size;
        j["noise_sigma"] = cp.noise_sigma;
        j["pump_schedule"] = cp.pump_schedule;
        j["iters"] = cp.iters;
    }
    return j;
}

SolverParams solver_params_from_json(const std::string& solver, const json& j) {
    if (solver == "mars") {
        MarsParams p;
        p.t_min = j.at("t_min").get<double>();
        p.t_max = j.at("t_max").get<double>();
        p.t_step = j.at("t_step").get<double>();
        p.c_step = j.at("c_step").get<double>();
        p.d_min = j.at("d_min").get<double>();
        p.start_mode =
            j.at("start_mode").get<std::string>() == "grid" ? StartMode::GridSweep
                                                            : StartMode::UniformRandom;
        return p;
    }
    if (solver == "sa") {
        SaParams p;
        p.t_init = j.at("t_init").get<double>();
        p.t_final = j.at("t_final").get<double>();
        p.schedule = j.at("schedule").get<std::string>() == "linear" ? CoolingSchedule::Linear
                                                                     : CoolingSchedule::Geometric;
        p.geometric_ratio = j.at("geometric_ratio").get<double>();
        p.sweeps = j.at("sweeps").get<std::int64_t>();
        return p;
    }
    if (solver == "mfa") {
        MfaParams p;
        p.t_init = j.at("t_init").get<double>();
        p.t_final = j.at("t_final").get<double>();
        p.t_decay = j.at("t_decay").get<double>();
        p.init_noise_sigma = j.at("init_noise_sigma").get<double>();
        p.max_relax_iters = j.at("max_relax_iters").get<std::int64_t>();
        return p;
    }
    if (solver == "nmfa") {
        NmfaParams p;
        p.noise_sigma = j.at("noise_sigma").get<double>();
        p.alpha = j.at("alpha").get<double>();
        p.schedule = j.at("schedule").get<std::vector<double>>();
        p.iters = j.at("iters").get<std::int64_t>();
        return p;
    }
    if (solver == "simcim") {
        SimCimParams p;
        p.step_size = j.at("step_size").get<double>();
        p.noise_sigma = j.at("noise_sigma").get<double>();
        p.pump_schedule = j.at("pump_schedule").get<std::vector<double>>();
        p.iters = j.at("iters").get<std::int64_t>();
        return p;
    }
    throw ParseError("unknown solver '" + solver + "' in result document");
}

namespace {

std::string spins_to_string(const SpinConfig& spins) {
    std::string s;
    s.reserve(spins.size());
    for (std::int8_t v : spins) s.push_back(v > 0 ? '+' : '-');
    return s;
}

SpinConfig spins_from_string(const std::string& s) {
    SpinConfig out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '+') out.push_back(1);
        else if (c == '-') out.push_back(-1);
        else throw ParseError("invalid spin character in document");
    }
    return out;
}

const char* status_name(RunStatus s) {
    switch (s) {
        case RunStatus::Ok: return "ok";
        case RunStatus::Skipped: return "skipped";
        default: return "diverged";
    }
}

RunStatus status_from(const std::string& s) {
    if (s == "ok") return RunStatus::Ok;
    if (s == "skipped") return RunStatus::Skipped;
    if (s == "diverged") return RunStatus::Diverged;
    throw ParseError("invalid run status '" + s + "'");
}

json run_to_json(const RunResult& r, bool include_volatile) {
    json j;
    j["status"] = status_name(r.status);
    j["start_temp"] = r.start_temp;
    if (r.status != RunStatus::Skipped) {
        j["energy"] = r.energy;
        j["cut"] = r.cut;
        j["descent_iters"] = r.descent_iters;
        j["spins"] = spins_to_string(r.spins);
        if (include_volatile) j["elapsed_seconds"] = r.elapsed_seconds;
    }
    if (!r.error.empty()) j["error"] = r.error;
    return j;
}

RunResult run_from_json(const json& j) {
    RunResult r;
    r.status = status_from(j.at("status").get<std::string>());
    r.start_temp = j.at("start_temp").get<double>();
    if (r.status != RunStatus::Skipped) {
        r.energy = j.at("energy").get<double>();
        r.cut = j.at("cut").get<double>();
        r.descent_iters = j.at("descent_iters").get<std::int64_t>();
        r.spins = spins_from_string(j.at("spins").get<std::string>());
        if (j.contains("elapsed_seconds")) r.elapsed_seconds = j.at("elapsed_seconds").get<double>();
    }
    if (j.contains("error")) r.error = j.at("error").get<std::string>();
    return r;
}

std::string iso_timestamp_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm_utc{};
    gmtime_r(&t, &tm_utc);
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

char hex_digit(unsigned v) { return v < 10 ? static_cast<char>('0' + v) : static_cast<char>('a' + v - 10); }

std::string hash_to_hex(std::uint64_t h) {
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = hex_digit(static_cast<unsigned>(h & 0xf));
        h >>= 4;
    }
    return s;
}

std::uint64_t hash_from_hex(const std::string& s) {
    std::uint64_t h = 0;
    for (char c : s) {
        h <<= 4;
        if (c >= '0' && c <= '9') h |= static_cast<std::uint64_t>(c - '0');
        else if (c >= 'a' && c <= 'f') h |= static_cast<std::uint64_t>(c - 'a' + 10);
        else throw ParseError("invalid hash digit in document");
    }
    return h;
}

}  // namespace

ResultDocument make_result_document(const std::string& problem_id, const IsingProblem& problem,
                                    const SolverParams& params, const BatchStats& stats,
                                    DocDetail detail, bool include_volatile) {
    ResultDocument doc;
    doc.problem_id = problem_id;
    doc.problem_hash = problem_hash(problem);
    doc.problem_size = problem.size();
    doc.solver = solver_name(params);
    doc.params = params;
    doc.stats = stats;
    doc.detail = detail;
    doc.include_volatile = include_volatile;
    doc.timestamp = include_volatile ? iso_timestamp_now() : "";
    if (detail != DocDetail::Full) doc.stats.runs.clear();
    if (detail == DocDetail::Summary) doc.stats.energies.clear();
    if (!include_volatile) {
        doc.stats.total_seconds = 0.0;
        doc.stats.mean_seconds_per_run = 0.0;
        doc.stats.best_result.elapsed_seconds = 0.0;
        for (RunResult& r : doc.stats.runs) r.elapsed_seconds = 0.0;
    }
    return doc;
}

std::string result_document_to_string(const ResultDocument& doc) {
    json j;
    j["format"] = "mars-result";
    j["version"] = doc.version;
    if (doc.include_volatile) j["created"] = doc.timestamp;
    j["problem"] = {{"id", doc.problem_id},
                    {"hash", hash_to_hex(doc.problem_hash)},
                    {"n", doc.problem_size}};
    j["solver"] = {{"name", doc.solver}, {"params", solver_params_to_json(doc.params)}};

    json s;
    s["best_energy"] = doc.stats.best_energy;
    s["mean_energy"] = doc.stats.mean_energy;
    s["best_cut"] = doc.stats.best_cut;
    s["mean_cut"] = doc.stats.mean_cut;
    s["hit_count"] = doc.stats.hit_count;
    s["success_probability"] = doc.stats.success_probability;
    s["completed_runs"] = doc.stats.completed_runs;
    s["skipped_runs"] = doc.stats.skipped_runs;
    s["failed_runs"] = doc.stats.failed_runs;
    if (doc.include_volatile) {
        s["total_seconds"] = doc.stats.total_seconds;
        s["mean_seconds_per_run"] = doc.stats.mean_seconds_per_run;
    }
    if (doc.detail != DocDetail::Summary) s["energies"] = doc.stats.energies;
    s["best_run"] = run_to_json(doc.stats.best_result, doc.include_volatile);
    j["stats"] = std::move(s);

    if (doc.detail == DocDetail::Full) {
        json runs = json::array();
        for (const RunResult& r : doc.stats.runs) runs.push_back(run_to_json(r, doc.include_volatile));
        j["runs"] = std::move(runs);
    }
    return j.dump(2) + "\n";
}

ResultDocument result_document_from_string(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid result document: ") + e.what());
    }
    try {
        if (j.value("format", "") != "mars-result")
            throw ParseError("not a mars-result document");
        ResultDocument doc;
        doc.version = j.at("version").get<int>();
        if (doc.version != kResultDocVersion)
            throw VersionError("result document version " + std::to_string(doc.version) +
                               " is not supported (expected " +
                               std::to_string(kResultDocVersion) + ")");
        doc.include_volatile = j.contains("created");
        if (doc.include_volatile) doc.timestamp = j.at("created").get<std::string>();
        doc.problem_id = j.at("problem").at("id").get<std::string>();
        doc.problem_hash = hash_from_hex(j.at("problem").at("hash").get<std::string>());
        doc.problem_size = j.at("problem").at("n").get<int>();
        doc.solver = j.at("solver").at("name").get<std::string>();
        doc.params = solver_params_from_json(doc.solver, j.at("solver").at("params"));

        const json& s = j.at("stats");
        doc.stats.best_energy = s.at("best_energy").get<double>();
        doc.stats.mean_energy = s.at("mean_energy").get<double>();
        doc.stats.best_cut = s.at("best_cut").get<double>();
        doc.stats.mean_cut = s.at("mean_cut").get<double>();
        doc.stats.hit_count = s.at("hit_count").get<std::int64_t>();
        doc.stats.success_probability = s.at("success_probability").get<double>();
        doc.stats.completed_runs = s.at("completed_runs").get<std::int64_t>();
        doc.stats.skipped_runs = s.at("skipped_runs").get<std::int64_t>();
        doc.stats.failed_runs = s.at("failed_runs").get<std::int64_t>();
        if (s.contains("total_seconds")) doc.stats.total_seconds = s.at("total_seconds").get<double>();
        if (s.contains("mean_seconds_per_run"))
            doc.stats.mean_seconds_per_run = s.at("mean_seconds_per_run").get<double>();
        if (s.contains("energies"))
            doc.stats.energies = s.at("energies").get<std::vector<double>>();
        doc.stats.best_result = run_from_json(s.at("best_run"));
        if (j.contains("runs")) {
            doc.detail = DocDetail::Full;
            for (const json& r : j.at("runs")) doc.stats.runs.push_back(run_from_json(r));
        } else {
            doc.detail = s.contains("energies") ? DocDetail::Energies : DocDetail::Summary;
        }
        return doc;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed result document: ") + e.what());
    }
}

void save_result(const ResultDocument& doc, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << result_document_to_string(doc);
    if (!out.good()) throw InputError("short write to '" + path + "'");
}

ResultDocument load_result(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return result_document_from_string(buf.str());
}

void verify_result_document(const ResultDocument& doc, const IsingProblem& p) {
    const std::uint64_t h = problem_hash(p);
    if (doc.problem_hash != h || doc.problem_size != p.size())
        throw IntegrityError("result document was produced for a different problem (hash " +
                             hash_to_hex(doc.problem_hash) + " vs " + hash_to_hex(h) + ")");
}

namespace {

bool runs_equal(const RunResult& a, const RunResult& b) {
    return a.status == b.status && a.energy == b.energy && a.cut == b.cut && a.spins == b.spins &&
           a.start_temp == b.start_temp && a.descent_iters == b.descent_iters &&
           a.elapsed_seconds == b.elapsed_seconds && a.error == b.error;
}

}  // namespace

bool operator==(const ResultDocument& a, const ResultDocument& b) {
    if (a.version != b.version || a.problem_id != b.problem_id ||
        a.problem_hash != b.problem_hash || a.problem_size != b.problem_size ||
        a.solver != b.solver || a.detail != b.detail ||
        a.include_volatile != b.include_volatile || a.timestamp != b.timestamp)
        return false;
    if (solver_params_to_json(a.params) != solver_params_to_json(b.params)) return false;
    const BatchStats& x = a.stats;
    const BatchStats& y = b.stats;
    if (x.best_energy != y.best_energy || x.mean_energy != y.mean_energy ||
        x.best_cut != y.best_cut || x.mean_cut != y.mean_cut || x.hit_count != y.hit_count ||
        x.success_probability != y.success_probability ||
        x.total_seconds != y.total_seconds ||
        x.mean_seconds_per_run != y.mean_seconds_per_run ||
        x.completed_runs != y.completed_runs || x.skipped_runs != y.skipped_runs ||
        x.failed_runs != y.failed_runs || x.energies != y.energies)
        return false;
    if (!runs_equal(x.best_result, y.best_result)) return false;
    if (x.runs.size() != y.runs.size()) return false;
    for (std::size_t i = 0; i < x.runs.size(); ++i)
        if (!runs_equal(x.runs[i], y.runs[i])) return false;
    return true;
}

}  // namespace mars
