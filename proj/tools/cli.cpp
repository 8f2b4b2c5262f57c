#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <omp.h>

#include "ugsim/centrality.hpp"
#include "ugsim/edgelist.hpp"
#include "ugsim/error.hpp"
#include "ugsim/generators.hpp"
#include "ugsim/stats.hpp"
#include "ugsim/sweep.hpp"

namespace ugsim::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw UsageError("cannot open '" + path + "' for writing");
    return out;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open '" + path + "'");
    return in;
}

std::string command_line(int argc, const char* const* argv) {
    std::string s;
    for (int k = 1; k < argc; ++k)
        s += (k > 1 ? " " : "") + std::string(argv[k]);
    return s;
}

std::vector<std::string> base_metadata(const std::string& cmdline) {
    return {std::string("tool: ") + kToolVersion, "command: " + cmdline,
            std::string("rng: ") + kRngName};
}

/// '#' lines of a CSV input, re-emitted under an "input:" prefix.
std::vector<std::string> inherited_metadata(const std::string& path) {
    auto in = open_input(path);
    std::vector<std::string> out{"input: " + path};
    for (std::string line; std::getline(in, line);)
        if (!line.empty() && line.front() == '#')
            out.push_back("input: " + line.substr(line.find_first_not_of("# ")));
    return out;
}

std::string fmt(double v, const char* pattern = "%.6g") {
    char buf[64];
    std::snprintf(buf, sizeof buf, pattern, v);
    return buf;
}

// ---------------------------------------------------------------------------

struct NetgenOptions {
    std::string model;
    std::size_t n = 2000;
    std::size_t m = 2;
    std::size_t m0 = 0;
    std::uint64_t seed = 0;
    std::string out;
    std::size_t k_min = 4;
};

int cmd_netgen(const NetgenOptions& o, const std::string& cmdline, std::ostream& out) {
    GenParams p{parse_network_model(o.model), o.n, o.m, o.m0, o.seed};
    const Network net = generate(p);
    auto file = open_output(o.out);
    auto meta = base_metadata(cmdline);
    meta.push_back("master_seed: " + std::to_string(o.seed));
    write_metadata(file, meta);
    save_edgelist(net, file);
    out << stats_csv_header() << '\n' << stats_csv_row(p, network_stats(net, o.k_min)) << '\n';
    return kSuccess;
}

// ---------------------------------------------------------------------------

struct RunOptions {
    std::string network;
    std::string model = "ba";
    std::uint64_t network_seed = 0;
    double l = 0.1, h = 0.6, noise = 0.1;
    std::size_t generations = 500000, window = 25000;
    std::uint64_t seed = 0;
    std::string scheme = "none";
    std::string target = "hh";
    double threshold = 0.0;
    double theta = 0.0;
    std::string update = "sync";
    std::string log_decisions;
    std::string out;
    int threads = 0;
};

int cmd_run(const RunOptions& o, const std::string& cmdline, std::ostream& out) {
    if (!std::filesystem::exists(o.network))
        throw UsageError("network file '" + o.network + "' does not exist");
    const Network net = load_edgelist(o.network);
    const GameParams game{o.l, o.h};
    game.validate();

    SimConfig sim;
    sim.generations = o.generations;
    sim.window = o.window;
    sim.noise = o.noise;
    sim.rng_seed = o.seed;
    if (o.update == "sync")
        sim.update_mode = UpdateMode::Synchronous;
    else if (o.update == "async")
        sim.update_mode = UpdateMode::Asynchronous;
    else
        throw UsageError("--update must be sync or async");
    if (o.threads > 0) {
        sim.policy = ExecPolicy::Parallel;
        omp_set_num_threads(o.threads);
    }

    std::optional<InterferenceConfig> icfg;
    std::optional<CentralityRanking> ranking;
    if (o.scheme != "none") {
        InterferenceConfig c;
        c.scheme = parse_scheme(o.scheme);
        c.target = parse_target(o.target);
        c.threshold = o.threshold;
        c.theta = o.theta;
        if (!(c.theta > 0.0))
            throw UsageError("--theta must be positive when a scheme is set");
        c.validate();
        if (c.scheme == Scheme::NI_DEG)
            ranking = degree_centrality(net);
        if (c.scheme == Scheme::NI_EIG)
            ranking = eigenvector_centrality(net).ranking;
        icfg = c;
    }

    std::ofstream log;
    DecisionObserver observer;
    const std::string scheme_name = icfg ? std::string(to_string(icfg->scheme)) : "NONE";
    if (!o.log_decisions.empty()) {
        log = open_output(o.log_decisions);
        auto meta = base_metadata(cmdline);
        meta.push_back("master_seed: " + std::to_string(o.seed));
        write_metadata(log, meta);
        log << "generation,scheme,invested_count,cost_delta\n";
        observer = [&](std::size_t g, const InvestmentDecision& d) {
            log << g << ',' << scheme_name << ',' << d.invested_nodes.size() << ','
                << fmt(d.cost_delta, "%.2f") << '\n';
        };
    }

    const RunResult r =
        run_simulation(net, game, icfg, sim, ranking ? &*ranking : nullptr, nullptr, observer);

    RunRecord rec;
    rec.coords = {parse_network_model(o.model), GridPoint{icfg}, game, o.noise, o.generations,
                  o.window};
    rec.network_seed = o.network_seed;
    rec.replicate_seed = o.seed;
    rec.freqs = r.window_freq;
    rec.fairness = r.fairness;
    rec.total_cost = r.total_cost;
    rec.endowment_events = r.endowment_events;

    out << results_csv_header() << '\n' << results_csv_row(rec) << '\n';
    if (!o.out.empty()) {
        auto file = open_output(o.out);
        auto meta = base_metadata(cmdline);
        meta.push_back("master_seed: " + std::to_string(o.seed));
        write_metadata(file, meta);
        write_results_csv(file, std::span<const RunRecord>(&rec, 1));
    }
    return kSuccess;
}

// ---------------------------------------------------------------------------

struct SweepOptions {
    std::string config;
    std::string out_dir = ".";
    int jobs = 0;
};

int cmd_sweep(const SweepOptions& o, const std::string& cmdline, std::ostream& out,
              std::ostream& err) {
    const SweepSpec spec = load_sweep_spec(o.config);
    const SweepOutput result = run_sweep(spec, o.jobs);

    auto meta = base_metadata(cmdline);
    meta.push_back("master_seed: " + std::to_string(spec.master_seed));
    for (const auto& line : describe(spec))
        meta.push_back("config: " + line);

    std::filesystem::create_directories(o.out_dir);
    const auto dir = std::filesystem::path(o.out_dir);
    {
        auto f = open_output((dir / "results.csv").string());
        write_metadata(f, meta);
        write_results_csv(f, result.runs);
    }
    {
        auto f = open_output((dir / "aggregate.csv").string());
        write_metadata(f, meta);
        write_aggregate_csv(f, result.aggregates);
    }
    out << "runs: " << result.runs.size() << ", grid points: " << result.aggregates.size()
        << ", failures: " << result.failures.size() << '\n';
    for (const auto& f : result.failures)
        err << "failed: " << f.coordinates << ": " << f.message << '\n';
    return result.failures.empty() ? kSuccess : kPartialFailure;
}

// ---------------------------------------------------------------------------

struct ParetoOptions {
    std::string in;
    std::string out;
    std::string group = "none";
};

int cmd_pareto(const ParetoOptions& o, const std::string& cmdline) {
    if (o.group != "none" && o.group != "scheme" && o.group != "scheme-target")
        throw UsageError("--group must be none, scheme or scheme-target");
    std::vector<AggregateRecord> records;
    {
        auto in = open_input(o.in);
        records = read_records_csv(in);
    }
    if (records.empty())
        throw UsageError("no records in '" + o.in + "'");

    std::vector<std::string> keys(records.size());
    for (std::size_t k = 0; k < records.size(); ++k) {
        const auto& i = records[k].coords.point.interference;
        if (o.group == "none")
            continue;
        keys[k] = i ? std::string(to_string(i->scheme)) : "NONE";
        if (o.group == "scheme-target")
            keys[k] += "/" + (i ? std::string(to_string(i->target)) : "-");
    }
    std::vector<std::string> order;
    std::map<std::string, std::vector<std::size_t>> members;
    for (std::size_t k = 0; k < records.size(); ++k) {
        if (!members.contains(keys[k]))
            order.push_back(keys[k]);
        members[keys[k]].push_back(k);
    }

    std::vector<ParetoPoint> front;
    for (const auto& key : order) {
        std::vector<AggregateRecord> subset;
        for (std::size_t k : members[key])
            subset.push_back(records[k]);
        for (auto p : pareto_front(subset)) {
            p.source = members[key][p.source];
            front.push_back(p);
        }
    }

    auto f = open_output(o.out);
    auto meta = base_metadata(cmdline);
    for (const auto& line : inherited_metadata(o.in))
        meta.push_back(line);
    write_metadata(f, meta);
    write_pareto_csv(f, records, front);
    return kSuccess;
}

// ---------------------------------------------------------------------------

struct BestOptions {
    std::string in;
    std::string out;
    std::vector<double> levels{0.75, 0.90, 0.99};
};

int cmd_best(const BestOptions& o, const std::string& cmdline) {
    for (double level : o.levels)
        if (!(level > 0.0))
            throw UsageError("--min-fairness levels must be positive");
    std::vector<AggregateRecord> records;
    {
        auto in = open_input(o.in);
        records = read_records_csv(in);
    }
    const auto rows = best_per_fairness(records, o.levels);
    auto f = open_output(o.out);
    auto meta = base_metadata(cmdline);
    for (const auto& line : inherited_metadata(o.in))
        meta.push_back(line);
    write_metadata(f, meta);
    write_best_csv(f, rows);
    return kSuccess;
}

// ---------------------------------------------------------------------------

struct BaselineOptions {
    std::string model = "ba";
    std::size_t n = 2000, m = 2, m0 = 0;
    std::size_t network_seeds = 10;
    std::size_t replicates = 20;
    std::size_t generations = 500000, window = 25000;
    double noise = 0.1;
    std::uint64_t seed = 0;
    std::vector<double> l_grid{0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
    std::vector<double> h_grid{0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
    std::string out;
    int jobs = 0;
};

int cmd_baseline(const BaselineOptions& o, const std::string& cmdline) {
    BaselineSpec spec;
    spec.network.model = parse_network_model(o.model);
    spec.network.n = o.n;
    spec.network.m = o.m;
    spec.network.m0 = o.m0;
    spec.network.seeds.clear();
    for (std::size_t k = 1; k <= o.network_seeds; ++k)
        spec.network.seeds.push_back(k);
    spec.l_grid = o.l_grid;
    spec.h_grid = o.h_grid;
    spec.sim.generations = o.generations;
    spec.sim.window = o.window;
    spec.sim.noise = o.noise;
    spec.replicates = o.replicates;
    spec.master_seed = o.seed;

    const auto points = baseline_scan(spec, o.jobs);
    auto f = open_output(o.out);
    auto meta = base_metadata(cmdline);
    meta.push_back("master_seed: " + std::to_string(o.seed));
    write_metadata(f, meta);
    write_baseline_csv(f, points);
    return kSuccess;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Ultimatum Game simulator with institutional interference on scale-free networks",
                 "ugsim"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    NetgenOptions netgen;
    auto* c_netgen = app.add_subcommand("netgen", "Generate a BA or DMS network edge list");
    c_netgen->add_option("--model", netgen.model, "ba or dms")->required();
    c_netgen->add_option("--n", netgen.n, "Number of nodes")->capture_default_str();
    c_netgen->add_option("--m", netgen.m, "Edges (BA) or attachment edges (DMS) per new node")
        ->capture_default_str();
    c_netgen->add_option("--m0", netgen.m0, "BA core size (0 = m + 1)")->capture_default_str();
    c_netgen->add_option("--seed", netgen.seed, "Generator seed")->required();
    c_netgen->add_option("--out", netgen.out, "Edge-list output path")->required();
    c_netgen->add_option("--kmin", netgen.k_min, "Minimum degree for the exponent fit")
        ->capture_default_str();

    RunOptions run_o;
    auto* c_run = app.add_subcommand("run", "Simulate one replicate on a network file");
    c_run->add_option("--network", run_o.network, "Edge-list file")->required();
    c_run->add_option("--model", run_o.model, "Model label for the output row (ba or dms)")
        ->capture_default_str();
    c_run->add_option("--network-seed", run_o.network_seed, "Network seed label")
        ->capture_default_str();
    c_run->add_option("--l", run_o.l)->capture_default_str();
    c_run->add_option("--h", run_o.h)->capture_default_str();
    c_run->add_option("--K", run_o.noise, "Imitation noise")->capture_default_str();
    c_run->add_option("--generations", run_o.generations)->capture_default_str();
    c_run->add_option("--window", run_o.window)->capture_default_str();
    c_run->add_option("--seed", run_o.seed, "Replicate seed")->required();
    c_run->add_option("--scheme", run_o.scheme, "none, pop, neb, ni-deg or ni-eig")
        ->capture_default_str();
    c_run->add_option("--target", run_o.target, "hh, hh,hl or hh,lh")->capture_default_str();
    c_run->add_option("--threshold", run_o.threshold, "p_f, n_f or i_f")->capture_default_str();
    c_run->add_option("--theta", run_o.theta, "Endowment per invested node");
    c_run->add_option("--update", run_o.update, "sync or async")->capture_default_str();
    c_run->add_option("--log-decisions", run_o.log_decisions, "Per-generation decision CSV");
    c_run->add_option("--out", run_o.out, "Also write the result row to this CSV");
    c_run->add_option("--threads", run_o.threads, "Use OpenMP kernels with this many threads");

    SweepOptions sweep_o;
    auto* c_sweep = app.add_subcommand("sweep", "Run a parameter grid from a config file");
    c_sweep->add_option("--config", sweep_o.config, "INI sweep spec")->required();
    c_sweep->add_option("--out-dir", sweep_o.out_dir, "Directory for results.csv and aggregate.csv")
        ->capture_default_str();
    c_sweep->add_option("--jobs", sweep_o.jobs, "Worker threads (0 = all cores)");

    ParetoOptions pareto_o;
    auto* c_pareto = app.add_subcommand("pareto", "Extract the (unfairness, cost) Pareto front");
    c_pareto->add_option("--in", pareto_o.in, "Aggregate or results CSV")->required();
    c_pareto->add_option("--out", pareto_o.out, "Output CSV")->required();
    c_pareto->add_option("--group", pareto_o.group, "none, scheme or scheme-target")
        ->capture_default_str();

    BestOptions best_o;
    auto* c_best = app.add_subcommand("best", "Cheapest configuration per scheme and fairness level");
    c_best->add_option("--in", best_o.in, "Aggregate or results CSV")->required();
    c_best->add_option("--out", best_o.out, "Output CSV")->required();
    c_best->add_option("--min-fairness", best_o.levels, "Comma-separated fairness levels")
        ->delimiter(',')
        ->capture_default_str();

    BaselineOptions base_o;
    auto* c_base = app.add_subcommand("baseline", "No-interference scan over the (l, h) plane");
    c_base->add_option("--model", base_o.model)->capture_default_str();
    c_base->add_option("--n", base_o.n)->capture_default_str();
    c_base->add_option("--m", base_o.m)->capture_default_str();
    c_base->add_option("--m0", base_o.m0)->capture_default_str();
    c_base->add_option("--network-seeds", base_o.network_seeds, "Networks seeded 1..N")
        ->capture_default_str();
    c_base->add_option("--replicates", base_o.replicates)->capture_default_str();
    c_base->add_option("--generations", base_o.generations)->capture_default_str();
    c_base->add_option("--window", base_o.window)->capture_default_str();
    c_base->add_option("--K", base_o.noise)->capture_default_str();
    c_base->add_option("--seed", base_o.seed, "Master seed")->required();
    c_base->add_option("--l-grid", base_o.l_grid)->delimiter(',')->capture_default_str();
    c_base->add_option("--h-grid", base_o.h_grid)->delimiter(',')->capture_default_str();
    c_base->add_option("--out", base_o.out, "Output CSV")->required();
    c_base->add_option("--jobs", base_o.jobs, "Worker threads (0 = all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::CallForVersion&) {
        out << kToolVersion << '\n';
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    const std::string cmdline = command_line(argc, argv);
    try {
        if (c_netgen->parsed())
            return cmd_netgen(netgen, cmdline, out);
        if (c_run->parsed())
            return cmd_run(run_o, cmdline, out);
        if (c_sweep->parsed())
            return cmd_sweep(sweep_o, cmdline, out, err);
        if (c_pareto->parsed())
            return cmd_pareto(pareto_o, cmdline);
        if (c_best->parsed())
            return cmd_best(best_o, cmdline);
        if (c_base->parsed())
            return cmd_baseline(base_o, cmdline);
    } catch (const FormatError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kPartialFailure;
    }
    return kUsageError;
}

} // namespace ugsim::cli
