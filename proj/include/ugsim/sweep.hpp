#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ugsim/dynamics.hpp"
#include "ugsim/generators.hpp"
#include "ugsim/interference.hpp"
#include "ugsim/metrics.hpp"

namespace ugsim {

inline constexpr const char* kToolVersion = "ugsim 0.1.0";

/// Per-replicate seed derived from the sweep's master seed, the network seed
/// and the replicate index (splitmix64 mixing). Independent of grid point,
/// so every configuration sees the same random streams.
std::uint64_t replicate_seed(std::uint64_t master_seed, std::uint64_t network_seed,
                             std::uint64_t replicate_index);

struct NetworkSpec {
    NetworkModel model = NetworkModel::BA;
    std::size_t n = 2000;
    std::size_t m = 2;
    std::size_t m0 = 0;
    std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};

    GenParams params(std::uint64_t seed) const { return {model, n, m, m0, seed}; }
};

/// One configuration of the grid; nullopt interference is the no-investment
/// baseline.
struct GridPoint {
    std::optional<InterferenceConfig> interference;
};

/// Default endowment grid: 10^(1 + 0.125k) truncated to cents for k = 0 and
/// k = 2..7.
std::vector<double> default_thetas();
/// Default POP/NEB thresholds 0.1, 0.2, ..., 1.0.
std::vector<double> default_thresholds();
/// Default NI thresholds: 10^(-3 + 0.125k) truncated to three decimals,
/// deduplicated (contains 0.001, 0.003, 0.004, 0.005, 0.007, 0.017, 0.031, 0.177).
std::vector<double> default_ni_thresholds();

struct SweepSpec {
    NetworkSpec network;
    GameParams game;
    SimConfig sim; ///< rng_seed is ignored; seeds derive from master_seed
    std::size_t replicates = 20;
    std::uint64_t master_seed = 0;

    std::vector<Scheme> schemes{Scheme::POP, Scheme::NEB, Scheme::NI_DEG, Scheme::NI_EIG};
    std::vector<TargetSet> targets{TargetSet::FairProposers, TargetSet::FairResponders,
                                   TargetSet::Strict};
    std::vector<double> thresholds = default_thresholds();
    std::vector<double> ni_thresholds = default_ni_thresholds();
    std::vector<double> thetas = default_thetas();
    bool include_baseline = false;

    void validate() const;
    /// Scheme-major expansion: scheme x target x threshold x theta, with the
    /// baseline first when requested.
    std::vector<GridPoint> grid() const;
};

/// Coordinates shared by raw and aggregate rows.
struct Coordinates {
    NetworkModel model = NetworkModel::BA;
    GridPoint point;
    GameParams game;
    double noise = 0.1;
    std::size_t generations = 0;
    std::size_t window = 0;
};

struct RunRecord {
    Coordinates coords;
    std::uint64_t network_seed = 0;
    std::uint64_t replicate_seed = 0;
    Frequencies freqs{};
    double fairness = 0.0;
    double total_cost = 0.0;
    std::uint64_t endowment_events = 0;
};

struct AggregateRecord {
    Coordinates coords;
    Aggregate agg;
};

struct SweepFailure {
    std::string coordinates;
    std::string message;
};

struct SweepOutput {
    std::vector<RunRecord> runs;             ///< sorted by (grid point, network seed, replicate)
    std::vector<AggregateRecord> aggregates; ///< one per grid point, grid order
    std::vector<SweepFailure> failures;
};

/// Runs every (grid point, network seed, replicate) unit on up to `jobs`
/// OpenMP threads (0 = runtime default). Output is independent of jobs and
/// completion order. Failed units are reported and skipped.
SweepOutput run_sweep(const SweepSpec& spec, int jobs = 0);

/// Groups raw rows by coordinates (first-appearance order) and aggregates.
std::vector<AggregateRecord> aggregate_runs(std::span<const RunRecord> runs);

struct ParetoPoint {
    double unfair_share = 0.0;
    double mean_cost = 0.0;
    std::size_t source = 0; ///< index into the input
};

/// Points not strictly dominated in both coordinates (minimisation), sorted by
/// unfair share, then cost, then input index. Ties are kept.
std::vector<ParetoPoint> pareto_front(std::span<const std::pair<double, double>> points);
std::vector<ParetoPoint> pareto_front(std::span<const AggregateRecord> records);

struct BestRow {
    Scheme scheme = Scheme::POP;
    double min_fairness = 0.0;
    AggregateRecord record;
};

/// For each level and scheme, the cheapest configuration whose mean fairness
/// reaches the level. Configurations that never invested are not candidates;
/// levels with no qualifying configuration produce no row.
std::vector<BestRow> best_per_fairness(std::span<const AggregateRecord> records,
                                       std::span<const double> levels);

struct BaselineSpec {
    NetworkSpec network;
    std::vector<double> l_grid;
    std::vector<double> h_grid;
    SimConfig sim;
    std::size_t replicates = 20;
    std::uint64_t master_seed = 0;
};

struct BaselinePoint {
    double l = 0.0;
    double h = 0.0;
    bool defined = false; ///< false when l >= h (not simulated)
    Aggregate agg;
};

/// No-interference runs over the (l, h) plane, l-major.
std::vector<BaselinePoint> baseline_scan(const BaselineSpec& spec, int jobs = 0);

// CSV. All writers emit '#'-prefixed metadata lines first.

std::string results_csv_header();
std::string aggregate_csv_header();
std::string pareto_csv_header();
std::string best_csv_header();
std::string baseline_csv_header();

void write_metadata(std::ostream& out, std::span<const std::string> lines);
void write_results_csv(std::ostream& out, std::span<const RunRecord> runs);
void write_aggregate_csv(std::ostream& out, std::span<const AggregateRecord> records);
void write_pareto_csv(std::ostream& out, std::span<const AggregateRecord> records,
                      std::span<const ParetoPoint> front);
void write_best_csv(std::ostream& out, std::span<const BestRow> rows);
void write_baseline_csv(std::ostream& out, std::span<const BaselinePoint> points);

std::string results_csv_row(const RunRecord& run);

/// Reads either an aggregate CSV or a raw results CSV (aggregated on load).
/// Throws FormatError carrying the 1-based file line of a malformed row.
std::vector<AggregateRecord> read_records_csv(std::istream& in);
std::vector<RunRecord> read_results_csv(std::istream& in);

// Config files (INI: [network] [game] [sim] [grid] sections).

SweepSpec load_sweep_spec(std::istream& in);
SweepSpec load_sweep_spec(const std::string& path);
/// "section.key = value" lines describing the fully resolved spec.
std::vector<std::string> describe(const SweepSpec& spec);

} // namespace ugsim
