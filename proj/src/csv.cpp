#include <charconv>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "ugsim/error.hpp"
#include "ugsim/sweep.hpp"

namespace ugsim {

namespace {

std::string fmt_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string fmt_cost(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string scheme_field(const GridPoint& p) {
    return p.interference ? std::string(to_string(p.interference->scheme)) : "NONE";
}

std::string target_field(const GridPoint& p) {
    return p.interference ? std::string(to_string(p.interference->target)) : "-";
}

double threshold_of(const GridPoint& p) { return p.interference ? p.interference->threshold : 0.0; }
double theta_of(const GridPoint& p) { return p.interference ? p.interference->theta : 0.0; }

std::string coordinate_fields(const Coordinates& c) {
    return scheme_field(c.point) + "," + target_field(c.point) + "," +
           fmt_real(threshold_of(c.point)) + "," + fmt_real(theta_of(c.point)) + "," +
           fmt_real(c.game.l) + "," + fmt_real(c.game.h) + "," + fmt_real(c.noise) + "," +
           std::to_string(c.generations) + "," + std::to_string(c.window);
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        auto comma = line.find(',', start);
        out.push_back(line.substr(start, comma == std::string_view::npos ? comma : comma - start));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

/// Header-indexed access to one CSV row.
class Row {
public:
    Row(const std::map<std::string, std::size_t>& cols, std::vector<std::string_view> fields,
        std::size_t line)
        : cols_(cols), fields_(std::move(fields)), line_(line) {}

    std::string_view text(const std::string& name) const {
        auto it = cols_.find(name);
        if (it == cols_.end())
            throw FormatError("missing column '" + name + "'", line_);
        return fields_[it->second];
    }

    double real(const std::string& name) const {
        const std::string s(text(name));
        char* end = nullptr;
        const double v = std::strtod(s.c_str(), &end);
        if (s.empty() || end != s.c_str() + s.size())
            throw FormatError("column '" + name + "': '" + s + "' is not a number", line_);
        return v;
    }

    std::uint64_t integer(const std::string& name) const {
        auto s = text(name);
        std::uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
            throw FormatError("column '" + name + "': '" + std::string(s) +
                                  "' is not a non-negative integer",
                              line_);
        return v;
    }

    std::size_t line() const { return line_; }

private:
    const std::map<std::string, std::size_t>& cols_;
    std::vector<std::string_view> fields_;
    std::size_t line_;
};

Coordinates read_coordinates(const Row& row) {
    Coordinates c;
    try {
        c.model = parse_network_model(row.text("model"));
        const auto scheme = row.text("scheme");
        if (scheme != "NONE") {
            InterferenceConfig cfg;
            cfg.scheme = parse_scheme(scheme);
            cfg.target = parse_target(row.text("target"));
            cfg.threshold = row.real("threshold");
            cfg.theta = row.real("theta");
            c.point.interference = cfg;
        }
    } catch (const ParameterError& e) {
        throw FormatError(e.what(), row.line());
    }
    c.game = {row.real("l"), row.real("h")};
    c.noise = row.real("K");
    c.generations = row.integer("generations");
    c.window = row.integer("window");
    return c;
}

/// Iterates data rows, skipping comments and blank lines.
template <typename Fn>
void for_each_row(std::istream& in, Fn&& fn) {
    std::map<std::string, std::size_t> cols;
    bool have_header = false;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line.front() == '#')
            continue;
        auto fields = split(line);
        if (!have_header) {
            for (std::size_t k = 0; k < fields.size(); ++k)
                cols[std::string(fields[k])] = k;
            have_header = true;
            continue;
        }
        if (fields.size() != cols.size())
            throw FormatError("expected " + std::to_string(cols.size()) + " fields, found " +
                                  std::to_string(fields.size()),
                              line_no);
        fn(Row(cols, std::move(fields), line_no));
    }
    if (!have_header)
        throw FormatError("missing CSV header", line_no);
}

} // namespace

std::string results_csv_header() {
    return "model,network_seed,replicate_seed,scheme,target,threshold,theta,l,h,K,generations,"
           "window,freq_hh,freq_hl,freq_lh,freq_ll,fairness,unfair,total_cost,endowment_events";
}

std::string aggregate_csv_header() {
    return "model,scheme,target,threshold,theta,l,h,K,generations,window,replicates,"
           "mean_freq_hh,mean_freq_hl,mean_freq_lh,mean_freq_ll,mean_fairness,se_fairness,"
           "mean_unfair,mean_cost,se_cost";
}

std::string pareto_csv_header() {
    return "model,scheme,target,threshold,theta,mean_fairness,unfair,mean_cost,se_cost";
}

std::string best_csv_header() {
    return "scheme,min_fairness,target,threshold,theta,mean_fairness,cost_mean,cost_se";
}

std::string baseline_csv_header() {
    return "l,h,defined,freq_hh,freq_hl,freq_lh,freq_ll,fairness,se_fairness,runs";
}

void write_metadata(std::ostream& out, std::span<const std::string> lines) {
    for (const auto& l : lines)
        out << "# " << l << '\n';
}

std::string results_csv_row(const RunRecord& r) {
    const auto& c = r.coords;
    return std::string(to_string(c.model)) + "," + std::to_string(r.network_seed) + "," +
           std::to_string(r.replicate_seed) + "," + coordinate_fields(c) + "," +
           fmt_real(r.freqs[0]) + "," + fmt_real(r.freqs[1]) + "," + fmt_real(r.freqs[2]) + "," +
           fmt_real(r.freqs[3]) + "," + fmt_real(r.fairness) + "," + fmt_real(1.0 - r.fairness) +
           "," + fmt_cost(r.total_cost) + "," + std::to_string(r.endowment_events);
}

void write_results_csv(std::ostream& out, std::span<const RunRecord> runs) {
    out << results_csv_header() << '\n';
    for (const auto& r : runs)
        out << results_csv_row(r) << '\n';
}

void write_aggregate_csv(std::ostream& out, std::span<const AggregateRecord> records) {
    out << aggregate_csv_header() << '\n';
    for (const auto& r : records) {
        const auto& a = r.agg;
        out << to_string(r.coords.model) << ',' << coordinate_fields(r.coords) << ','
            << a.replicate_count << ',' << fmt_real(a.mean_freqs[0]) << ','
            << fmt_real(a.mean_freqs[1]) << ',' << fmt_real(a.mean_freqs[2]) << ','
            << fmt_real(a.mean_freqs[3]) << ',' << fmt_real(a.mean_fairness) << ','
            << fmt_real(a.se_fairness) << ',' << fmt_real(1.0 - a.mean_fairness) << ','
            << fmt_cost(a.mean_cost) << ',' << fmt_cost(a.se_cost) << '\n';
    }
}

void write_pareto_csv(std::ostream& out, std::span<const AggregateRecord> records,
                      std::span<const ParetoPoint> front) {
    out << pareto_csv_header() << '\n';
    for (const auto& p : front) {
        const auto& r = records[p.source];
        out << to_string(r.coords.model) << ',' << scheme_field(r.coords.point) << ','
            << target_field(r.coords.point) << ',' << fmt_real(threshold_of(r.coords.point))
            << ',' << fmt_real(theta_of(r.coords.point)) << ',' << fmt_real(r.agg.mean_fairness)
            << ',' << fmt_real(p.unfair_share) << ',' << fmt_cost(p.mean_cost) << ','
            << fmt_cost(r.agg.se_cost) << '\n';
    }
}

void write_best_csv(std::ostream& out, std::span<const BestRow> rows) {
    out << best_csv_header() << '\n';
    for (const auto& b : rows) {
        const auto& r = b.record;
        out << to_string(b.scheme) << ',' << fmt_real(b.min_fairness) << ','
            << target_field(r.coords.point) << ',' << fmt_real(threshold_of(r.coords.point))
            << ',' << fmt_real(theta_of(r.coords.point)) << ',' << fmt_real(r.agg.mean_fairness)
            << ',' << fmt_cost(r.agg.mean_cost) << ',' << fmt_cost(r.agg.se_cost) << '\n';
    }
}

void write_baseline_csv(std::ostream& out, std::span<const BaselinePoint> points) {
    out << baseline_csv_header() << '\n';
    for (const auto& p : points) {
        out << fmt_real(p.l) << ',' << fmt_real(p.h) << ',' << (p.defined ? 1 : 0);
        if (p.defined) {
            const auto& a = p.agg;
            out << ',' << fmt_real(a.mean_freqs[0]) << ',' << fmt_real(a.mean_freqs[1]) << ','
                << fmt_real(a.mean_freqs[2]) << ',' << fmt_real(a.mean_freqs[3]) << ','
                << fmt_real(a.mean_fairness) << ',' << fmt_real(a.se_fairness) << ','
                << a.replicate_count;
        } else {
            out << ",,,,,,,0";
        }
        out << '\n';
    }
}

std::vector<RunRecord> read_results_csv(std::istream& in) {
    std::vector<RunRecord> out;
    for_each_row(in, [&](const Row& row) {
        RunRecord r;
        r.coords = read_coordinates(row);
        r.network_seed = row.integer("network_seed");
        r.replicate_seed = row.integer("replicate_seed");
        r.freqs = {row.real("freq_hh"), row.real("freq_hl"), row.real("freq_lh"),
                   row.real("freq_ll")};
        r.fairness = row.real("fairness");
        r.total_cost = row.real("total_cost");
        r.endowment_events = row.integer("endowment_events");
        out.push_back(r);
    });
    return out;
}

std::vector<AggregateRecord> read_records_csv(std::istream& in) {
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();

    // Raw results carry per-replicate seeds; aggregate rows carry means.
    bool raw = false;
    {
        std::istringstream probe(text);
        std::string line;
        while (std::getline(probe, line))
            if (!line.empty() && line.front() != '#') {
                raw = line.find("replicate_seed") != std::string::npos;
                break;
            }
    }
    std::istringstream body(text);
    if (raw) {
        const auto runs = read_results_csv(body);
        return aggregate_runs(runs);
    }
    std::vector<AggregateRecord> out;
    for_each_row(body, [&](const Row& row) {
        AggregateRecord r;
        r.coords = read_coordinates(row);
        r.agg.replicate_count = row.integer("replicates");
        r.agg.mean_freqs = {row.real("mean_freq_hh"), row.real("mean_freq_hl"),
                            row.real("mean_freq_lh"), row.real("mean_freq_ll")};
        r.agg.mean_fairness = row.real("mean_fairness");
        r.agg.se_fairness = row.real("se_fairness");
        r.agg.mean_cost = row.real("mean_cost");
        r.agg.se_cost = row.real("se_cost");
        out.push_back(r);
    });
    return out;
}

} // namespace ugsim
