#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Invocation {
    int code;
    std::string out;
    std::string err;
};

Invocation invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "ugsim");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = ugsim::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

/// Lines that are not '#' metadata.
std::vector<std::string> data_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        if (!line.empty() && line[0] != '#')
            lines.push_back(line);
    return lines;
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("ugsim_cli_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)) + "_" +
                std::to_string(std::rand()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string operator/(const std::string& name) const { return (path / name).string(); }
};

} // namespace

TEST_CASE("usage errors exit with 2") {
    CHECK(invoke({}).code == 2);
    CHECK(invoke({"frobnicate"}).code == 2);
    CHECK(invoke({"netgen", "--model", "ba"}).code == 2);
    TempDir dir;
    CHECK(invoke({"netgen", "--model", "dms", "--m", "1", "--seed", "1", "--out", dir / "x.edges"})
              .code == 2);
    CHECK(invoke({"run", "--network", dir / "missing.edges", "--seed", "1"}).code == 2);
    CHECK(invoke({"--help"}).code == 0);
}

TEST_CASE("netgen writes a reproducible edge list and a stats row") {
    TempDir dir;
    const std::vector<std::string> args{"netgen", "--model", "ba", "--n", "300", "--m", "2",
                                        "--seed", "7", "--out", dir / "a.edges"};
    auto r = invoke(args);
    REQUIRE(r.code == 0);
    auto lines = data_lines(r.out);
    REQUIRE(lines.size() == 2);
    CHECK(lines[0] == "n,m,model,seed,mean_degree,clustering,gamma");
    CHECK(lines[1].rfind("300,2,ba,7,", 0) == 0);

    auto args2 = args;
    args2.back() = dir / "b.edges";
    REQUIRE(invoke(args2).code == 0);
    CHECK(data_lines(slurp(dir / "a.edges")) == data_lines(slurp(dir / "b.edges")));
    CHECK(slurp(dir / "a.edges").rfind("# ", 0) == 0);
}

TEST_CASE("run command") {
    TempDir dir;
    REQUIRE(invoke({"netgen", "--model", "ba", "--n", "200", "--seed", "3", "--out",
                    dir / "net.edges"})
                .code == 0);
    const std::vector<std::string> common{"run", "--network", dir / "net.edges", "--seed", "11",
                                          "--generations", "600", "--window", "100"};

    SUBCASE("baseline costs nothing") {
        auto r = invoke(common);
        REQUIRE(r.code == 0);
        auto lines = data_lines(r.out);
        REQUIRE(lines.size() == 2);
        CHECK(lines[1].find(",NONE,-,") != std::string::npos);
        CHECK(lines[1].substr(lines[1].rfind(',', lines[1].rfind(',') - 1)) == ",0.00,0");
    }
    SUBCASE("interference flags and decision log") {
        auto args = common;
        for (const char* a : {"--scheme", "neb", "--target", "hh,lh", "--threshold", "0.7",
                              "--theta", "56.23", "--log-decisions"})
            args.emplace_back(a);
        args.push_back(dir / "log.csv");
        auto r = invoke(args);
        REQUIRE(r.code == 0);
        auto log = data_lines(slurp(dir / "log.csv"));
        REQUIRE(log.size() == 601);
        CHECK(log[0] == "generation,scheme,invested_count,cost_delta");
        std::uint64_t events = 0;
        for (std::size_t k = 1; k < log.size(); ++k) {
            std::istringstream row(log[k]);
            std::string g, scheme, count;
            std::getline(row, g, ',');
            std::getline(row, scheme, ',');
            std::getline(row, count, ',');
            CHECK(scheme == "NEB");
            events += std::stoull(count);
        }
        const auto row = data_lines(r.out)[1];
        CHECK(row.find(",NEB,HH LH,0.7,56.23,") != std::string::npos);
        CHECK(row.substr(row.rfind(',') + 1) == std::to_string(events));

        // Same invocation, same output.
        CHECK(invoke(args).out == r.out);
    }
    SUBCASE("theta zero is rejected when a scheme is set") {
        auto args = common;
        for (const char* a : {"--scheme", "pop", "--theta", "0"})
            args.emplace_back(a);
        CHECK(invoke(args).code == 2);
        auto none = common;
        for (const char* a : {"--scheme", "none", "--theta", "0"})
            none.emplace_back(a);
        CHECK(invoke(none).code == 0);
    }
    SUBCASE("bad target grammar") {
        auto args = common;
        for (const char* a : {"--scheme", "neb", "--target", "hh,ll", "--theta", "10"})
            args.emplace_back(a);
        CHECK(invoke(args).code == 2);
    }
}

TEST_CASE("sweep, pareto and best commands") {
    TempDir dir;
    {
        std::ofstream cfg(dir / "desk.cfg");
        cfg << "[network]\nn = 120\nseeds = 1 2\n\n[sim]\ngenerations = 300\nwindow = 50\n"
               "replicates = 2\nseed = 9\n\n[grid]\nschemes = neb pop\ntargets = hh,lh\n"
               "thresholds = 0.3 0.7\nthetas = 10 56.23\nbaseline = true\n";
    }
    fs::create_directories(dir / "a");
    fs::create_directories(dir / "b");
    REQUIRE(invoke({"sweep", "--config", dir / "desk.cfg", "--out-dir", dir / "a", "--jobs", "2"})
                .code == 0);
    REQUIRE(invoke({"sweep", "--config", dir / "desk.cfg", "--out-dir", dir / "b", "--jobs", "1"})
                .code == 0);
    // Thread count does not change the data.
    CHECK(data_lines(slurp(dir / "a/results.csv")) == data_lines(slurp(dir / "b/results.csv")));
    CHECK(data_lines(slurp(dir / "a/aggregate.csv")) == data_lines(slurp(dir / "b/aggregate.csv")));
    // Repeating the identical command reproduces the files byte for byte.
    const auto first = slurp(dir / "a/results.csv");
    const auto first_agg = slurp(dir / "a/aggregate.csv");
    REQUIRE(invoke({"sweep", "--config", dir / "desk.cfg", "--out-dir", dir / "a", "--jobs", "2"})
                .code == 0);
    CHECK(slurp(dir / "a/results.csv") == first);
    CHECK(slurp(dir / "a/aggregate.csv") == first_agg);
    const auto meta = slurp(dir / "a/results.csv");
    CHECK(meta.find("# tool: ugsim") != std::string::npos);
    CHECK(meta.find("sim.seed = 9") != std::string::npos);
    CHECK(data_lines(meta).size() == 1 + 9 * 2 * 2);

    REQUIRE(invoke({"pareto", "--in", dir / "a/aggregate.csv", "--out", dir / "front.csv"}).code ==
            0);
    auto front = data_lines(slurp(dir / "front.csv"));
    CHECK(front.size() >= 2);
    CHECK(front[0] == "model,scheme,target,threshold,theta,mean_fairness,unfair,mean_cost,se_cost");

    REQUIRE(invoke({"best", "--in", dir / "a/results.csv", "--out", dir / "best.csv",
                    "--min-fairness", "0.1,1.01"})
                .code == 0);
    auto best = data_lines(slurp(dir / "best.csv"));
    CHECK(best[0] == "scheme,min_fairness,target,threshold,theta,mean_fairness,cost_mean,cost_se");

    CHECK(invoke({"sweep", "--config", dir / "missing.cfg"}).code == 2);
}

TEST_CASE("pareto on a toy CSV") {
    TempDir dir;
    {
        std::ofstream in(dir / "toy.csv");
        in << "model,scheme,target,threshold,theta,l,h,K,generations,window,replicates,"
              "mean_freq_hh,mean_freq_hl,mean_freq_lh,mean_freq_ll,mean_fairness,se_fairness,"
              "mean_unfair,mean_cost,se_cost\n"
              "ba,NEB,HH LH,0.7,56.23,0.1,0.6,0.1,100,10,1,0.9,0,0.1,0,0.9,0,0.1,100,0\n"
              "ba,NEB,HH LH,0.5,56.23,0.1,0.6,0.1,100,10,1,0.8,0,0.2,0,0.8,0,0.2,50,0\n"
              "ba,NEB,HH LH,0.3,56.23,0.1,0.6,0.1,100,10,1,0.85,0,0.15,0,0.85,0,0.15,120,0\n";
    }
    REQUIRE(invoke({"pareto", "--in", dir / "toy.csv", "--out", dir / "front.csv"}).code == 0);
    auto front = data_lines(slurp(dir / "front.csv"));
    REQUIRE(front.size() == 3);
    CHECK(front[1].find(",0.7,") != std::string::npos);
    CHECK(front[2].find(",0.5,") != std::string::npos);

    {
        std::ofstream bad(dir / "bad.csv");
        bad << "model,scheme,target,threshold,theta,l,h,K,generations,window,replicates,"
               "mean_freq_hh,mean_freq_hl,mean_freq_lh,mean_freq_ll,mean_fairness,se_fairness,"
               "mean_unfair,mean_cost,se_cost\nba,NEB,oops\n";
    }
    auto r = invoke({"pareto", "--in", dir / "bad.csv", "--out", dir / "x.csv"});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 2") != std::string::npos);
}

TEST_CASE("baseline command marks undefined points") {
    TempDir dir;
    auto r = invoke({"baseline", "--n", "60", "--network-seeds", "1", "--replicates", "1",
                     "--generations", "100", "--window", "10", "--seed", "2", "--l-grid",
                     "0.1,0.5", "--h-grid", "0.3,0.6", "--out", dir / "base.csv"});
    REQUIRE(r.code == 0);
    auto rows = data_lines(slurp(dir / "base.csv"));
    REQUIRE(rows.size() == 5);
    CHECK(rows[0] == "l,h,defined,freq_hh,freq_hl,freq_lh,freq_ll,fairness,se_fairness,runs");
    int undefined = 0;
    for (std::size_t k = 1; k < rows.size(); ++k) {
        const bool is_undefined = rows[k].rfind("0.5,0.3,0,", 0) == 0;
        undefined += is_undefined;
        if (!is_undefined)
            CHECK(rows[k].find(",1,") != std::string::npos);
    }
    CHECK(undefined == 1);
}
