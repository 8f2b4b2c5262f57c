#include <fstream>
#include <map>
#include <istream>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "ugsim/error.hpp"
#include "ugsim/sweep.hpp"

namespace ugsim {

namespace {

namespace pt = boost::property_tree;

std::vector<std::string> words(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> out;
    for (std::string w; in >> w;)
        out.push_back(w);
    return out;
}

template <typename T>
T parse_number(const std::string& key, const std::string& text) {
    std::istringstream in(text);
    T value{};
    in >> value;
    if (!in || !(in >> std::ws).eof())
        throw ParameterError("config key '" + key + "': '" + text + "' is not a valid number");
    return value;
}

template <typename T>
std::vector<T> parse_list(const std::string& key, const std::string& text) {
    std::vector<T> out;
    for (const auto& w : words(text))
        out.push_back(parse_number<T>(key, w));
    if (out.empty())
        throw ParameterError("config key '" + key + "' must not be empty");
    return out;
}

bool parse_bool(const std::string& key, const std::string& text) {
    if (text == "true" || text == "1" || text == "yes")
        return true;
    if (text == "false" || text == "0" || text == "no")
        return false;
    throw ParameterError("config key '" + key + "': expected true or false");
}

std::string join(const std::vector<double>& v) {
    std::ostringstream out;
    out.precision(6);
    for (std::size_t k = 0; k < v.size(); ++k)
        out << (k ? " " : "") << v[k];
    return out.str();
}

const std::map<std::string, std::set<std::string>> kKnownKeys{
    {"network", {"model", "n", "m", "m0", "seeds", "seed_count"}},
    {"game", {"l", "h"}},
    {"sim", {"generations", "window", "K", "replicates", "seed", "update"}},
    {"grid", {"schemes", "targets", "thresholds", "ni_thresholds", "thetas", "baseline"}},
};

} // namespace

SweepSpec load_sweep_spec(std::istream& in) {
    pt::ptree tree;
    try {
        pt::read_ini(in, tree);
    } catch (const pt::ini_parser_error& e) {
        throw FormatError(e.message(), e.line());
    }

    for (const auto& [section, body] : tree) {
        auto known = kKnownKeys.find(section);
        if (known == kKnownKeys.end())
            throw ParameterError("unknown config section [" + section + "]");
        if (body.empty())
            throw ParameterError("config entry '" + section + "' must be a [section]");
        for (const auto& [key, value] : body)
            if (!known->second.contains(key))
                throw ParameterError("unknown config key '" + section + "." + key + "'");
    }

    SweepSpec spec;
    auto get = [&](const std::string& path) { return tree.get_optional<std::string>(path); };

    if (auto v = get("network.model"))
        spec.network.model = parse_network_model(*v);
    if (auto v = get("network.n"))
        spec.network.n = parse_number<std::size_t>("network.n", *v);
    if (auto v = get("network.m"))
        spec.network.m = parse_number<std::size_t>("network.m", *v);
    if (auto v = get("network.m0"))
        spec.network.m0 = parse_number<std::size_t>("network.m0", *v);
    if (auto v = get("network.seed_count")) {
        const auto count = parse_number<std::size_t>("network.seed_count", *v);
        spec.network.seeds.clear();
        for (std::size_t k = 1; k <= count; ++k)
            spec.network.seeds.push_back(k);
    }
    if (auto v = get("network.seeds"))
        spec.network.seeds = parse_list<std::uint64_t>("network.seeds", *v);

    if (auto v = get("game.l"))
        spec.game.l = parse_number<double>("game.l", *v);
    if (auto v = get("game.h"))
        spec.game.h = parse_number<double>("game.h", *v);

    if (auto v = get("sim.generations"))
        spec.sim.generations = parse_number<std::size_t>("sim.generations", *v);
    if (auto v = get("sim.window"))
        spec.sim.window = parse_number<std::size_t>("sim.window", *v);
    if (auto v = get("sim.K"))
        spec.sim.noise = parse_number<double>("sim.K", *v);
    if (auto v = get("sim.replicates"))
        spec.replicates = parse_number<std::size_t>("sim.replicates", *v);
    if (auto v = get("sim.seed"))
        spec.master_seed = parse_number<std::uint64_t>("sim.seed", *v);
    else
        throw ParameterError("config key 'sim.seed' is required");
    if (auto v = get("sim.update")) {
        if (*v == "sync")
            spec.sim.update_mode = UpdateMode::Synchronous;
        else if (*v == "async")
            spec.sim.update_mode = UpdateMode::Asynchronous;
        else
            throw ParameterError("sim.update must be sync or async");
    }

    if (auto v = get("grid.schemes")) {
        spec.schemes.clear();
        for (const auto& w : words(*v))
            spec.schemes.push_back(parse_scheme(w));
    }
    if (auto v = get("grid.targets")) {
        spec.targets.clear();
        for (const auto& w : words(*v))
            spec.targets.push_back(parse_target(w));
    }
    if (auto v = get("grid.thresholds"))
        spec.thresholds = parse_list<double>("grid.thresholds", *v);
    if (auto v = get("grid.ni_thresholds"))
        spec.ni_thresholds = parse_list<double>("grid.ni_thresholds", *v);
    if (auto v = get("grid.thetas"))
        spec.thetas = parse_list<double>("grid.thetas", *v);
    if (auto v = get("grid.baseline"))
        spec.include_baseline = parse_bool("grid.baseline", *v);

    for (double t : spec.thetas)
        if (!(t > 0.0))
            throw ParameterError("grid.thetas must all be positive");
    spec.validate();
    return spec;
}

SweepSpec load_sweep_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParameterError("cannot open config file '" + path + "'");
    return load_sweep_spec(in);
}

std::vector<std::string> describe(const SweepSpec& spec) {
    std::vector<std::string> out;
    auto add = [&](const std::string& k, const std::string& v) { out.push_back(k + " = " + v); };
    std::ostringstream seeds;
    for (std::size_t k = 0; k < spec.network.seeds.size(); ++k)
        seeds << (k ? " " : "") << spec.network.seeds[k];
    add("network.model", std::string(to_string(spec.network.model)));
    add("network.n", std::to_string(spec.network.n));
    add("network.m", std::to_string(spec.network.m));
    add("network.m0", std::to_string(spec.network.m0 == 0 ? spec.network.m + 1 : spec.network.m0));
    add("network.seeds", seeds.str());
    add("game.l", join({spec.game.l}));
    add("game.h", join({spec.game.h}));
    add("sim.generations", std::to_string(spec.sim.generations));
    add("sim.window", std::to_string(spec.sim.window));
    add("sim.K", join({spec.sim.noise}));
    add("sim.replicates", std::to_string(spec.replicates));
    add("sim.seed", std::to_string(spec.master_seed));
    add("sim.update", spec.sim.update_mode == UpdateMode::Synchronous ? "sync" : "async");
    std::string schemes, targets;
    for (Scheme s : spec.schemes)
        schemes += (schemes.empty() ? "" : " ") + std::string(to_string(s));
    for (TargetSet t : spec.targets) {
        std::string name(to_string(t));
        for (char& c : name)
            if (c == ' ')
                c = '+';
        targets += (targets.empty() ? "" : " ") + name;
    }
    add("grid.schemes", schemes);
    add("grid.targets", targets);
    add("grid.thresholds", join(spec.thresholds));
    add("grid.ni_thresholds", join(spec.ni_thresholds));
    add("grid.thetas", join(spec.thetas));
    add("grid.baseline", spec.include_baseline ? "true" : "false");
    return out;
}

} // namespace ugsim
