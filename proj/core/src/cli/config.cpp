#include "nmeasure/cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "nmeasure/core/error.hpp"
#include "nmeasure/metrics/csv.hpp"
#include "nmeasure/problems/problems.hpp"

namespace nmeasure {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// Returns an error message, or nullopt when the value was applied.
using Setter = std::function<std::optional<std::string>(TrainConfig&, const std::string&)>;
using Getter = std::function<std::string(const TrainConfig&)>;

struct KeySpec {
    std::string section;
    std::string key;
    std::string help;
    Setter set;
    Getter get;
};

std::optional<std::string> parse_count(const std::string& v, std::size_t& out) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), value);
    if (ec != std::errc() || ptr != v.data() + v.size() || v.empty()) {
        return "expected a non-negative integer, got '" + v + "'";
    }
    out = value;
    return std::nullopt;
}

std::optional<std::string> parse_seed(const std::string& v, std::uint64_t& out) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), value);
    if (ec != std::errc() || ptr != v.data() + v.size() || v.empty()) {
        return "expected an unsigned 64-bit integer, got '" + v + "'";
    }
    out = value;
    return std::nullopt;
}

std::optional<std::string> parse_real(const std::string& v, double& out) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), value);
    if (ec != std::errc() || ptr != v.data() + v.size() || v.empty()) return "expected a number, got '" + v + "'";
    out = value;
    return std::nullopt;
}

KeySpec count_key(std::string section, std::string key, std::string help, std::size_t TrainConfig::*field) {
    return {std::move(section), std::move(key), std::move(help),
            [field](TrainConfig& c, const std::string& v) { return parse_count(v, c.*field); },
            [field](const TrainConfig& c) { return std::to_string(c.*field); }};
}

template <typename Member>
KeySpec nested_count(std::string section, std::string key, std::string help, Member TrainConfig::*outer,
                     std::size_t Member::*inner) {
    return {std::move(section), std::move(key), std::move(help),
            [outer, inner](TrainConfig& c, const std::string& v) { return parse_count(v, c.*outer.*inner); },
            [outer, inner](const TrainConfig& c) { return std::to_string(c.*outer.*inner); }};
}

template <typename Member>
KeySpec nested_real(std::string section, std::string key, std::string help, Member TrainConfig::*outer,
                    double Member::*inner) {
    return {std::move(section), std::move(key), std::move(help),
            [outer, inner](TrainConfig& c, const std::string& v) { return parse_real(v, c.*outer.*inner); },
            [outer, inner](const TrainConfig& c) { return format_double(c.*outer.*inner); }};
}

KeySpec seed_key(std::string key, std::string help, std::uint64_t TrainSeeds::*field) {
    return {"seeds", std::move(key), std::move(help),
            [field](TrainConfig& c, const std::string& v) { return parse_seed(v, c.seeds.*field); },
            [field](const TrainConfig& c) { return std::to_string(c.seeds.*field); }};
}

template <typename Enum>
std::optional<std::string> parse_enum(const std::string& v, Enum& out, Enum (*from)(const std::string&)) {
    try {
        out = from(v);
    } catch (const InvalidArgument& e) {
        return e.what();
    }
    return std::nullopt;
}

const std::vector<KeySpec>& schema() {
    static const std::vector<KeySpec> keys = [] {
        std::vector<KeySpec> k;
        k.push_back({"run", "problem", "registered problem: bistable, diffusion or reaction_diffusion (required)",
                     [](TrainConfig& c, const std::string& v) -> std::optional<std::string> {
                         c.problem = v;
                         return std::nullopt;
                     },
                     [](const TrainConfig& c) { return c.problem; }});
        k.push_back({"run", "variant", "measure variant: fullnn, pce_nn or galerkin_nn",
                     [](TrainConfig& c, const std::string& v) {
                         return parse_enum(v, c.variant, &measure_variant_from_string);
                     },
                     [](const TrainConfig& c) { return to_string(c.variant); }});
        k.push_back(count_key("run", "outer_iterations", "outer L-BFGS steps", &TrainConfig::outer_iterations));
        k.push_back(count_key("run", "checkpoint_every", "checkpoint period in outer steps",
                              &TrainConfig::checkpoint_every));

        k.push_back(count_key("network", "hidden_layers", "number of hidden layers", &TrainConfig::hidden_layers));
        k.push_back(count_key("network", "hidden_width", "neurons per hidden layer", &TrainConfig::hidden_width));
        k.push_back({"network", "activation", "snake or tanh",
                     [](TrainConfig& c, const std::string& v) {
                         return parse_enum(v, c.activation, &activation_from_string);
                     },
                     [](const TrainConfig& c) { return to_string(c.activation); }});
        k.push_back(count_key("network", "pce_degree", "total degree of the chaos basis (pce_nn)",
                              &TrainConfig::pce_degree));
        k.push_back(count_key("network", "galerkin_degree_x", "spatial degree of the space-time basis (galerkin_nn)",
                              &TrainConfig::galerkin_degree_x));
        k.push_back(count_key("network", "galerkin_degree_t", "temporal degree of the space-time basis (galerkin_nn)",
                              &TrainConfig::galerkin_degree_t));

        k.push_back(nested_real("optimizer", "lr", "L-BFGS step length", &TrainConfig::optimizer, &OptimizerConfig::lr));
        k.push_back(nested_count("optimizer", "max_inner_iterations", "L-BFGS iterations per outer step",
                                 &TrainConfig::optimizer, &OptimizerConfig::max_inner_iterations));
        k.push_back(nested_count("optimizer", "history_size", "L-BFGS curvature pairs kept", &TrainConfig::optimizer,
                                 &OptimizerConfig::history_size));

        k.push_back({"sampling", "strategy", "uniform_random or cartesian_product",
                     [](TrainConfig& c, const std::string& v) {
                         return parse_enum(v, c.strategy, &sampling_strategy_from_string);
                     },
                     [](const TrainConfig& c) { return to_string(c.strategy); }});
        k.push_back(nested_count("sampling", "n_x", "spatial collocation count", &TrainConfig::counts,
                                 &CollocationCounts::n_x));
        k.push_back(nested_count("sampling", "n_t", "temporal collocation count", &TrainConfig::counts,
                                 &CollocationCounts::n_t));
        k.push_back(nested_count("sampling", "n_boundary", "points per spatial boundary", &TrainConfig::counts,
                                 &CollocationCounts::n_boundary));
        k.push_back(nested_count("sampling", "n_initial", "initial-time points", &TrainConfig::counts,
                                 &CollocationCounts::n_initial));
        k.push_back(count_key("sampling", "n_xi", "parameter draws per batch", &TrainConfig::n_xi));
        k.push_back(count_key("sampling", "n_xi_test", "parameter draws of the test batch (0: same as n_xi)",
                              &TrainConfig::n_xi_test));
        k.push_back(count_key("sampling", "resample_domain_every", "outer steps between collocation redraws",
                              &TrainConfig::resample_domain_every));
        k.push_back(count_key("sampling", "resample_params_every", "outer steps between parameter redraws",
                              &TrainConfig::resample_params_every));

        k.push_back(nested_real("loss", "interior", "interior residual weight", &TrainConfig::weights,
                                &LossWeights::interior));
        k.push_back(nested_real("loss", "boundary", "boundary residual weight", &TrainConfig::weights,
                                &LossWeights::boundary));
        k.push_back(nested_real("loss", "initial", "initial residual weight", &TrainConfig::weights,
                                &LossWeights::initial));

        k.push_back(seed_key("init", "network initialisation", &TrainSeeds::init));
        k.push_back(seed_key("domain", "collocation draws", &TrainSeeds::domain));
        k.push_back(seed_key("params", "parameter draws", &TrainSeeds::params));
        k.push_back(seed_key("test", "held-out test batch", &TrainSeeds::test));
        return k;
    }();
    return keys;
}

const KeySpec* find_key(const std::string& section, const std::string& key) {
    for (const auto& k : schema()) {
        if (k.section == section && k.key == key) return &k;
    }
    return nullptr;
}

std::string where(const IniEntry& e) {
    return e.line > 0 ? " (line " + std::to_string(e.line) + ")" : " (override)";
}

}  // namespace

IniDocument parse_ini(const std::string& text) {
    IniDocument doc;
    std::istringstream in(text);
    std::string raw;
    std::string section;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = raw;
        const auto hash = s.find_first_of("#;");
        if (hash != std::string::npos) s.erase(hash);
        s = trim(s);
        if (s.empty()) continue;
        if (s.front() == '[') {
            if (s.back() != ']') {
                doc.errors.push_back("line " + std::to_string(line) + ": unterminated section header");
                continue;
            }
            section = trim(s.substr(1, s.size() - 2));
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string::npos) {
            doc.errors.push_back("line " + std::to_string(line) + ": expected 'key = value', got '" + s + "'");
            continue;
        }
        IniEntry e{section, trim(s.substr(0, eq)), trim(s.substr(eq + 1)), line};
        if (e.key.empty()) {
            doc.errors.push_back("line " + std::to_string(line) + ": empty key");
            continue;
        }
        doc.entries.push_back(std::move(e));
    }
    return doc;
}

TrainConfig parse_train_config(const std::string& text, const std::vector<std::string>& overrides) {
    IniDocument doc = parse_ini(text);
    std::vector<std::string> errors = doc.errors;

    std::vector<IniEntry> extra;
    for (const auto& o : overrides) {
        const auto eq = o.find('=');
        const auto dot = o.find('.');
        if (eq == std::string::npos || dot == std::string::npos || dot > eq) {
            errors.push_back("override '" + o + "': expected section.key=value");
            continue;
        }
        extra.push_back({trim(o.substr(0, dot)), trim(o.substr(dot + 1, eq - dot - 1)), trim(o.substr(eq + 1)), 0});
    }

    // The problem and variant select the defaults every other key overrides.
    std::string problem;
    MeasureVariant variant = MeasureVariant::fullnn;
    for (const auto* list : {&doc.entries, &extra}) {
        for (const auto& e : *list) {
            if (e.section == "run" && e.key == "problem") problem = e.value;
            if (e.section == "run" && e.key == "variant") {
                try {
                    variant = measure_variant_from_string(e.value);
                } catch (const InvalidArgument&) {
                }
            }
        }
    }
    const auto names = problem_names();
    const bool known = std::find(names.begin(), names.end(), problem) != names.end();
    TrainConfig config = default_train_config(known ? problem : names.front(), variant);
    config.problem = problem;

    std::set<std::pair<std::string, std::string>> seen;
    auto apply = [&](const IniEntry& e, bool is_override) {
        const KeySpec* spec = find_key(e.section, e.key);
        const std::string name = (e.section.empty() ? "" : e.section + ".") + e.key;
        if (!spec) {
            bool section_known = false;
            for (const auto& k : schema()) section_known |= k.section == e.section;
            if (!section_known) {
                errors.push_back("unknown section [" + e.section + "] for key '" + e.key + "'" + where(e));
            } else {
                errors.push_back("unknown key '" + name + "'" + where(e));
            }
            return;
        }
        if (!is_override && !seen.insert({e.section, e.key}).second) {
            errors.push_back("duplicate key '" + name + "'" + where(e));
            return;
        }
        if (auto err = spec->set(config, e.value)) errors.push_back(name + ": " + *err + where(e));
    };
    for (const auto& e : doc.entries) apply(e, false);
    for (const auto& e : extra) apply(e, true);

    for (const auto& v : config.violations()) errors.push_back(v);
    if (!errors.empty()) {
        std::string msg = "invalid configuration:";
        for (const auto& e : errors) msg += "\n  - " + e;
        throw InvalidArgument(msg);
    }
    return config;
}

TrainConfig load_train_config(const std::filesystem::path& path, const std::vector<std::string>& overrides) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot read configuration " + path.string());
    std::ostringstream text;
    text << in.rdbuf();
    try {
        return parse_train_config(text.str(), overrides);
    } catch (const InvalidArgument& e) {
        throw InvalidArgument(path.string() + ": " + e.what());
    }
}

std::string format_train_config(const TrainConfig& config) {
    std::ostringstream os;
    std::string section;
    for (const auto& k : schema()) {
        if (k.section != section) {
            if (!section.empty()) os << '\n';
            section = k.section;
            os << '[' << section << "]\n";
        }
        os << k.key << " = " << k.get(config) << '\n';
    }
    return os.str();
}

std::string train_config_schema() {
    std::ostringstream os;
    std::string section;
    for (const auto& k : schema()) {
        if (k.section != section) {
            section = k.section;
            os << '[' << section << "]\n";
        }
        os << "  " << k.key << std::string(k.key.size() < 24 ? 24 - k.key.size() : 1, ' ') << k.help << '\n';
    }
    return os.str();
}

}  // namespace nmeasure
