#include "outbreak/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "outbreak/centrality.hpp"
#include "outbreak/epidemic.hpp"
#include "outbreak/graph.hpp"
#include "outbreak/optimizer.hpp"
#include "outbreak/parallel.hpp"
#include "outbreak/report_io.hpp"
#include "outbreak/strategies.hpp"

namespace outbreak::cli {

namespace {

struct RunConfig {
    std::string command;
    std::string input_path;
    double beta = 0.3;
    double gamma = 0.3;
    std::size_t k = 10;
    std::size_t l = 100;
    std::size_t m = 100;
    std::size_t runs = 500;
    std::size_t population_size = 100;
    std::size_t generations = 100;
    std::size_t tournament_size = 4;
    std::size_t elite_count = 10;
    std::optional<double> mutation_rate;
    bool reevaluate_elites = false;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> threads;
    std::string output_path;
    std::string output_format = "json";
    std::string strategy = "none";
    std::string trace_path;
    std::string history_path;
    std::string overlay_path;
};

class CommandError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Collects output files and publishes them only once all are rendered.
class OutputSet {
public:
    OutputSet(std::ostream& fallback) : fallback_(fallback) {}

    void add(const std::string& path, std::string content) {
        files_.emplace_back(path, std::move(content));
    }

    /// Primary output: to `path`, or to the fallback stream when empty.
    void add_primary(const std::string& path, std::string content) {
        if (path.empty()) {
            stdout_content_ = std::move(content);
        } else {
            add(path, std::move(content));
        }
    }

    void commit() {
        namespace fs = std::filesystem;
        std::vector<std::pair<fs::path, fs::path>> staged;
        try {
            for (const auto& [path, content] : files_) {
                fs::path target(path);
                fs::path temp = target;
                temp += ".tmp";
                std::ofstream file(temp, std::ios::binary | std::ios::trunc);
                if (!file) {
                    throw CommandError("cannot write '" + path + "'");
                }
                staged.emplace_back(temp, target);
                file << content;
                file.close();
                if (!file) {
                    throw CommandError("failed writing '" + path + "'");
                }
            }
        } catch (...) {
            for (const auto& [temp, target] : staged) {
                std::error_code ignored;
                fs::remove(temp, ignored);
            }
            throw;
        }
        for (const auto& [temp, target] : staged) {
            fs::rename(temp, target);
        }
        fallback_ << stdout_content_;
    }

private:
    std::ostream& fallback_;
    std::vector<std::pair<std::string, std::string>> files_;
    std::string stdout_content_;
};

std::size_t resolve_threads(const RunConfig& cfg) {
    if (cfg.threads) {
        return std::max<std::size_t>(*cfg.threads, 1);
    }
    if (const char* env = std::getenv("OUTBREAK_OPT_THREADS")) {
        try {
            const auto value = std::stoul(env);
            if (value > 0) {
                return value;
            }
        } catch (const std::exception&) {
        }
        throw CommandError(std::string("OUTBREAK_OPT_THREADS is not a positive integer: '") + env + "'");
    }
    return default_thread_count();
}

std::uint64_t resolve_seed(const RunConfig& cfg, std::ostream& err) {
    if (cfg.seed) {
        return *cfg.seed;
    }
    std::random_device device;
    const std::uint64_t seed = (static_cast<std::uint64_t>(device()) << 32) | device();
    err << "seed: " << seed << '\n';
    return seed;
}

Graph load_graph(const RunConfig& cfg, std::ostream& err) {
    if (cfg.input_path.empty()) {
        throw CommandError("--input is required");
    }
    if (!std::filesystem::exists(cfg.input_path)) {
        throw CommandError("input file not found: '" + cfg.input_path + "'");
    }
    auto load = load_edge_list_file(cfg.input_path);
    err << "loaded " << cfg.input_path << ": " << load.graph.node_count() << " nodes, "
        << load.graph.edge_count() << " edges, " << load.duplicates_collapsed
        << " duplicate edges collapsed\n";
    return std::move(load.graph);
}

SirParams sir_params(const RunConfig& cfg) {
    SirParams params{cfg.beta, cfg.gamma};
    params.validate();
    return params;
}

GaConfig ga_config(const RunConfig& cfg, std::uint64_t seed) {
    GaConfig ga;
    ga.population_size = cfg.population_size;
    ga.generations = cfg.generations;
    ga.tournament_size = cfg.tournament_size;
    ga.elite_count = cfg.elite_count;
    ga.mutation_rate = cfg.mutation_rate;
    ga.reevaluate_elites = cfg.reevaluate_elites;
    ga.k = cfg.k;
    ga.l = cfg.l;
    ga.m = cfg.m;
    ga.master_seed = seed;
    return ga;
}

nlohmann::json params_json(const RunConfig& cfg, std::uint64_t seed) {
    return {{"input", cfg.input_path}, {"beta", round12(cfg.beta)}, {"gamma", round12(cfg.gamma)},
            {"k", cfg.k},              {"l", cfg.l},                {"m", cfg.m},
            {"runs", cfg.runs},        {"population", cfg.population_size},
            {"generations", cfg.generations}, {"tournament", cfg.tournament_size},
            {"elites", cfg.elite_count},
            {"mutation_rate", round12(cfg.mutation_rate.value_or(cfg.k == 0 ? 0.0 : 1.0 / static_cast<double>(cfg.k)))},
            {"reevaluate_elites", cfg.reevaluate_elites},
            {"seed", seed}};
}

void require_format(const RunConfig& cfg) {
    if (cfg.output_format != "json" && cfg.output_format != "csv") {
        throw CommandError("--format must be json or csv");
    }
}

int cmd_centrality(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const Graph g = load_graph(cfg, err);
    const auto rankings = compute_rankings(g, resolve_threads(cfg));

    const std::pair<std::size_t, std::size_t> pairs[] = {{0, 1}, {0, 2}, {1, 2}};
    std::vector<std::pair<std::string, std::optional<double>>> r2;
    for (const auto& [a, b] : pairs) {
        std::string name = std::string(to_string(rankings[a].kind)) + "_" +
                           std::string(to_string(rankings[b].kind));
        std::optional<double> value;
        try {
            value = correlation_r2(rankings[a].scores, rankings[b].scores);
        } catch (const CentralityError&) {
        }
        r2.emplace_back(std::move(name), value);
    }

    OutputSet outputs(out);
    std::ostringstream body;
    if (cfg.output_format == "csv") {
        write_centrality_csv(body, g, rankings);
        for (const auto& [name, value] : r2) {
            err << "r2 " << name << ": " << (value ? format_real(*value) : "undefined") << '\n';
        }
    } else {
        nlohmann::json nodes = nlohmann::json::array();
        for (NodeId v = 0; v < g.node_count(); ++v) {
            nodes.push_back({{"node_label", g.label(v)},
                             {"degree", round12(rankings[0].scores[v])},
                             {"betweenness", round12(rankings[1].scores[v])},
                             {"eigenvector", round12(rankings[2].scores[v])}});
        }
        nlohmann::json r2_json = nlohmann::json::object();
        for (const auto& [name, value] : r2) {
            r2_json[name] = value ? nlohmann::json(round12(*value)) : nlohmann::json(nullptr);
        }
        body << nlohmann::json{{"nodes", nodes}, {"r2", r2_json}}.dump(2) << '\n';
    }
    outputs.add_primary(cfg.output_path, body.str());
    outputs.commit();
    return 0;
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const Graph g = load_graph(cfg, err);
    const SirParams params = sir_params(cfg);
    const std::uint64_t seed = resolve_seed(cfg, err);
    const std::size_t threads = resolve_threads(cfg);

    Strategy strategy = Strategy::NoProtection;
    NodeSet protect;
    if (cfg.strategy != "none") {
        std::size_t index = 0;
        if (cfg.strategy == "degree") {
            strategy = Strategy::DegreeTopK;
            index = 0;
        } else if (cfg.strategy == "betweenness") {
            strategy = Strategy::BetweennessTopK;
            index = 1;
        } else if (cfg.strategy == "eigenvector") {
            strategy = Strategy::EigenvectorTopK;
            index = 2;
        } else {
            throw CommandError("unknown strategy '" + cfg.strategy + "'");
        }
        protect = top_k_nodes(compute_rankings(g, threads)[index], cfg.k);
    }

    const RngStream root(seed);
    auto report = evaluate_protection(g, protect, params, cfg.runs, root, threads);
    report.strategy = strategy;

    OutputSet outputs(out);
    std::ostringstream body;
    if (cfg.output_format == "csv") {
        write_casualties_csv(body, report);
    } else {
        nlohmann::json doc = to_json(g, report);
        doc["parameters"] = params_json(cfg, seed);
        body << doc.dump(2) << '\n';
    }
    outputs.add_primary(cfg.output_path, body.str());

    if (!cfg.trace_path.empty()) {
        // Replays run 0 with its own stream so the trace matches casualties[0].
        const Subgraph residual = remove_nodes(g, protect);
        Engine engine = root.substream(0).engine();
        const auto start = static_cast<NodeId>(uniform_index(engine, residual.graph.node_count()));
        std::vector<CompartmentCounts> trace;
        run_outbreak(residual.graph, start, params, engine, &trace);
        std::ostringstream csv;
        write_trace_csv(csv, trace);
        outputs.add(cfg.trace_path, csv.str());
    }
    outputs.commit();
    return 0;
}

int cmd_optimize(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const Graph g = load_graph(cfg, err);
    const SirParams params = sir_params(cfg);
    const std::uint64_t seed = resolve_seed(cfg, err);
    const std::size_t threads = resolve_threads(cfg);

    const auto rankings = compute_rankings(g, threads);
    const auto pool = reduced_pool(rankings, cfg.l);
    const auto result = evolve(g, pool, rankings, params, ga_config(cfg, seed), threads);
    err << "best fitness " << format_real(result.best.fitness) << " over " << pool.members.size()
        << " candidate nodes\n";

    OutputSet outputs(out);
    std::ostringstream body;
    if (cfg.output_format == "csv") {
        write_history_csv(body, g, result.history);
    } else {
        const nlohmann::json doc{
            {"best",
             {{"protected_nodes", labels_of(g, result.best.chromosome.to_node_set())},
              {"fitness", round12(result.best.fitness)},
              {"eval_generation", result.best.eval_generation}}},
            {"pool_size", pool.members.size()},
            {"history", to_json(g, result.history)},
            {"parameters", params_json(cfg, seed)}};
        body << doc.dump(2) << '\n';
    }
    outputs.add_primary(cfg.output_path, body.str());
    if (!cfg.history_path.empty()) {
        std::ostringstream csv;
        write_history_csv(csv, g, result.history);
        outputs.add(cfg.history_path, csv.str());
    }
    outputs.commit();
    return 0;
}

int cmd_compare(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    const Graph g = load_graph(cfg, err);
    const std::uint64_t seed = resolve_seed(cfg, err);
    const std::size_t threads = resolve_threads(cfg);

    ComparisonSettings settings;
    settings.params = sir_params(cfg);
    settings.k = cfg.k;
    settings.l = cfg.l;
    settings.runs = cfg.runs;
    settings.master_seed = seed;
    settings.ga = ga_config(cfg, seed);
    const Comparison comparison = compare_strategies(g, settings, threads);

    for (const auto& report : comparison.reports) {
        err << to_string(report.strategy) << ": mean " << format_real(report.stats.mean)
            << ", median " << format_real(report.stats.median) << '\n';
    }

    OutputSet outputs(out);
    std::ostringstream body;
    if (cfg.output_format == "csv") {
        body << "strategy,run,casualties\n";
        for (const auto& report : comparison.reports) {
            for (std::size_t i = 0; i < report.casualties.size(); ++i) {
                body << to_string(report.strategy) << ',' << i << ',' << report.casualties[i] << '\n';
            }
        }
    } else {
        nlohmann::json doc = to_json(g, comparison);
        doc["parameters"] = params_json(cfg, seed);
        body << doc.dump(2) << '\n';
    }
    outputs.add_primary(cfg.output_path, body.str());
    if (!cfg.overlay_path.empty()) {
        std::ostringstream csv;
        write_overlay_csv(csv, comparison.overlay);
        outputs.add(cfg.overlay_path, csv.str());
    }
    if (!cfg.history_path.empty()) {
        std::ostringstream csv;
        write_history_csv(csv, g, comparison.ga.history);
        outputs.add(cfg.history_path, csv.str());
    }
    outputs.commit();
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Choose which network nodes to immunize against an SIR outbreak", "outbreak-opt"};
    app.set_config("--config", "", "Flat key=value file; flags given on the command line win");
    app.require_subcommand(1);

    app.add_option("--input", cfg.input_path, "Edge-list file");
    app.add_option("--beta", cfg.beta, "Infection probability per infectious neighbour")->capture_default_str();
    app.add_option("--gamma", cfg.gamma, "Recovery probability per step")->capture_default_str();
    app.add_option("--k", cfg.k, "Number of nodes to immunize")->capture_default_str();
    app.add_option("--l", cfg.l, "Ranking truncation depth")->capture_default_str();
    app.add_option("--m", cfg.m, "Simulations per fitness estimate")->capture_default_str();
    app.add_option("--runs", cfg.runs, "Evaluation simulations per strategy")->capture_default_str();
    app.add_option("--pop", cfg.population_size, "GA population size")->capture_default_str();
    app.add_option("--gens", cfg.generations, "GA generations")->capture_default_str();
    app.add_option("--tour", cfg.tournament_size, "Tournament size")->capture_default_str();
    app.add_option("--elites", cfg.elite_count, "Elites kept per generation")->capture_default_str();
    app.add_option("--mutation-rate", cfg.mutation_rate, "Per-gene mutation probability (default 1/k)");
    app.add_flag("--reevaluate-elites", cfg.reevaluate_elites, "Re-estimate elite fitness every generation");
    app.add_option("--seed", cfg.seed, "Master RNG seed (drawn and printed when omitted)");
    app.add_option("--threads", cfg.threads, "Worker threads (env OUTBREAK_OPT_THREADS)");
    app.add_option("--out", cfg.output_path, "Output file (stdout when omitted)");
    app.add_option("--format", cfg.output_format, "json or csv")->capture_default_str();
    app.add_option("--strategy", cfg.strategy, "simulate: none, degree, betweenness or eigenvector")
        ->capture_default_str();
    app.add_option("--trace", cfg.trace_path, "simulate: per-step compartment counts of run 0");
    app.add_option("--history", cfg.history_path, "optimize/compare: GA history CSV");
    app.add_option("--overlay", cfg.overlay_path, "compare: degree histogram with GA selections");

    app.add_subcommand("centrality", "Per-node centralities and their pairwise R^2")->fallthrough();
    app.add_subcommand("simulate", "Outbreak statistics for one protection strategy")->fallthrough();
    app.add_subcommand("optimize", "Run the genetic algorithm")->fallthrough();
    app.add_subcommand("compare", "Compare all strategies")->fallthrough();

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }
    cfg.command = app.get_subcommands().front()->get_name();

    try {
        require_format(cfg);
        if (cfg.command == "centrality") {
            return cmd_centrality(cfg, out, err);
        }
        if (cfg.command == "simulate") {
            return cmd_simulate(cfg, out, err);
        }
        if (cfg.command == "optimize") {
            return cmd_optimize(cfg, out, err);
        }
        return cmd_compare(cfg, out, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace outbreak::cli
