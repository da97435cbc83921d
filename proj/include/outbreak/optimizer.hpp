#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "outbreak/centrality.hpp"
#include "outbreak/epidemic.hpp"
#include "outbreak/graph.hpp"
#include "outbreak/rng.hpp"

namespace outbreak {

class OptimizerError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A candidate immunization set: distinct node ids kept in ascending order.
class Chromosome {
public:
    Chromosome() = default;
    /// Sorts `genes`; throws OptimizerError on duplicates.
    explicit Chromosome(std::vector<NodeId> genes);

    [[nodiscard]] std::span<const NodeId> genes() const noexcept { return genes_; }
    [[nodiscard]] std::size_t size() const noexcept { return genes_.size(); }
    [[nodiscard]] NodeSet to_node_set() const { return NodeSet(genes_); }

    friend bool operator==(const Chromosome&, const Chromosome&) = default;
    friend auto operator<=>(const Chromosome&, const Chromosome&) = default;

private:
    std::vector<NodeId> genes_;
};

struct EvaluatedIndividual {
    Chromosome chromosome;
    double fitness = 0.0;
    std::size_t eval_generation = 0;
};

struct GaConfig {
    std::size_t population_size = 100;
    std::size_t generations = 100;
    std::size_t tournament_size = 4;
    std::size_t elite_count = 10;
    /// Per-gene mutation probability; 1/k when unset.
    std::optional<double> mutation_rate;
    std::size_t k = 10;
    std::size_t l = 100;
    std::size_t m = 100;
    std::uint64_t master_seed = 0;
    /// Re-estimate elite fitness every generation instead of carrying it.
    bool reevaluate_elites = false;

    [[nodiscard]] double effective_mutation_rate() const noexcept;
    /// Checks the configuration against a pool of `pool_size` candidates.
    void validate(std::size_t pool_size) const;
};

struct GenerationRecord {
    std::size_t generation = 0;
    double best_fitness = 0.0;  // best seen up to and including this generation
    double mean_fitness = 0.0;  // over this generation's population
    Chromosome best_chromosome;
};

struct GaHistory {
    std::vector<GenerationRecord> records;
};

struct GaResult {
    EvaluatedIndividual best;
    GaHistory history;
};

/// Individuals 0, 1, 2 are the top-k prefixes of the degree, betweenness
/// and eigenvector rankings; the rest are uniform k-subsets of the pool.
std::vector<Chromosome> seed_population(const ReducedPool& pool, const RankingSet& rankings,
                                        const GaConfig& config, Engine& engine);

/// Index of the fittest (lowest) of `size` uniform draws with replacement.
/// Ties go to the lower population index.
std::size_t tournament_select(std::span<const EvaluatedIndividual> population, std::size_t size,
                              Engine& engine);

/// Concatenate-and-sort crossover: the first child takes the odd entries
/// (1-based) of the merged parent genes, the second the even ones.
std::pair<Chromosome, Chromosome> crossover(const Chromosome& first, const Chromosome& second);

/// Each gene, in ascending order, is replaced with probability `rate` by a
/// uniform pick from the pool members not currently in the chromosome.
/// `mutated`, when given, receives the number of replacements made.
Chromosome mutate(const Chromosome& chromosome, const ReducedPool& pool, double rate,
                  Engine& engine, std::size_t* mutated = nullptr);

/// Observer invoked after each generation has been evaluated.
using GenerationObserver =
    std::function<void(std::size_t generation, std::span<const EvaluatedIndividual> population)>;

/// Runs the genetic algorithm and returns the best individual ever seen.
///
/// The fitness of individual i of generation g is estimated from the
/// stream (master_seed, evaluation, g, i); breeding for generation g uses
/// (master_seed, breeding, g). Results are identical for any `threads`.
GaResult evolve(const Graph& g, const ReducedPool& pool, const RankingSet& rankings,
                const SirParams& params, const GaConfig& config, std::size_t threads = 1,
                const GenerationObserver& observer = {});

}  // namespace outbreak
