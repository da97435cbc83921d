#include "outbreak/optimizer.hpp"

#include <algorithm>
#include <atomic>
#include <iostream>
#include <limits>
#include <numeric>
#include <string>

#include "outbreak/parallel.hpp"

namespace outbreak {

Chromosome::Chromosome(std::vector<NodeId> genes) : genes_(std::move(genes)) {
    std::sort(genes_.begin(), genes_.end());
    if (std::adjacent_find(genes_.begin(), genes_.end()) != genes_.end()) {
        throw OptimizerError("chromosome contains duplicate genes");
    }
}

double GaConfig::effective_mutation_rate() const noexcept {
    if (mutation_rate) {
        return *mutation_rate;
    }
    return k == 0 ? 0.0 : 1.0 / static_cast<double>(k);
}

void GaConfig::validate(std::size_t pool_size) const {
    if (population_size < 3) {
        throw OptimizerError("population size must be at least 3");
    }
    if (elite_count >= population_size) {
        throw OptimizerError("elite count must be smaller than the population size");
    }
    if (tournament_size < 1) {
        throw OptimizerError("tournament size must be at least 1");
    }
    if (generations < 1) {
        throw OptimizerError("at least one generation is required");
    }
    if (m < 1) {
        throw OptimizerError("fitness needs at least one simulation run");
    }
    const double rate = effective_mutation_rate();
    if (!(rate >= 0.0 && rate <= 1.0)) {
        throw OptimizerError("mutation rate must lie in [0, 1]");
    }
    if (k > l) {
        throw OptimizerError("k = " + std::to_string(k) + " exceeds the truncation depth l = " +
                             std::to_string(l));
    }
    if (k > pool_size) {
        throw OptimizerError("k = " + std::to_string(k) + " exceeds the pool size " +
                             std::to_string(pool_size));
    }
}

namespace {

Chromosome random_subset(std::span<const NodeId> pool, std::size_t k, Engine& engine) {
    std::vector<NodeId> scratch(pool.begin(), pool.end());
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t j = i + uniform_index(engine, scratch.size() - i);
        std::swap(scratch[i], scratch[j]);
    }
    scratch.resize(k);
    return Chromosome(std::move(scratch));
}

}  // namespace

std::vector<Chromosome> seed_population(const ReducedPool& pool, const RankingSet& rankings,
                                        const GaConfig& config, Engine& engine) {
    if (config.k > pool.members.size()) {
        throw OptimizerError("k = " + std::to_string(config.k) + " exceeds the pool size " +
                             std::to_string(pool.members.size()));
    }
    if (config.population_size < 3) {
        throw OptimizerError("population size must be at least 3");
    }
    std::vector<Chromosome> population;
    population.reserve(config.population_size);
    for (const auto& ranking : rankings) {
        if (config.k > ranking.order.size()) {
            throw OptimizerError("ranking shorter than k");
        }
        population.emplace_back(std::vector<NodeId>(
            ranking.order.begin(), ranking.order.begin() + static_cast<std::ptrdiff_t>(config.k)));
    }
    while (population.size() < config.population_size) {
        population.push_back(random_subset(pool.members, config.k, engine));
    }
    return population;
}

std::size_t tournament_select(std::span<const EvaluatedIndividual> population, std::size_t size,
                              Engine& engine) {
    std::size_t best = uniform_index(engine, population.size());
    for (std::size_t i = 1; i < size; ++i) {
        const std::size_t candidate = uniform_index(engine, population.size());
        const double fc = population[candidate].fitness;
        const double fb = population[best].fitness;
        if (fc < fb || (fc == fb && candidate < best)) {
            best = candidate;
        }
    }
    return best;
}

std::pair<Chromosome, Chromosome> crossover(const Chromosome& first, const Chromosome& second) {
    if (first.size() != second.size()) {
        throw OptimizerError("crossover parents differ in length");
    }
    std::vector<NodeId> merged;
    merged.reserve(first.size() * 2);
    std::merge(first.genes().begin(), first.genes().end(), second.genes().begin(),
               second.genes().end(), std::back_inserter(merged));

    std::vector<NodeId> odd;
    std::vector<NodeId> even;
    odd.reserve(first.size());
    even.reserve(first.size());
    for (std::size_t i = 0; i < merged.size(); ++i) {
        (i % 2 == 0 ? odd : even).push_back(merged[i]);
    }
    return {Chromosome(std::move(odd)), Chromosome(std::move(even))};
}

Chromosome mutate(const Chromosome& chromosome, const ReducedPool& pool, double rate,
                  Engine& engine, std::size_t* mutated) {
    if (mutated != nullptr) {
        *mutated = 0;
    }
    if (rate <= 0.0) {
        return chromosome;
    }
    const std::size_t k = chromosome.size();
    if (k >= pool.members.size()) {
        static std::atomic<bool> warned{false};
        if (!warned.exchange(true)) {
            std::clog << "warning: mutation skipped, the chromosome already holds the whole pool\n";
        }
        return chromosome;
    }

    std::vector<NodeId> genes(chromosome.genes().begin(), chromosome.genes().end());
    std::vector<NodeId> current = genes;  // sorted view of the live gene set
    std::vector<NodeId> available;
    std::size_t count = 0;
    for (auto& gene : genes) {
        if (uniform01(engine) >= rate) {
            continue;
        }
        available.clear();
        std::set_difference(pool.members.begin(), pool.members.end(), current.begin(),
                            current.end(), std::back_inserter(available));
        const NodeId replacement = available[uniform_index(engine, available.size())];
        current.erase(std::lower_bound(current.begin(), current.end(), gene));
        current.insert(std::lower_bound(current.begin(), current.end(), replacement), replacement);
        gene = replacement;
        ++count;
    }
    if (mutated != nullptr) {
        *mutated = count;
    }
    return Chromosome(std::move(genes));
}

namespace {

bool fitter(const EvaluatedIndividual& a, std::size_t ia, const EvaluatedIndividual& b,
            std::size_t ib) {
    return a.fitness < b.fitness || (a.fitness == b.fitness && ia < ib);
}

}  // namespace

GaResult evolve(const Graph& g, const ReducedPool& pool, const RankingSet& rankings,
                const SirParams& params, const GaConfig& config, std::size_t threads,
                const GenerationObserver& observer) {
    params.validate();
    config.validate(pool.members.size());
    const RngStream root(config.master_seed);
    const double rate = config.effective_mutation_rate();

    std::vector<EvaluatedIndividual> population;
    std::vector<bool> evaluated;
    {
        Engine engine = root.substream(stream_tag::initialization).engine();
        for (auto& chromosome : seed_population(pool, rankings, config, engine)) {
            population.push_back({std::move(chromosome), 0.0, 0});
        }
        evaluated.assign(population.size(), false);
    }

    GaResult result;
    result.best.fitness = std::numeric_limits<double>::infinity();
    result.history.records.reserve(config.generations);

    for (std::size_t generation = 0; generation < config.generations; ++generation) {
        if (config.reevaluate_elites) {
            std::fill(evaluated.begin(), evaluated.end(), false);
        }
        parallel_for(population.size(), threads, [&](std::size_t i) {
            if (evaluated[i]) {
                return;
            }
            auto& individual = population[i];
            individual.fitness =
                estimate_fitness(g, individual.chromosome.to_node_set(), params, config.m,
                                 root.substream(stream_tag::evaluation, generation, i));
            individual.eval_generation = generation;
        });
        std::fill(evaluated.begin(), evaluated.end(), true);

        std::vector<std::size_t> ranked(population.size());
        std::iota(ranked.begin(), ranked.end(), std::size_t{0});
        std::sort(ranked.begin(), ranked.end(), [&](std::size_t a, std::size_t b) {
            return fitter(population[a], a, population[b], b);
        });

        const auto& generation_best = population[ranked.front()];
        if (generation_best.fitness < result.best.fitness) {
            result.best = generation_best;
        }
        double total = 0.0;
        for (const auto& individual : population) {
            total += individual.fitness;
        }
        result.history.records.push_back({generation, result.best.fitness,
                                          total / static_cast<double>(population.size()),
                                          result.best.chromosome});
        if (observer) {
            observer(generation, population);
        }
        if (generation + 1 == config.generations) {
            break;
        }

        Engine engine = root.substream(stream_tag::breeding, generation).engine();
        std::vector<EvaluatedIndividual> next;
        next.reserve(config.population_size);
        for (std::size_t e = 0; e < config.elite_count; ++e) {
            next.push_back(population[ranked[e]]);
        }
        std::vector<bool> next_evaluated(config.elite_count, true);
        while (next.size() < config.population_size) {
            const auto& mother = population[tournament_select(population, config.tournament_size, engine)];
            const auto& father = population[tournament_select(population, config.tournament_size, engine)];
            auto [first, second] = crossover(mother.chromosome, father.chromosome);
            first = mutate(first, pool, rate, engine);
            second = mutate(second, pool, rate, engine);
            next.push_back({std::move(first), 0.0, generation + 1});
            next_evaluated.push_back(false);
            if (next.size() < config.population_size) {
                next.push_back({std::move(second), 0.0, generation + 1});
                next_evaluated.push_back(false);
            }
        }
        population = std::move(next);
        evaluated = std::move(next_evaluated);
    }
    return result;
}

}  // namespace outbreak
