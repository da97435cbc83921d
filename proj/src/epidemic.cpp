#include "outbreak/epidemic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "outbreak/parallel.hpp"

namespace outbreak {

void SirParams::validate() const {
    if (!(beta >= 0.0 && beta <= 1.0)) {
        throw EpidemicError("beta must lie in [0, 1], got " + std::to_string(beta));
    }
    if (!(gamma >= 0.0 && gamma <= 1.0)) {
        throw EpidemicError("gamma must lie in [0, 1], got " + std::to_string(gamma));
    }
}

SirState SirState::seeded(std::size_t node_count, NodeId seed) {
    if (seed >= node_count) {
        throw EpidemicError("seed node " + std::to_string(seed) + " out of range");
    }
    SirState state;
    state.compartments.assign(node_count, Compartment::Susceptible);
    state.compartments[seed] = Compartment::Infectious;
    return state;
}

CompartmentCounts count_compartments(const SirState& state) {
    CompartmentCounts counts;
    counts.t = state.t;
    for (Compartment c : state.compartments) {
        switch (c) {
            case Compartment::Susceptible: ++counts.susceptible; break;
            case Compartment::Infectious: ++counts.infectious; break;
            case Compartment::Removed: ++counts.removed; break;
        }
    }
    return counts;
}

double infection_probability(double beta, std::size_t infectious_neighbors) noexcept {
    if (infectious_neighbors == 0) {
        return 0.0;
    }
    return 1.0 - std::pow(1.0 - beta, static_cast<double>(infectious_neighbors));
}

SirState sir_step(const Graph& g, const SirState& state, const SirParams& params, Engine& engine) {
    SirState next = state;
    next.t = state.t + 1;
    for (NodeId v = 0; v < g.node_count(); ++v) {
        switch (state.compartments[v]) {
            case Compartment::Susceptible: {
                std::size_t infectious = 0;
                for (NodeId w : g.neighbors(v)) {
                    infectious += state.compartments[w] == Compartment::Infectious ? 1 : 0;
                }
                if (infectious > 0 && uniform01(engine) < infection_probability(params.beta, infectious)) {
                    next.compartments[v] = Compartment::Infectious;
                }
                break;
            }
            case Compartment::Infectious:
                if (uniform01(engine) < params.gamma) {
                    next.compartments[v] = Compartment::Removed;
                }
                break;
            case Compartment::Removed:
                break;
        }
    }
    return next;
}

OutbreakResult run_outbreak(const Graph& g, NodeId seed, const SirParams& params, Engine& engine,
                            std::vector<CompartmentCounts>* trace) {
    const std::size_t n = g.node_count();
    SirState state = SirState::seeded(n, seed);
    if (params.gamma <= 0.0) {
        throw EpidemicError("non-terminating configuration: gamma = 0 and the seed never recovers");
    }
    const auto cap = static_cast<std::size_t>(10.0 * static_cast<double>(n) * std::ceil(1.0 / params.gamma));

    auto& comp = state.compartments;
    std::vector<std::uint32_t> pressure(n, 0);
    std::vector<NodeId> infectious{seed};
    std::vector<NodeId> exposed;
    std::vector<NodeId> next_infectious;
    std::vector<NodeId> newly_infected;
    std::size_t susceptible = n - 1;
    std::size_t removed = 0;

    if (trace != nullptr) {
        trace->clear();
        trace->push_back({0, susceptible, 1, 0});
    }

    while (!infectious.empty()) {
        if (state.t >= cap) {
            throw EpidemicError("non-terminating configuration: step cap " + std::to_string(cap) +
                                " exceeded");
        }
        exposed.clear();
        for (NodeId v : infectious) {
            for (NodeId w : g.neighbors(v)) {
                if (comp[w] == Compartment::Susceptible && pressure[w]++ == 0) {
                    exposed.push_back(w);
                }
            }
        }
        std::sort(exposed.begin(), exposed.end());

        // Merge the two ascending lists so draws follow node id order.
        next_infectious.clear();
        newly_infected.clear();
        std::size_t ei = 0;
        std::size_t ii = 0;
        while (ei < exposed.size() || ii < infectious.size()) {
            const bool take_exposed =
                ii == infectious.size() || (ei < exposed.size() && exposed[ei] < infectious[ii]);
            if (take_exposed) {
                const NodeId v = exposed[ei++];
                if (uniform01(engine) < infection_probability(params.beta, pressure[v])) {
                    newly_infected.push_back(v);
                }
                pressure[v] = 0;
            } else {
                const NodeId v = infectious[ii++];
                if (uniform01(engine) < params.gamma) {
                    comp[v] = Compartment::Removed;
                    ++removed;
                } else {
                    next_infectious.push_back(v);
                }
            }
        }
        for (NodeId v : newly_infected) {
            comp[v] = Compartment::Infectious;
        }
        susceptible -= newly_infected.size();
        const std::size_t middle = next_infectious.size();
        next_infectious.insert(next_infectious.end(), newly_infected.begin(), newly_infected.end());
        std::inplace_merge(next_infectious.begin(),
                           next_infectious.begin() + static_cast<std::ptrdiff_t>(middle),
                           next_infectious.end());
        infectious.swap(next_infectious);
        ++state.t;

        if (trace != nullptr) {
            trace->push_back({state.t, susceptible, infectious.size(), removed});
        }
    }
    return {removed, state.t, seed};
}

std::vector<std::size_t> sample_casualties(const Graph& g, const SirParams& params,
                                           std::size_t runs, const RngStream& stream,
                                           std::size_t threads) {
    params.validate();
    if (g.node_count() == 0) {
        throw EpidemicError("empty residual graph: every node is protected");
    }
    std::vector<std::size_t> casualties(runs);
    parallel_for(runs, threads, [&](std::size_t run) {
        Engine engine = stream.substream(run).engine();
        const auto seed = static_cast<NodeId>(uniform_index(engine, g.node_count()));
        casualties[run] = run_outbreak(g, seed, params, engine).casualties;
    });
    return casualties;
}

double estimate_fitness(const Graph& g, const NodeSet& protect, const SirParams& params,
                        std::size_t runs, const RngStream& stream, std::size_t threads) {
    if (runs == 0) {
        throw EpidemicError("fitness needs at least one run");
    }
    const Subgraph residual = remove_nodes(g, protect);
    const auto casualties = sample_casualties(residual.graph, params, runs, stream, threads);
    const auto total = std::accumulate(casualties.begin(), casualties.end(), std::size_t{0});
    return static_cast<double>(total) / static_cast<double>(runs);
}

}  // namespace outbreak
