#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "outbreak/graph.hpp"
#include "outbreak/rng.hpp"

namespace outbreak {

class EpidemicError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SirParams {
    double beta = 0.3;   // per infectious neighbour, per step
    double gamma = 0.3;  // recovery per step

    void validate() const;
};

enum class Compartment : std::uint8_t { Susceptible, Infectious, Removed };

struct SirState {
    std::vector<Compartment> compartments;
    std::size_t t = 0;

    /// Everyone susceptible except `seed`.
    static SirState seeded(std::size_t node_count, NodeId seed);
};

struct CompartmentCounts {
    std::size_t t = 0;
    std::size_t susceptible = 0;
    std::size_t infectious = 0;
    std::size_t removed = 0;

    friend bool operator==(const CompartmentCounts&, const CompartmentCounts&) = default;
};

CompartmentCounts count_compartments(const SirState& state);

struct OutbreakResult {
    std::size_t casualties = 0;
    std::size_t duration = 0;
    NodeId seed_node = 0;
};

/// Probability that a susceptible node with `infectious_neighbors`
/// infectious neighbours becomes infectious in one step.
double infection_probability(double beta, std::size_t infectious_neighbors) noexcept;

/// One synchronous step: every transition is decided from `state` alone.
///
/// Random draws are consumed in ascending node id. A susceptible node with
/// at least one infectious neighbour takes one uniform draw compared
/// against infection_probability(); an infectious node takes one draw
/// compared against gamma. No other node draws.
SirState sir_step(const Graph& g, const SirState& state, const SirParams& params, Engine& engine);

/// Steps from the seeded state until nobody is infectious. Consumes random
/// numbers exactly as repeated sir_step() calls would. When `trace` is
/// given it receives the counts at t = 0 and after every step.
///
/// Throws EpidemicError("non-terminating configuration") when gamma is 0,
/// and when the step cap of 10 * n * ceil(1 / gamma) is exceeded.
OutbreakResult run_outbreak(const Graph& g, NodeId seed, const SirParams& params, Engine& engine,
                            std::vector<CompartmentCounts>* trace = nullptr);

/// Casualty counts of `runs` outbreaks on `g`, each seeded at a uniformly
/// drawn node. Run i draws only from stream.substream(i).
std::vector<std::size_t> sample_casualties(const Graph& g, const SirParams& params,
                                           std::size_t runs, const RngStream& stream,
                                           std::size_t threads = 1);

/// Mean casualties over `runs` outbreaks after immunizing `protect`.
double estimate_fitness(const Graph& g, const NodeSet& protect, const SirParams& params,
                        std::size_t runs, const RngStream& stream, std::size_t threads = 1);

}  // namespace outbreak
