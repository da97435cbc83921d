#include "doctest.h"

#include <cmath>

#include "fixtures.hpp"
#include "outbreak/epidemic.hpp"

using namespace outbreak;
using namespace outbreak::testing;

namespace {

SirState state_with(std::size_t n, std::initializer_list<NodeId> infectious) {
    SirState state;
    state.compartments.assign(n, Compartment::Susceptible);
    for (NodeId v : infectious) {
        state.compartments[v] = Compartment::Infectious;
    }
    return state;
}

}  // namespace

TEST_CASE("SirParams validation") {
    CHECK_NOTHROW((SirParams{0.0, 1.0}.validate()));
    CHECK_THROWS_AS((SirParams{-0.1, 0.5}.validate()), EpidemicError);
    CHECK_THROWS_AS((SirParams{0.5, 1.5}.validate()), EpidemicError);
}

TEST_CASE("sir_step edge cases") {
    Engine engine = RngStream(1).engine();
    const Graph star = star_graph(4);
    SUBCASE("beta = 0 never infects") {
        for (int i = 0; i < 1000; ++i) {
            const auto next = sir_step(star, state_with(5, {0}), {0.0, 0.5}, engine);
            for (NodeId v = 1; v < 5; ++v) {
                REQUIRE(next.compartments[v] == Compartment::Susceptible);
            }
        }
    }
    SUBCASE("beta = 1 always infects exposed nodes") {
        for (int i = 0; i < 1000; ++i) {
            const auto next = sir_step(star, state_with(5, {0}), {1.0, 0.5}, engine);
            for (NodeId v = 1; v < 5; ++v) {
                REQUIRE(next.compartments[v] == Compartment::Infectious);
            }
        }
    }
    SUBCASE("updates are synchronous") {
        // Path 0-1-2 with 0 infectious: 2 must not be infected in the same step.
        const auto next = sir_step(path_graph(3), state_with(3, {0}), {1.0, 0.0}, engine);
        CHECK(next.compartments[1] == Compartment::Infectious);
        CHECK(next.compartments[2] == Compartment::Susceptible);
        CHECK(next.t == 1);
    }
    SUBCASE("removed stays removed") {
        auto state = state_with(3, {1});
        state.compartments[0] = Compartment::Removed;
        const auto next = sir_step(path_graph(3), state, {1.0, 1.0}, engine);
        CHECK(next.compartments[0] == Compartment::Removed);
        CHECK(next.compartments[1] == Compartment::Removed);
        CHECK(next.compartments[2] == Compartment::Infectious);
    }
}

TEST_CASE("infection probability with two infectious neighbours is 0.51") {
    CHECK(infection_probability(0.3, 2) == doctest::Approx(0.51));
    CHECK(infection_probability(0.3, 0) == 0.0);
    CHECK(infection_probability(1.0, 3) == 1.0);

    // S node 0 adjacent to infectious 1 and 2.
    const Graph g = make_graph(3, {{0, 1}, {0, 2}});
    constexpr int trials = 100000;
    int infected = 0;
    const RngStream root(99);
    for (int i = 0; i < trials; ++i) {
        Engine engine = root.substream(i).engine();
        infected += sir_step(g, state_with(3, {1, 2}), {0.3, 0.3}, engine).compartments[0] ==
                    Compartment::Infectious;
    }
    const double sigma = std::sqrt(trials * 0.51 * 0.49);
    CHECK(std::abs(infected - trials * 0.51) <= 3 * sigma);
}

TEST_CASE("run_outbreak deterministic cases") {
    Engine engine = RngStream(2).engine();
    SUBCASE("beta = 0, gamma = 1") {
        const auto r = run_outbreak(complete_graph(6), 3, {0.0, 1.0}, engine);
        CHECK(r.casualties == 1);
        CHECK(r.duration == 1);
        CHECK(r.seed_node == 3);
    }
    SUBCASE("cascade along P3") {
        std::vector<CompartmentCounts> trace;
        const auto r = run_outbreak(path_graph(3), 0, {1.0, 1.0}, engine, &trace);
        CHECK(r.casualties == 3);
        CHECK(r.duration == 3);
        REQUIRE(trace.size() == 4);
        CHECK(trace[0] == CompartmentCounts{0, 2, 1, 0});
        CHECK(trace[1] == CompartmentCounts{1, 1, 1, 1});
        CHECK(trace[2] == CompartmentCounts{2, 0, 1, 2});
        CHECK(trace[3] == CompartmentCounts{3, 0, 0, 3});
    }
    SUBCASE("beta = gamma = 1 kills the seed's component") {
        const RngStream root(3);
        for (int trial = 0; trial < 50; ++trial) {
            Engine e = root.substream(trial).engine();
            const Graph g = random_graph(30, 0.06, e);
            const auto sizes = union_find_component_sizes(g);
            for (NodeId seed = 0; seed < 30; ++seed) {
                CHECK(run_outbreak(g, seed, {1.0, 1.0}, e).casualties == sizes[seed]);
            }
        }
    }
    SUBCASE("gamma = 0 is rejected") {
        CHECK_THROWS_WITH_AS(run_outbreak(path_graph(3), 0, {0.5, 0.0}, engine),
                             doctest::Contains("non-terminating configuration"), EpidemicError);
    }
    SUBCASE("seed out of range") {
        CHECK_THROWS_AS(run_outbreak(path_graph(3), 3, {0.5, 0.5}, engine), EpidemicError);
    }
}

TEST_CASE("run_outbreak consumes randomness exactly like repeated sir_step") {
    const RngStream root(5);
    for (int trial = 0; trial < 40; ++trial) {
        Engine build = root.substream(trial, 0).engine();
        const Graph g = random_graph(25, 0.15, build);
        const NodeId seed = static_cast<NodeId>(uniform_index(build, 25));
        const SirParams params{0.3 + 0.01 * trial, 0.3};

        Engine fast_engine = root.substream(trial, 1).engine();
        std::vector<CompartmentCounts> trace;
        const auto fast = run_outbreak(g, seed, params, fast_engine, &trace);

        Engine slow_engine = root.substream(trial, 1).engine();
        SirState state = SirState::seeded(25, seed);
        std::vector<CompartmentCounts> slow_trace{count_compartments(state)};
        while (count_compartments(state).infectious > 0) {
            const SirState next = sir_step(g, state, params, slow_engine);
            for (std::size_t v = 0; v < 25; ++v) {
                const auto before = state.compartments[v];
                const auto after = next.compartments[v];
                // S -> I -> R only.
                const bool allowed = before == after ||
                                     (before == Compartment::Susceptible && after == Compartment::Infectious) ||
                                     (before == Compartment::Infectious && after == Compartment::Removed);
                REQUIRE(allowed);
            }
            state = next;
            slow_trace.push_back(count_compartments(state));
        }
        CHECK(trace == slow_trace);
        CHECK(fast.duration == state.t);
        CHECK(fast.casualties == count_compartments(state).removed);
        CHECK(fast_engine() == slow_engine());
        for (const auto& row : trace) {
            CHECK(row.susceptible + row.infectious + row.removed == 25);
        }
    }
}

TEST_CASE("star seeded at the centre infects c * beta leaves on average") {
    constexpr std::size_t leaves = 8;
    constexpr double beta = 0.3;
    constexpr int trials = 100000;
    const Graph g = star_graph(leaves);
    const RngStream root(7);
    double total = 0.0;
    double total_sq = 0.0;
    for (int i = 0; i < trials; ++i) {
        Engine engine = root.substream(i).engine();
        const double infected = static_cast<double>(run_outbreak(g, 0, {beta, 1.0}, engine).casualties - 1);
        total += infected;
        total_sq += infected * infected;
    }
    const double mean = total / trials;
    const double expected = leaves * beta;
    const double sigma = std::sqrt(leaves * beta * (1 - beta) / trials);
    CHECK(std::abs(mean - expected) <= 3 * sigma);
}

TEST_CASE("estimate_fitness") {
    const RngStream stream(11);
    SUBCASE("edgeless residual") {
        CHECK(estimate_fitness(edgeless_graph(6), NodeSet{}, {0.3, 0.3}, 50, stream) == 1.0);
    }
    SUBCASE("K2 with certain spread") {
        CHECK(estimate_fitness(complete_graph(2), NodeSet{}, {1.0, 1.0}, 50, stream) == 2.0);
    }
    SUBCASE("protected nodes are never casualties") {
        CHECK(estimate_fitness(star_graph(5), NodeSet({0}), {1.0, 1.0}, 100, stream) == 1.0);
    }
    SUBCASE("all nodes protected") {
        CHECK_THROWS_WITH_AS(estimate_fitness(path_graph(2), NodeSet({0, 1}), {0.3, 0.3}, 5, stream),
                             doctest::Contains("empty residual graph"), EpidemicError);
    }
    SUBCASE("converges to the component-size expectation") {
        Engine engine = RngStream(12).engine();
        for (int trial = 0; trial < 5; ++trial) {
            const Graph g = random_graph(40, 0.04, engine);
            const NodeSet protect({0, 5, 9});
            const auto residual = remove_nodes(g, protect).graph;
            const double exact = expected_component_size(residual);
            const auto sizes = union_find_component_sizes(residual);
            double var = 0.0;
            for (auto s : sizes) {
                var += (static_cast<double>(s) - exact) * (static_cast<double>(s) - exact);
            }
            var /= static_cast<double>(sizes.size());
            constexpr std::size_t m = 20000;
            const double estimate = estimate_fitness(g, protect, {1.0, 1.0}, m, stream.substream(trial));
            CHECK(std::abs(estimate - exact) <= 3 * std::sqrt(var / m) + 1e-12);
        }
    }
    SUBCASE("reproducible and thread-independent") {
        Engine engine = RngStream(13).engine();
        const Graph g = random_graph(60, 0.08, engine);
        const double a = estimate_fitness(g, NodeSet({1, 2}), {0.3, 0.3}, 300, stream, 1);
        CHECK(estimate_fitness(g, NodeSet({1, 2}), {0.3, 0.3}, 300, stream, 1) == a);
        CHECK(estimate_fitness(g, NodeSet({1, 2}), {0.3, 0.3}, 300, stream, 7) == a);
    }
}

TEST_CASE("protecting a cut vertex lowers casualties") {
    // Two triangles joined through node 3: 0-1-2 triangle, 2-3, 3-4, 4-5-6 triangle.
    const Graph g = make_graph(7, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 6}});
    const RngStream stream(19);
    const double unprotected = estimate_fitness(g, NodeSet{}, {1.0, 1.0}, 200, stream);
    const double cut = estimate_fitness(g, NodeSet({3}), {1.0, 1.0}, 200, stream);
    CHECK(unprotected == 7.0);
    CHECK(cut == 3.0);
    CHECK(cut <= unprotected);
}
