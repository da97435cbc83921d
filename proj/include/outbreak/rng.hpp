#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

namespace outbreak {

using Engine = std::mt19937_64;

/// A node in a tree of reproducible random streams.
///
/// Every stochastic job (one outbreak, one fitness evaluation, one GA
/// generation's breeding step) draws from its own engine, seeded from a key
/// derived by hashing the parent key with a child index. Results therefore
/// depend only on the job's position in the tree, never on the order in
/// which worker threads pick jobs up.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) noexcept;

    [[nodiscard]] RngStream substream(std::uint64_t index) const noexcept;

    template <typename... Indices>
    [[nodiscard]] RngStream substream(std::uint64_t first, Indices... rest) const noexcept {
        return substream(first).substream(static_cast<std::uint64_t>(rest)...);
    }

    [[nodiscard]] Engine engine() const;
    [[nodiscard]] std::uint64_t key() const noexcept { return key_; }

private:
    std::uint64_t key_;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Uniform double in [0, 1) with 53 random bits.
double uniform01(Engine& engine) noexcept;

/// Uniform integer in [0, bound). `bound` must be positive.
std::size_t uniform_index(Engine& engine, std::size_t bound) noexcept;

// Stream tags used to keep sibling subtrees apart.
namespace stream_tag {
inline constexpr std::uint64_t evaluation = 0x65766131;
inline constexpr std::uint64_t breeding = 0x62726564;
inline constexpr std::uint64_t initialization = 0x696e6974;
inline constexpr std::uint64_t genetic_algorithm = 0x67616c67;
inline constexpr std::uint64_t strategy = 0x73747261;
}  // namespace stream_tag

}  // namespace outbreak
