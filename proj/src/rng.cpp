#include "outbreak/rng.hpp"

#include <array>
#include <limits>

namespace outbreak {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

RngStream::RngStream(std::uint64_t seed) noexcept : key_(splitmix64(seed)) {}

RngStream RngStream::substream(std::uint64_t index) const noexcept {
    RngStream child(0);
    child.key_ = splitmix64(key_ ^ splitmix64(index + 0x632be59bd9b4e019ULL));
    return child;
}

Engine RngStream::engine() const {
    std::array<std::uint32_t, 4> words{
        static_cast<std::uint32_t>(key_), static_cast<std::uint32_t>(key_ >> 32),
        static_cast<std::uint32_t>(splitmix64(key_)),
        static_cast<std::uint32_t>(splitmix64(key_) >> 32)};
    std::seed_seq seq(words.begin(), words.end());
    return Engine(seq);
}

double uniform01(Engine& engine) noexcept {
    return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

std::size_t uniform_index(Engine& engine, std::size_t bound) noexcept {
    // Rejection sampling over the largest multiple of `bound`.
    const std::uint64_t range = bound;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t draw = engine();
    while (draw >= limit) {
        draw = engine();
    }
    return static_cast<std::size_t>(draw % range);
}

}  // namespace outbreak
