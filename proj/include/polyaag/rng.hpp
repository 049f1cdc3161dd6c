#ifndef POLYAAG_RNG_HPP
#define POLYAAG_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>

namespace polyaag {

using Rng = std::mt19937_64;

// Seed-splitting scheme used everywhere a task needs its own RNG stream.
//
// Substream seeds are derived as
//
//     derive_seed(master, tag) = splitmix64(master ^ fnv1a64(tag))
//
// where `tag` is a short path-like string naming the task, e.g.
// "train/chain3/inst7". Tasks never share an engine: randomness is
// pre-assigned per task before any parallel dispatch, so results do not
// depend on the worker count.

constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

inline std::uint64_t derive_seed(std::uint64_t master, std::string_view tag) {
    return splitmix64(master ^ fnv1a64(tag));
}

}  // namespace polyaag

#endif
