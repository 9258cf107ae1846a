#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace tifo {

// SplitMix64 step; used to whiten seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// FNV-1a over bytes; stable across platforms.
constexpr std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

// Seed fan-out scheme: every task derives its own RNG stream from the
// master seed, a task label, and an index, so serial and parallel runs
// see identical streams.
constexpr std::uint64_t derive_seed(std::uint64_t master, std::string_view label,
                                    std::uint64_t index = 0) {
    return splitmix64(splitmix64(master ^ fnv1a64(label)) + index);
}

// Shortest decimal form that round-trips to the same double.
std::string format_double(double v);

// Hex form of a 64-bit hash, for provenance fields.
std::string hex64(std::uint64_t v);

}  // namespace tifo
