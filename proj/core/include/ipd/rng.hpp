#pragma once

#include <cstdint>
#include <random>

namespace ipd {

/// splitmix64 step; used to whiten seed material for substreams.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d4a9c4c417b3abULL ^ 0x2545f4914f6cdd1dULL;
    return z ^ (z >> 31);
}

/// Independent generator for one Monte Carlo trial.
///
/// Streams are keyed by (master seed, point index, trial index) so that
/// trials are reproducible regardless of execution order or thread count.
inline std::mt19937_64 substream(std::uint64_t master_seed, std::uint64_t point,
                                 std::uint64_t trial) {
    std::uint64_t s = master_seed;
    std::uint64_t a = splitmix64(s);
    s ^= point * 0x9e3779b97f4a7c15ULL;
    std::uint64_t b = splitmix64(s);
    s ^= trial * 0xd1b54a32d192ed03ULL;
    std::uint64_t c = splitmix64(s);
    std::seed_seq seq{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(a >> 32),
                      static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(b >> 32),
                      static_cast<std::uint32_t>(c), static_cast<std::uint32_t>(c >> 32)};
    return std::mt19937_64(seq);
}

}  // namespace ipd
