#ifndef RDW_RANDOM_HPP
#define RDW_RANDOM_HPP

#include <cstdint>
#include <random>

namespace rdw {

// Seeded stream derived from (seed, stream). Distinct streams of one seed are
// independent, so per-radius or per-task generators can be split off without
// sharing state. Only raw engine output is used downstream, which keeps
// results identical across standard library implementations.
inline std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t stream = 0) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32), 0x52445742u};
  return std::mt19937_64(seq);
}

/// Uniform index in [0, n) from raw engine output.
inline std::uint64_t draw_index(std::mt19937_64& rng, std::uint64_t n) {
  return n == 0 ? 0 : rng() % n;
}

}  // namespace rdw

#endif  // RDW_RANDOM_HPP
