#pragma once

#include <cstdint>

#include "thinpl/pl_word.hpp"

namespace thinpl {

/// splitmix64: 64-bit state, increment 0x9e3779b97f4a7c15, mix constants
/// 0xbf58476d1ce4e5b9 and 0x94d049bb133111eb. Fixed here so fuzz runs are
/// reproducible across implementations.
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish draw in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

private:
  std::uint64_t state_;
};

/// Random point of the given simplex with rational barycentric coordinates
/// of common denominator <= denom_bound.
Point random_point_in_simplex(const SimplicialComplex& complex, SimplexId s,
                              SplitMix64& rng, unsigned denom_bound);

/// Seeded random loop: `steps` star-walk moves from the basepoint, then a
/// breadth-first edge chain back to it. Always satisfies the word
/// invariants; identical seeds give identical words.
PLWord random_loop(std::shared_ptr<const SimplicialComplex> complex,
                   std::size_t steps, std::uint64_t seed, unsigned denom_bound);
PLWord random_loop(std::shared_ptr<const SimplicialComplex> complex,
                   std::size_t steps, SplitMix64& rng, unsigned denom_bound);

/// Thin-move mutations for property tests; both leave the core unchanged.
PLWord insert_flare(const PLWord& w, SplitMix64& rng, unsigned denom_bound);
PLWord insert_between_point(const PLWord& w, SplitMix64& rng, unsigned denom_bound);

}  // namespace thinpl
