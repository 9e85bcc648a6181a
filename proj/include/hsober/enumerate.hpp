#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "hsober/space.hpp"

namespace hsober {

/// Random finite T0 space: size uniform in [1, max_points], each pair of a
/// shuffled order related with probability 0.15, 0.3 or 0.5, then closed
/// transitively. Labels p0, p1, ... Draws are explicit so sequences do not
/// depend on the standard library's distribution implementations.
FiniteSpace random_space(std::mt19937_64& rng, std::size_t max_points);

/// Uniform draw in [0, n).
std::size_t draw_index(std::mt19937_64& rng, std::size_t n);
/// Bernoulli(p) from 53 random bits.
bool draw_bool(std::mt19937_64& rng, double p);

/// Canonical relation code: the lexicographically least strict-order matrix
/// over every relabeling consistent with an invariant refinement. Equal codes
/// iff the posets are isomorphic. Supports up to 8 points.
std::uint64_t canonical_code(const FiniteSpace& X);

/// All posets with exactly n points up to isomorphism (n <= 6), each in
/// canonical labeling p0..p{n-1}, ordered by canonical code.
std::vector<FiniteSpace> posets_up_to_iso(std::size_t n);
/// Sizes 1..max_n concatenated.
std::vector<FiniteSpace> poset_corpus(std::size_t max_n);

/// An order isomorphism X -> Y (a homeomorphism between finite T0 spaces),
/// as the image index of each point of X.
std::optional<std::vector<std::size_t>> find_isomorphism(const FiniteSpace& X, const FiniteSpace& Y);

}  // namespace hsober
