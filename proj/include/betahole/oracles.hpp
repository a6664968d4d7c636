#pragma once

// Brute-force reference computations, kept independent of the automaton.

#include <cstddef>
#include <optional>

#include "betahole/decide.hpp"

namespace betahole {

/// Number of admissible words of length `len` none of whose suffixes is
/// already known to lie strictly inside the hole, counting only words with
/// a 1 somewhere in the last `tail` letters. Stops counting at `cap`.
std::size_t count_avoiding_words(const QuasiGreedyD& ctx, const HoleSpec& hole, std::size_t len, std::size_t tail,
                                 std::size_t cap);

/// Depth-limited emptiness test by plain word enumeration: a surviving
/// periodic word of length ≤ max_period (other than 0), or nullopt. A
/// nonempty survivor set always contains a periodic orbit, so this detects
/// every survivor set whose orbits are short enough.
std::optional<Word> oracle_periodic_survivor(const QuasiGreedyD& ctx, const HoleSpec& hole, std::size_t max_period);

/// Checks an Uncountable witness directly: u and v do not commute and
/// prefix·(uv)^∞, prefix·(uuv)^∞, prefix·(uvv)^∞ all survive. Either cycle
/// may read only 0s, so neither is tested alone.
bool verify_two_cycles(const QuasiGreedyD& ctx, const HoleSpec& hole, const Word& prefix, const Word& u,
                       const Word& v);

}  // namespace betahole
