#pragma once

// Exact decisions about the survivor set of a hole: a finite automaton for
// the admissible sequences whose whole orbit avoids the hole, its
// empty/countable/uncountable classification, and periodic-orbit counts.

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "betahole/beta_shift.hpp"

namespace betahole {

/// The hole (a,b), or [a,b] when closed. Throws Error("InvalidHole") unless
/// a ≺ b.
struct HoleSpec {
  HoleSpec(EPSeq a, EPSeq b, bool closed = false);
  EPSeq a;
  EPSeq b;
  bool closed;
};

/// True iff y lies outside the hole (y ⪯ a or y ⪰ b, strict when closed).
bool outside_hole(const EPSeq& y, const HoleSpec& hole);

/// Direct check that x is admissible, does not end in 0^∞, and that every
/// shift of x lies outside the hole.
bool survives(const EPSeq& x, const QuasiGreedyD& ctx, const HoleSpec& hole);

/// Hole from real endpoints via their first `depth` greedy digits followed by
/// 0^∞. Throws Error("UnknownNearBoundary") when a digit is unreliable.
HoleSpec hole_from_reals(double a, double b, const QuasiGreedyD& ctx, bool closed = false,
                         std::size_t depth = 40);

/// Deterministic automaton over {0,1}. A state records the longest suffix
/// matching a prefix of d, the offsets of pending matches against a, and the
/// offsets of pending matches against b (reached from a at the first place
/// a and b differ). Offsets past the preperiods wrap modulo the period.
struct LexAutomaton {
  struct State {
    int d_match = 0;
    std::vector<int> a_match;
    std::vector<int> b_match;
    friend bool operator==(const State&, const State&) = default;
  };
  std::vector<State> states;
  /// next[s][c] for letter c, or -1.
  std::vector<std::array<int, 2>> next;
  /// States with at least one infinite continuation.
  std::vector<bool> live;
  int initial = 0;
  bool closed = false;
};

/// Throws Error("StateBudgetExceeded") past `state_cap` states.
LexAutomaton build_avoider(const QuasiGreedyD& ctx, const HoleSpec& hole, std::size_t state_cap = 1'000'000);

enum class SurvivorKind { Empty, CountableNonempty, Uncountable };

const char* to_string(SurvivorKind kind);

struct Classification {
  SurvivorKind kind = SurvivorKind::Empty;
  /// Path from the initial state to the witness state.
  Word prefix;
  /// One cycle (countable) or two distinct cycles through one state
  /// (uncountable).
  std::vector<Word> cycles;
};

/// Sequences ending in 0^∞ are ignored (they are preimages of the fixed
/// point 0), so a cycle reading only 0s does not count.
Classification classify(const LexAutomaton& automaton, const QuasiGreedyD& ctx, const HoleSpec& hole);

/// Runs x through the automaton. Rejects sequences ending in 0^∞.
bool accepts(const LexAutomaton& automaton, const HoleSpec& hole, const EPSeq& x);

inline Classification decide(const QuasiGreedyD& ctx, const HoleSpec& hole, std::size_t state_cap = 1'000'000) {
  return classify(build_avoider(ctx, hole, state_cap), ctx, hole);
}

/// Admissible orbits of least period exactly n, one per orbit as its maximal
/// rotation, excluding 0^∞. With a hole, only orbits avoiding it. Stops
/// after `limit` orbits when limit > 0.
std::vector<Word> periodic_orbits(const QuasiGreedyD& ctx, std::size_t n, const HoleSpec* hole = nullptr,
                                  std::size_t limit = 0);

/// Least n with at least two admissible orbits of least period n.
std::size_t n_beta(const QuasiGreedyD& ctx);

enum class PeriodMode { Least, Divisor };

/// The n in (N_β, n_max] for which every admissible orbit of period n meets
/// the hole. In Divisor mode an orbit of least period dividing n counts.
std::set<std::size_t> bad_n(const QuasiGreedyD& ctx, const HoleSpec& hole, std::size_t n_max,
                            PeriodMode mode = PeriodMode::Least);

}  // namespace betahole
