#pragma once

// Extremal pairs (s,t): the balanced ones and their shifts, the pairs from
// Farey-like trees rooted at 0 and u_γ, Farey descendants, and the list of
// all maximal pairs for a given β.

#include <optional>
#include <string>
#include <vector>

#include "betahole/beta_shift.hpp"
#include "betahole/farey.hpp"

namespace betahole {

struct Provenance {
  enum class Kind { Balanced, RTree, Descendant };
  Kind kind = Kind::Balanced;
  /// γ of the balanced word or of the tree root u_γ.
  Fraction gamma{0, 1};
  /// Balanced: the k in (0^k-max, 0^{k-1}1-min).
  std::size_t shift = 0;
  /// RTree: L/R path from the middle node.
  std::string path;
  /// Descendant: the pair substituted into and the r-vector.
  Word base_s, base_t;
  std::vector<Fraction> rs;
};

struct ExtremalPair {
  Word s;
  Word t;
  Provenance provenance;
};

struct MaximalPairRecord {
  ExtremalPair pair;
  /// Greatest admissible point of [s^∞, st^∞] when st^∞ is inadmissible.
  std::optional<EPSeq> truncated;
  /// st^∞, or the truncation point when present.
  EPSeq right_end() const;
};

bool is_extremal(const Word& s, const Word& t);

/// The pairs (0^k-max(w_γ), 0^{k-1}1-min(w_γ)) for k = 1..n. Propagates
/// NoSuchRotation when w_γ has no run 0^k.
std::vector<ExtremalPair> shifted_balanced_pairs(const Fraction& g, int n);

/// Tree roots γ for the region R_β, largest first: odd convergents of gb
/// (excluding 1/m) followed by `count_cap` members of the k-family.
std::vector<Fraction> rbeta_gammas(const Fraction& gb, std::size_t count_cap);

/// Pairs from the tree rooted at 0 and u_g, down to `depth` levels below the
/// roots, that are admissible and lie in R_β.
std::vector<MaximalPairRecord> rbeta_tree_pairs(const Fraction& g, int n, const QuasiGreedyD& ctx,
                                                std::size_t depth);

/// Substitutes base.s, base.t for the letters of the balanced descendant pair.
ExtremalPair farey_descendants(const ExtremalPair& base, const std::vector<Fraction>& rs);

/// Every sequence made of the blocks s and t is admissible.
bool blocks_admissible(const Word& s, const Word& t, const QuasiGreedyD& ctx);

/// The open hole (s^∞, t^∞) leaves exactly the orbit of s^∞ (plus preimages),
/// the closed hole leaves nothing, and the necklace oracle finds no periodic
/// survivor of the closed hole up to `period_cap`.
bool verify_maximal(const ExtremalPair& pair, const QuasiGreedyD& ctx, std::size_t period_cap);

struct PairCaps {
  std::int64_t q_cap = 20;
  std::size_t tree_depth = 8;
  std::size_t count_cap = 8;
};

/// Sorted by s^∞, duplicates removed.
std::vector<MaximalPairRecord> enumerate_maximal_pairs(const QuasiGreedyD& ctx, const PairCaps& caps = {});

/// Record for (s,t) with the truncation point filled in.
MaximalPairRecord make_record(ExtremalPair pair, const QuasiGreedyD& ctx);

}  // namespace betahole
