#pragma once

// The devil's staircase γ(β) and the descendant vector Γ(β).

#include <optional>
#include <vector>

#include "betahole/beta_shift.hpp"
#include "betahole/farey.hpp"

namespace betahole {

struct GammaResult {
  Fraction value;
  /// Plateau [w_γ^∞, w_{γ₂} w_γ^∞] containing d, γ₂ the right Farey parent.
  EPSeq lo;
  EPSeq hi;
};

enum class Terminal { Exact, Truncated };

struct GammaVector {
  std::vector<Fraction> entries;
  /// Plateau bounds found at each level, in the original alphabet.
  std::vector<std::pair<EPSeq, EPSeq>> plateaus;
  Terminal terminal = Terminal::Exact;
  /// k with σ^k s_r^∞ = d, when d is the left end of the last plateau.
  std::optional<std::size_t> witness;
};

/// Stern–Brocot descent for the plateau containing d. Throws
/// Error("DepthExceeded") past denominator `q_cap`.
GammaResult gamma_of_beta(const QuasiGreedyD& ctx, std::int64_t q_cap = 1'000'000);

GammaVector gamma_vector(const QuasiGreedyD& ctx, std::size_t max_depth = 32,
                         std::int64_t q_cap = 1'000'000);

struct StairSample {
  double beta;
  Fraction gamma;
};

/// γ(β) for each context, sorted by β. Runs in parallel.
std::vector<StairSample> staircase_samples(const std::vector<QuasiGreedyD>& ds);

/// Every valid purely periodic d with least period ≤ max_period, i.e. the
/// primitive words w that are their own maximal rotation, start with 1 and
/// are not 1. Sorted by d.
std::vector<EPSeq> periodic_expansions(std::size_t max_period);

}  // namespace betahole
