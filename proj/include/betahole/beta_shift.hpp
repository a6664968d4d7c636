#pragma once

// β-expansions: the quasi-greedy expansion of 1, Parry admissibility,
// numeric evaluation, and the greatest admissible sequence below a target.

#include <optional>

#include "betahole/words.hpp"

namespace betahole {

/// A validated quasi-greedy expansion d of 1, together with the β it
/// determines. Immutable; shareable across threads.
class QuasiGreedyD {
 public:
  /// Validates d (starts with 1, shift-maximal, d ≺ 1^∞) and solves for β.
  /// Throws Error("InvalidExpansion") or Error("NoRoot").
  explicit QuasiGreedyD(EPSeq d, double tol = 1e-12);

  /// From a finite greedy expansion of 1, e.g. "11" for the golden ratio.
  static QuasiGreedyD from_greedy(const Word& greedy, double tol = 1e-12);

  const EPSeq& d() const noexcept { return d_; }
  double beta() const noexcept { return beta_; }
  /// The n with (10^n)^∞ ⪯ d ≺ (10^{n-1})^∞, i.e. γ(β) ∈ [1/(n+1), 1/n).
  int n_prefix() const noexcept { return n_; }

  /// Transition of the Parry automaton. `state` is the length of the longest
  /// suffix of the input matching a prefix of d (reduced modulo the period).
  /// Returns -1 when the letter makes the input inadmissible.
  int step(int state, char c) const noexcept;
  /// Number of Parry automaton states.
  int state_count() const noexcept { return static_cast<int>(d_.orbit_span()); }

 private:
  EPSeq d_;
  double beta_;
  int n_;
};

/// (greedy with last letter replaced by 0)^∞. Throws Error("DegenerateBeta")
/// when the result has no 1 in its period.
EPSeq quasi_greedy_from_greedy(const Word& greedy);

/// Parry's condition: d starts with 1 and every shift of d is ⪯ d.
bool validate_parry(const EPSeq& d);

bool is_admissible(const EPSeq& x, const QuasiGreedyD& ctx);
/// True iff the finite word w can be extended to an admissible sequence.
bool is_admissible_prefix(const Word& w, const QuasiGreedyD& ctx);

/// Root in (1,2) of Σ d_i x^{-i} = 1 by bisection. Throws Error("NoRoot").
double beta_from_d(const EPSeq& d, double tol = 1e-12);

/// Σ x_i β^{-i}, summed in closed form.
double eval_point(const EPSeq& x, double beta);
inline double eval_point(const EPSeq& x, const QuasiGreedyD& ctx) { return eval_point(x, ctx.beta()); }

/// Point value of a finite word under the u1 ↦ u0·d convention.
EPSeq finite_word_point(const Word& w, const QuasiGreedyD& ctx);

struct GreedyDigits {
  Word digits;
  /// Set when the orbit passed within 1e-12 of the discontinuity 1/β.
  bool unreliable = false;
};

/// First `depth` greedy digits of x ∈ [0,1). Throws Error("OutOfRange").
GreedyDigits greedy_expansion(double x, const QuasiGreedyD& ctx, std::size_t depth);

/// Greatest admissible y ⪯ target. Throws Error("NoAdmissiblePoint") when
/// target ⪯ 0^∞.
EPSeq max_admissible_below(const EPSeq& target, const QuasiGreedyD& ctx);

/// When y = u0·d, the finite word u1 naming the same point.
std::optional<Word> finite_form(const EPSeq& y, const QuasiGreedyD& ctx);

}  // namespace betahole
