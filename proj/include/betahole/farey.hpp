#pragma once

// Rationals in [0,1], continued fractions, the Farey tree of balanced words,
// balanced extremal pairs and the ρ substitutions.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "betahole/words.hpp"

namespace betahole {

/// A reduced fraction p/q in [0,1].
class Fraction {
 public:
  /// Reduces; throws Error("InvalidFraction") outside [0,1] or for q = 0.
  Fraction(std::int64_t p, std::int64_t q);

  static Fraction parse(std::string_view text);

  std::int64_t p() const noexcept { return p_; }
  std::int64_t q() const noexcept { return q_; }
  double value() const noexcept { return static_cast<double>(p_) / static_cast<double>(q_); }
  std::string to_string() const { return std::to_string(p_) + "/" + std::to_string(q_); }

  friend bool operator==(const Fraction&, const Fraction&) = default;
  friend std::strong_ordering operator<=>(const Fraction& x, const Fraction& y) {
    return static_cast<__int128>(x.p_) * y.q_ <=> static_cast<__int128>(y.p_) * x.q_;
  }

 private:
  std::int64_t p_;
  std::int64_t q_;
};

std::vector<Fraction> parse_fraction_list(std::string_view text);
std::string fraction_list_string(const std::vector<Fraction>& rs);

/// Continued fraction [0; a_1, ..., a_n]. Canonical form has a_n > 1, except
/// 1/1 = [0; 1]; 0/1 has no terms.
struct CFrac {
  std::vector<std::int64_t> terms;
  friend bool operator==(const CFrac&, const CFrac&) = default;
};

CFrac cf(const Fraction& g);
/// Accepts non-canonical expansions too (e.g. a trailing 1).
Fraction cf_inverse(const CFrac& c);

/// True iff x < y and q_x p_y − p_x q_y = 1.
bool are_neighbours(const Fraction& x, const Fraction& y);
/// Throws Error("NotNeighbours").
Fraction mediant(const Fraction& x, const Fraction& y);
/// (left, right) Farey parents. Throws Error("RootFraction") for 0/1, 1/1.
std::pair<Fraction, Fraction> farey_parents(const Fraction& g);

/// w_γ from the tree recursion w_{γ₁⊕γ₂} = w_{γ₂} w_{γ₁}; memoized.
Word balanced_word(const Fraction& g);
/// u_γ, the minimal rotation of w_γ.
Word min_shift(const Fraction& g);

struct BalancedPair {
  Fraction gamma;
  Word s;  // 0-max(w_γ)
  Word t;  // 1-min(w_γ)
};

BalancedPair balanced_pair(const Fraction& g);

/// ρ_r applied letterwise: 0 ↦ s_r, 1 ↦ t_r.
Word substitute(const Fraction& r, const Word& w);
/// Letterwise substitution 0 ↦ zero, 1 ↦ one.
Word substitute(const Word& w, const Word& zero, const Word& one);

/// (ρ_{r1}∘…∘ρ_{rn}(0), ρ_{r1}∘…∘ρ_{rn}(1)).
std::pair<Word, Word> descendant_pair(const std::vector<Fraction>& rs);

/// All reduced fractions strictly inside (0,1) with denominator ≤ q_cap,
/// in increasing order.
std::vector<Fraction> fractions_up_to(std::int64_t q_cap);

}  // namespace betahole
