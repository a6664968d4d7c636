#include "betahole/gamma_map.hpp"

#include <algorithm>

#include "betahole/error.hpp"
#include "betahole/parallel.hpp"

namespace betahole {
namespace {

// Past this word length the next Γ level is not attempted.
constexpr std::size_t kMaxDescendantLength = 1 << 16;

// Plateau search over the alphabet {S, T}: at level one S = 0 and T = 1, at
// deeper levels S, T are the current descendant pair and every candidate
// word is the substituted balanced word.
GammaResult plateau_search(const EPSeq& d, const Word& S, const Word& T, std::int64_t q_cap) {
  Fraction lo(0, 1), hi(1, 1);
  for (;;) {
    const Fraction node(lo.p() + hi.p(), lo.q() + hi.q());
    if (node.q() > q_cap) {
      throw Error("DepthExceeded", "plateau search passed denominator " + std::to_string(q_cap) + " for " + d.to_string());
    }
    if (static_cast<std::size_t>(node.q()) * S.size() > kMaxDescendantLength) {
      throw Error("DepthExceeded", "plateau search words exceed " + std::to_string(kMaxDescendantLength) + " letters for " + d.to_string());
    }
    const Word W = substitute(balanced_word(node), S, T);
    EPSeq left = max_shift(EPSeq::periodic(W));
    if (left > d) {
      hi = node;
      continue;
    }
    // Right end: the limit of the candidates W^k H from the right, whose
    // maximal shift may straddle the W|H junction.
    EPSeq right = max_shift(EPSeq(W + substitute(balanced_word(hi), S, T), W));
    if (d > right) {
      lo = node;
      continue;
    }
    return {node, std::move(left), std::move(right)};
  }
}

}  // namespace

GammaResult gamma_of_beta(const QuasiGreedyD& ctx, std::int64_t q_cap) {
  return plateau_search(ctx.d(), Word("0"), Word("1"), q_cap);
}

GammaVector gamma_vector(const QuasiGreedyD& ctx, std::size_t max_depth, std::int64_t q_cap) {
  const EPSeq& d = ctx.d();
  GammaVector out;
  Word S("0"), T("1");
  for (std::size_t level = 0; level < max_depth; ++level) {
    // Candidates (T S^{q-1})^∞ for small r decrease to max σ^k(S T S^∞), so
    // nothing deeper is admissible when d sits at or below that limit.
    if (level > 0 && d <= max_shift(EPSeq(S + T, S))) return out;
    if (level > 0 && S.size() > kMaxDescendantLength) break;
    GammaResult hit = [&] {
      try {
        return plateau_search(d, S, T, q_cap);
      } catch (const Error&) {
        if (level == 0) throw;
        return GammaResult{Fraction(0, 1), d, d};
      }
    }();
    if (hit.value.p() == 0) break;
    out.entries.push_back(hit.value);
    out.plateaus.emplace_back(hit.lo, hit.hi);
    const BalancedPair bp = balanced_pair(hit.value);
    Word nextS = substitute(bp.s, S, T), nextT = substitute(bp.t, S, T);
    S = std::move(nextS);
    T = std::move(nextT);
    const EPSeq s_inf = EPSeq::periodic(S);
    for (std::size_t k = 0; k < S.size(); ++k) {
      if (s_inf.shift(k) == d) {
        out.witness = k;
        return out;
      }
    }
  }
  out.terminal = Terminal::Truncated;
  return out;
}

std::vector<StairSample> staircase_samples(const std::vector<QuasiGreedyD>& ds) {
  std::vector<StairSample> out(ds.size(), StairSample{0, Fraction(0, 1)});
  parallel_for(ds.size(), [&](std::size_t i) { out[i] = {ds[i].beta(), gamma_of_beta(ds[i]).value}; });
  std::stable_sort(out.begin(), out.end(), [](const StairSample& x, const StairSample& y) { return x.beta < y.beta; });
  return out;
}

std::vector<EPSeq> periodic_expansions(std::size_t max_period) {
  std::vector<EPSeq> out;
  for (std::size_t len = 2; len <= max_period; ++len) {
    for (std::size_t bits = 0; bits < (std::size_t{1} << len); ++bits) {
      std::string s(len, '0');
      for (std::size_t i = 0; i < len; ++i) s[i] = (bits >> (len - 1 - i)) & 1 ? '1' : '0';
      if (s[0] != '1') continue;
      const Word w(s);
      if (!is_primitive(w) || cyclic_extreme(w, Word(), Extreme::Max) != w) continue;
      out.push_back(EPSeq::periodic(w));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace betahole
