#include "betahole/pairs.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "betahole/decide.hpp"
#include "betahole/error.hpp"
#include "betahole/gamma_map.hpp"
#include "betahole/oracles.hpp"
#include "betahole/parallel.hpp"

namespace betahole {
namespace {

bool is_rotation(const Word& w, const Word& v) {
  return w.size() == v.size() && (w + w).str().find(v.str()) != std::string::npos;
}

// The words at depth 1..depth of the tree with roots lo^∞ < hi^∞, where the
// child of neighbours is hi·lo.
void grow(const Word& lo, const Word& hi, std::size_t depth, const std::string& path,
          std::vector<std::pair<Word, std::string>>& out) {
  if (depth == 0) return;
  Word mid = hi + lo;
  grow(lo, mid, depth - 1, path + "L", out);
  out.emplace_back(mid, path);
  grow(mid, hi, depth - 1, path + "R", out);
}

}  // namespace

EPSeq MaximalPairRecord::right_end() const { return truncated ? *truncated : EPSeq(pair.s, pair.t); }

bool is_extremal(const Word& s, const Word& t) {
  if (s.empty() || s.size() != t.size() || !is_rotation(s, t)) return false;
  const EPSeq lo = EPSeq::periodic(s), hi = EPSeq::periodic(t);
  if (!(lo < hi)) return false;
  for (std::size_t k = 0; k < s.size(); ++k) {
    const EPSeq y = lo.shift(k);
    if (lo < y && y < hi) return false;
  }
  return true;
}

std::vector<ExtremalPair> shifted_balanced_pairs(const Fraction& g, int n) {
  const Word w = balanced_word(g);
  std::vector<ExtremalPair> out;
  for (int k = 1; k <= n; ++k) {
    const auto zeros = Word::zeros(static_cast<std::size_t>(k));
    const auto low = Word::zeros(static_cast<std::size_t>(k - 1)) + Word("1");
    Provenance p;
    p.gamma = g;
    p.shift = static_cast<std::size_t>(k);
    out.push_back({cyclic_extreme(w, zeros, Extreme::Max), cyclic_extreme(w, low, Extreme::Min), std::move(p)});
  }
  return out;
}

std::vector<Fraction> rbeta_gammas(const Fraction& gb, std::size_t count_cap) {
  const auto a = cf(gb).terms;
  const std::size_t n = a.size();
  std::vector<Fraction> out;
  for (std::size_t m = 1; m < n; m += 2) {
    CFrac c{{a.begin(), a.begin() + static_cast<std::ptrdiff_t>(m)}};
    const Fraction g = cf_inverse(c);
    if (g.p() != 1) out.push_back(g);
  }
  std::vector<std::int64_t> stem(a.begin(), a.end());
  if (n % 2 == 1) {
    stem.back() -= 1;
    stem.push_back(1);
  }
  for (std::size_t k = 1; k <= count_cap; ++k) {
    CFrac c{stem};
    c.terms.push_back(static_cast<std::int64_t>(k));
    out.push_back(cf_inverse(c));
  }
  return out;
}

std::vector<MaximalPairRecord> rbeta_tree_pairs(const Fraction& g, int n, const QuasiGreedyD& ctx,
                                                std::size_t depth) {
  const std::size_t un = static_cast<std::size_t>(n);
  const EPSeq inf_x = EPSeq::periodic(min_shift(gamma_of_beta(ctx).value));
  // R_β with the finite-word corners read as 0^{n+1}·d and 0^n·d.
  const EPSeq a_lo = inf_x.prepend(Word("0")), a_hi = ctx.d().prepend(Word::zeros(un + 1));
  const EPSeq b_lo = inf_x, b_hi = ctx.d().prepend(Word::zeros(un));
  std::vector<std::pair<Word, std::string>> nodes;
  grow(Word("0"), min_shift(g), depth, "", nodes);
  const Word s_prefix = Word::zeros(un + 1), t_prefix = Word::zeros(un) + Word("1");
  std::vector<MaximalPairRecord> out;
  for (auto& [w, path] : nodes) {
    Word s, t;
    try {
      s = cyclic_extreme(w, s_prefix, Extreme::Max);
      t = cyclic_extreme(w, t_prefix, Extreme::Min);
    } catch (const Error&) {
      continue;
    }
    const EPSeq si = EPSeq::periodic(s), ti = EPSeq::periodic(t);
    if (!is_admissible(si, ctx)) continue;
    if (!(a_lo < si && si <= a_hi && b_lo < ti && ti <= b_hi)) continue;
    Provenance p;
    p.kind = Provenance::Kind::RTree;
    p.gamma = g;
    p.path = path;
    out.push_back(make_record({std::move(s), std::move(t), std::move(p)}, ctx));
  }
  return out;
}

ExtremalPair farey_descendants(const ExtremalPair& base, const std::vector<Fraction>& rs) {
  if (rs.empty()) return base;
  const auto [s, t] = descendant_pair(rs);
  Provenance p;
  p.kind = Provenance::Kind::Descendant;
  p.gamma = base.provenance.gamma;
  p.base_s = base.s;
  p.base_t = base.t;
  p.rs = rs;
  return {substitute(s, base.s, base.t), substitute(t, base.s, base.t), std::move(p)};
}

bool blocks_admissible(const Word& s, const Word& t, const QuasiGreedyD& ctx) {
  std::vector<char> seen(static_cast<std::size_t>(ctx.state_count()), 0);
  std::vector<int> todo{0};
  seen[0] = 1;
  while (!todo.empty()) {
    const int from = todo.back();
    todo.pop_back();
    for (const Word* block : {&s, &t}) {
      int state = from;
      for (std::size_t i = 0; i < block->size() && state >= 0; ++i) state = ctx.step(state, (*block)[i]);
      if (state < 0) return false;
      if (!seen[static_cast<std::size_t>(state)]) {
        seen[static_cast<std::size_t>(state)] = 1;
        todo.push_back(state);
      }
    }
  }
  return true;
}

bool verify_maximal(const ExtremalPair& pair, const QuasiGreedyD& ctx, std::size_t period_cap) {
  const EPSeq si = EPSeq::periodic(pair.s), ti = EPSeq::periodic(pair.t);
  if (!is_admissible(si, ctx) || !is_extremal(pair.s, pair.t)) return false;
  const HoleSpec open(si, ti), closed(si, ti, true);
  if (!survives(si, ctx, open)) return false;
  const auto r = decide(ctx, open);
  if (r.kind != SurvivorKind::CountableNonempty) return false;
  if (!is_rotation(primitive_root(r.cycles[0]), primitive_root(pair.s))) return false;
  if (decide(ctx, closed).kind != SurvivorKind::Empty) return false;
  return !oracle_periodic_survivor(ctx, closed, period_cap).has_value();
}

MaximalPairRecord make_record(ExtremalPair pair, const QuasiGreedyD& ctx) {
  MaximalPairRecord rec{std::move(pair), std::nullopt};
  const EPSeq st(rec.pair.s, rec.pair.t);
  if (is_admissible(EPSeq::periodic(rec.pair.s), ctx) && !is_admissible(st, ctx)) {
    rec.truncated = max_admissible_below(st, ctx);
  }
  return rec;
}

std::vector<MaximalPairRecord> enumerate_maximal_pairs(const QuasiGreedyD& ctx, const PairCaps& caps) {
  const Fraction gb = gamma_of_beta(ctx).value;
  const int n = ctx.n_prefix();
  std::vector<Fraction> balanced;
  for (const auto& g : fractions_up_to(caps.q_cap)) {
    if (g <= gb) balanced.push_back(g);
  }
  std::vector<Fraction> tree;
  for (const auto& g : rbeta_gammas(gb, caps.count_cap)) {
    if (Fraction(1, n + 1) < g && g < Fraction(1, n)) tree.push_back(g);
  }

  std::mutex mu;
  std::map<std::pair<Word, Word>, MaximalPairRecord> found;
  auto keep = [&](MaximalPairRecord rec) {
    std::lock_guard lock(mu);
    found.try_emplace({rec.pair.s, rec.pair.t}, std::move(rec));
  };
  parallel_for(balanced.size() + tree.size(), [&](std::size_t i) {
    if (i >= balanced.size()) {
      for (auto& rec : rbeta_tree_pairs(tree[i - balanced.size()], n, ctx, caps.tree_depth)) keep(std::move(rec));
      return;
    }
    const Fraction& g = balanced[i];
    std::vector<ExtremalPair> shifted;
    try {
      shifted = shifted_balanced_pairs(g, n);
    } catch (const Error&) {
      return;
    }
    for (auto& p : shifted) {
      if (is_admissible(EPSeq::periodic(p.s), ctx)) keep(make_record(std::move(p), ctx));
    }
  });

  std::vector<MaximalPairRecord> out;
  for (auto& [key, rec] : found) out.push_back(std::move(rec));
  std::sort(out.begin(), out.end(), [](const MaximalPairRecord& x, const MaximalPairRecord& y) {
    return EPSeq::periodic(x.pair.s) < EPSeq::periodic(y.pair.s);
  });
  return out;
}

}  // namespace betahole
