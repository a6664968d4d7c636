#include "betahole/oracles.hpp"

#include <numeric>
#include <string>
#include <vector>

#include "betahole/error.hpp"

namespace betahole {
namespace {

// Order of the rotation w[k..]w[..k] repeated, against x. Past the
// preperiod of x both sides repeat with period lcm(|w|, |per x|).
int compare_rotation(const std::string& w, std::size_t k, const EPSeq& x) {
  const std::size_t n = w.size();
  const std::size_t horizon = x.pre().size() + std::lcm(n, x.per().size());
  for (std::size_t i = 0; i < horizon; ++i) {
    const char c = w[(k + i) % n], e = x.letter(i);
    if (c != e) return c < e ? -1 : 1;
  }
  return 0;
}

bool periodic_survives(const std::string& w, const QuasiGreedyD& ctx, const HoleSpec& hole) {
  if (w.find('1') == std::string::npos) return false;
  // Late shifts cross the wrap soonest, so they usually fail first.
  for (std::size_t k = w.size(); k-- > 0;) {
    if (compare_rotation(w, k, ctx.d()) > 0) return false;
    const int ca = compare_rotation(w, k, hole.a);
    if (hole.closed ? ca < 0 : ca <= 0) continue;
    const int cb = compare_rotation(w, k, hole.b);
    if (!(hole.closed ? cb > 0 : cb >= 0)) return false;
  }
  return true;
}

// Prefix test on a growing word: every suffix w[k..] is compared with d, a
// and b as far as it goes. A suffix is dropped from the frontier once all
// three comparisons are decided; decided suffixes never change status.
struct Pending {
  std::size_t k;
  signed char d, a, b;  // -1 less, 0 equal so far, +1 greater
};

class PrefixFilter {
 public:
  PrefixFilter(const QuasiGreedyD& ctx, const HoleSpec& hole) : ctx_(ctx), hole_(hole) {}

  // Frontier after appending c at position j, or false when some suffix is
  // above d or strictly inside the hole.
  bool extend(const std::vector<Pending>& from, std::size_t j, char c, std::vector<Pending>& to) const {
    to.clear();
    auto step = [&](Pending p) {
      const std::size_t i = j - p.k;
      if (p.d == 0) p.d = cmp(c, ctx_.d().letter(i));
      if (p.a == 0) p.a = cmp(c, hole_.a.letter(i));
      if (p.b == 0) p.b = cmp(c, hole_.b.letter(i));
      if (p.d > 0 || (p.a > 0 && p.b < 0)) return false;
      if (p.d == 0 || p.a == 0 || p.b == 0) to.push_back(p);
      return true;
    };
    for (const auto& p : from) {
      if (!step(p)) return false;
    }
    return step({j, 0, 0, 0});
  }

 private:
  static signed char cmp(char c, char e) { return c == e ? 0 : (c < e ? -1 : 1); }
  const QuasiGreedyD& ctx_;
  const HoleSpec& hole_;
};

struct Counter {
  PrefixFilter filter;
  std::size_t len, tail, cap, count = 0;
  std::string w;
  std::vector<std::vector<Pending>> frontier{1};

  void dfs() {
    if (count >= cap) return;
    if (w.size() == len) {
      if (w.find('1', len - tail) != std::string::npos) ++count;
      return;
    }
    const std::size_t j = w.size();
    if (frontier.size() < j + 2) frontier.resize(j + 2);
    for (char c : {'0', '1'}) {
      if (!filter.extend(frontier[j], j, c, frontier[j + 1])) continue;
      w.push_back(c);
      dfs();
      w.pop_back();
    }
  }
};

// Depth-first over words passing the prefix test; every node w is also
// tried as the periodic point w^∞. A periodic survivor of period n has all
// its prefixes passing, so one search to depth max_period sees all of them.
// Once a survivor is found only shorter ones are sought.
struct PeriodicSearch {
  const QuasiGreedyD& ctx;
  const HoleSpec& hole;
  PrefixFilter filter;
  std::size_t max_period;
  std::string w;
  std::vector<std::vector<Pending>> frontier{1};
  std::optional<Word> found;

  void dfs() {
    if (!w.empty() && periodic_survives(w, ctx, hole)) {
      found = primitive_root(Word(w));
      return;
    }
    const std::size_t j = w.size();
    if (frontier.size() < j + 2) frontier.resize(j + 2);
    for (char c : {'0', '1'}) {
      if (j + 1 > (found ? found->size() - 1 : max_period)) return;
      if (!filter.extend(frontier[j], j, c, frontier[j + 1])) continue;
      w.push_back(c);
      dfs();
      w.pop_back();
    }
  }
};

}  // namespace

std::optional<Word> oracle_periodic_survivor(const QuasiGreedyD& ctx, const HoleSpec& hole, std::size_t max_period) {
  PeriodicSearch search{ctx, hole, PrefixFilter(ctx, hole), max_period, {}, std::vector<std::vector<Pending>>(1), std::nullopt};
  search.dfs();
  if (search.found && !survives(EPSeq::periodic(*search.found), ctx, hole)) {
    throw Error("OracleMismatch", "periodic check disagrees with survives() on " + search.found->str());
  }
  return search.found;
}

std::size_t count_avoiding_words(const QuasiGreedyD& ctx, const HoleSpec& hole, std::size_t len, std::size_t tail,
                                 std::size_t cap) {
  Counter counter{PrefixFilter(ctx, hole), len, tail, cap, 0, {}, std::vector<std::vector<Pending>>(1)};
  counter.dfs();
  return counter.count;
}

bool verify_two_cycles(const QuasiGreedyD& ctx, const HoleSpec& hole, const Word& prefix, const Word& u,
                       const Word& v) {
  if (u.empty() || v.empty() || u + v == v + u) return false;
  return survives(EPSeq(prefix, u + v), ctx, hole) && survives(EPSeq(prefix, u + u + v), ctx, hole) &&
         survives(EPSeq(prefix, u + v + v), ctx, hole);
}

}  // namespace betahole
