#include "betahole/decide.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <mutex>
#include <unordered_map>

#include "betahole/error.hpp"
#include "betahole/parallel.hpp"

namespace betahole {

HoleSpec::HoleSpec(EPSeq a_, EPSeq b_, bool closed_) : a(std::move(a_)), b(std::move(b_)), closed(closed_) {
  if (!(a < b)) throw Error("InvalidHole", "need a < b, got " + a.to_string() + " and " + b.to_string());
}

bool outside_hole(const EPSeq& y, const HoleSpec& hole) {
  if (hole.closed) return y < hole.a || y > hole.b;
  return y <= hole.a || y >= hole.b;
}

bool survives(const EPSeq& x, const QuasiGreedyD& ctx, const HoleSpec& hole) {
  if (x.per() == Word("0")) return false;
  for (std::size_t k = 0; k < x.orbit_span(); ++k) {
    const EPSeq y = x.shift(k);
    if (y > ctx.d() || !outside_hole(y, hole)) return false;
  }
  return true;
}

HoleSpec hole_from_reals(double a, double b, const QuasiGreedyD& ctx, bool closed, std::size_t depth) {
  const auto ga = greedy_expansion(a, ctx, depth), gb = greedy_expansion(b, ctx, depth);
  if (ga.unreliable || gb.unreliable) {
    throw Error("UnknownNearBoundary", "greedy digits of a hole endpoint pass too close to 1/β");
  }
  return HoleSpec(EPSeq(ga.digits, Word("0")), EPSeq(gb.digits, Word("0")), closed);
}

const char* to_string(SurvivorKind kind) {
  switch (kind) {
    case SurvivorKind::Empty: return "Empty";
    case SurvivorKind::CountableNonempty: return "CountableNonempty";
    case SurvivorKind::Uncountable: return "Uncountable";
  }
  return "?";
}

namespace {

using State = LexAutomaton::State;

enum class Outcome { Safe, Dead, A, B };

struct Move {
  Outcome kind;
  int offset;
};

// Follows pending comparisons of a shift against a and b one letter at a time.
struct Stepper {
  Stepper(const QuasiGreedyD& c, const HoleSpec& h) : ctx(c), hole(h) {
    for (delta = 0; hole.a.letter(static_cast<std::size_t>(delta)) == hole.b.letter(static_cast<std::size_t>(delta));) ++delta;
    pa = static_cast<int>(hole.a.per().size());
    pb = static_cast<int>(hole.b.per().size());
    ta = std::max(static_cast<int>(hole.a.pre().size()), delta + 1);
    tb = static_cast<int>(hole.b.pre().size());
  }

  int reduce_a(int i) const { return i >= ta + pa ? ta + (i - ta) % pa : i; }
  int reduce_b(int j) const { return j >= tb + pb ? tb + (j - tb) % pb : j; }

  // A shift agreeing with a on i letters. Above a before the first place a
  // and b differ it is already above b; at that place it starts tracking b;
  // after it, it sits strictly between a and b.
  Move move_a(int i, char c) const {
    const char x = hole.a.letter(static_cast<std::size_t>(i));
    if (c == x) return {Outcome::A, reduce_a(i + 1)};
    if (c < x) return {Outcome::Safe, 0};
    if (i < delta) return {Outcome::Safe, 0};
    if (i == delta) return {Outcome::B, reduce_b(i + 1)};
    return {Outcome::Dead, 0};
  }

  // A shift above a agreeing with b on j letters.
  Move move_b(int j, char c) const {
    const char x = hole.b.letter(static_cast<std::size_t>(j));
    if (c == x) return {Outcome::B, reduce_b(j + 1)};
    if (c > x) return {Outcome::Safe, 0};
    return {Outcome::Dead, 0};
  }

  std::optional<State> step(const State& s, char c) const {
    State out;
    out.d_match = ctx.step(s.d_match, c);
    if (out.d_match < 0) return std::nullopt;
    auto place = [&](Move m) {
      if (m.kind == Outcome::A) out.a_match.push_back(m.offset);
      else if (m.kind == Outcome::B) out.b_match.push_back(m.offset);
      return m.kind != Outcome::Dead;
    };
    // The shift starting at this letter begins with an empty match.
    if (s.a_match.empty() || s.a_match.front() != 0) {
      if (!place(move_a(0, c))) return std::nullopt;
    }
    for (int i : s.a_match) {
      if (!place(move_a(i, c))) return std::nullopt;
    }
    for (int j : s.b_match) {
      if (!place(move_b(j, c))) return std::nullopt;
    }
    for (auto* v : {&out.a_match, &out.b_match}) {
      std::sort(v->begin(), v->end());
      v->erase(std::unique(v->begin(), v->end()), v->end());
    }
    return out;
  }

  // Where each pending match of s (a-matches first, then b-matches) lands in
  // t after reading c; -1 when it resolves.
  std::vector<int> thread_map(const State& s, char c, const State& t) const {
    std::vector<int> out;
    auto locate = [&](Move m) {
      if (m.kind == Outcome::A) {
        const auto it = std::lower_bound(t.a_match.begin(), t.a_match.end(), m.offset);
        return static_cast<int>(it - t.a_match.begin());
      }
      if (m.kind == Outcome::B) {
        const auto it = std::lower_bound(t.b_match.begin(), t.b_match.end(), m.offset);
        return static_cast<int>(t.a_match.size() + (it - t.b_match.begin()));
      }
      return -1;
    };
    for (int i : s.a_match) out.push_back(locate(move_a(i, c)));
    for (int j : s.b_match) out.push_back(locate(move_b(j, c)));
    return out;
  }

  const QuasiGreedyD& ctx;
  const HoleSpec& hole;
  int delta = 0, ta = 0, pa = 1, tb = 0, pb = 1;
};

struct StateHash {
  std::size_t operator()(const State& s) const noexcept {
    std::size_t h = std::hash<int>{}(s.d_match);
    auto mix = [&h](int v) { h ^= std::hash<int>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
    for (int v : s.a_match) mix(v);
    mix(-1);
    for (int v : s.b_match) mix(v);
    return h;
  }
};

char letter_of(int c) { return c == 0 ? '0' : '1'; }

}  // namespace

LexAutomaton build_avoider(const QuasiGreedyD& ctx, const HoleSpec& hole, std::size_t state_cap) {
  const Stepper stepper(ctx, hole);
  LexAutomaton out;
  out.closed = hole.closed;
  std::unordered_map<State, int, StateHash> index;
  out.states.push_back(State{});
  out.next.push_back({-1, -1});
  index.emplace(out.states[0], 0);
  for (std::size_t s = 0; s < out.states.size(); ++s) {
    for (int c = 0; c < 2; ++c) {
      auto t = stepper.step(out.states[s], letter_of(c));
      if (!t) continue;
      auto [it, fresh] = index.emplace(*t, static_cast<int>(out.states.size()));
      if (fresh) {
        if (out.states.size() >= state_cap) {
          throw Error("StateBudgetExceeded", "automaton exceeded " + std::to_string(state_cap) + " states");
        }
        out.states.push_back(std::move(*t));
        out.next.push_back({-1, -1});
      }
      out.next[s][static_cast<std::size_t>(c)] = it->second;
    }
  }
  // Trim: repeatedly drop states without a live successor.
  const std::size_t n = out.states.size();
  std::vector<std::vector<int>> preds(n);
  std::vector<int> outdeg(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    for (int t : out.next[s]) {
      if (t < 0) continue;
      preds[static_cast<std::size_t>(t)].push_back(static_cast<int>(s));
      ++outdeg[s];
    }
  }
  out.live.assign(n, true);
  std::deque<int> queue;
  for (std::size_t s = 0; s < n; ++s) {
    if (outdeg[s] == 0) queue.push_back(static_cast<int>(s));
  }
  while (!queue.empty()) {
    const int s = queue.front();
    queue.pop_front();
    out.live[static_cast<std::size_t>(s)] = false;
    for (int p : preds[static_cast<std::size_t>(s)]) {
      if (--outdeg[static_cast<std::size_t>(p)] == 0) queue.push_back(p);
    }
  }
  return out;
}

Classification classify(const LexAutomaton& automaton, const QuasiGreedyD& ctx, const HoleSpec& hole) {
  const std::size_t n = automaton.states.size();
  auto edge = [&](std::size_t s, int c) -> int {
    const int t = automaton.next[s][static_cast<std::size_t>(c)];
    return t >= 0 && automaton.live[static_cast<std::size_t>(t)] ? t : -1;
  };
  Classification out;
  if (n == 0 || !automaton.live[static_cast<std::size_t>(automaton.initial)]) return out;

  // Kosaraju over live states, iteratively.
  std::vector<int> order;
  std::vector<char> seen(n, 0);
  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root] || !automaton.live[root]) continue;
    std::vector<std::pair<int, int>> stack{{static_cast<int>(root), 0}};
    seen[root] = 1;
    while (!stack.empty()) {
      auto& [s, c] = stack.back();
      if (c < 2) {
        const int t = edge(static_cast<std::size_t>(s), c++);
        if (t >= 0 && !seen[static_cast<std::size_t>(t)]) {
          seen[static_cast<std::size_t>(t)] = 1;
          stack.emplace_back(t, 0);
        }
      } else {
        order.push_back(s);
        stack.pop_back();
      }
    }
  }
  std::vector<std::vector<int>> rev(n);
  for (std::size_t s = 0; s < n; ++s) {
    if (!automaton.live[s]) continue;
    for (int c = 0; c < 2; ++c) {
      const int t = edge(s, c);
      if (t >= 0) rev[static_cast<std::size_t>(t)].push_back(static_cast<int>(s));
    }
  }
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> members;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (comp[static_cast<std::size_t>(*it)] >= 0) continue;
    const int id = static_cast<int>(members.size());
    members.emplace_back();
    std::vector<int> stack{*it};
    comp[static_cast<std::size_t>(*it)] = id;
    while (!stack.empty()) {
      const int s = stack.back();
      stack.pop_back();
      members.back().push_back(s);
      for (int p : rev[static_cast<std::size_t>(s)]) {
        if (comp[static_cast<std::size_t>(p)] < 0) {
          comp[static_cast<std::size_t>(p)] = id;
          stack.push_back(p);
        }
      }
    }
  }

  // Shortest labelled paths from the initial state.
  std::vector<int> parent(n, -2);
  std::vector<char> via(n, 0);
  {
    std::deque<int> queue{automaton.initial};
    parent[static_cast<std::size_t>(automaton.initial)] = -1;
    while (!queue.empty()) {
      const int s = queue.front();
      queue.pop_front();
      for (int c = 0; c < 2; ++c) {
        const int t = edge(static_cast<std::size_t>(s), c);
        if (t >= 0 && parent[static_cast<std::size_t>(t)] == -2) {
          parent[static_cast<std::size_t>(t)] = s;
          via[static_cast<std::size_t>(t)] = letter_of(c);
          queue.push_back(t);
        }
      }
    }
  }
  auto path_to = [&](int s) {
    std::string w;
    for (int v = s; parent[static_cast<std::size_t>(v)] >= 0; v = parent[static_cast<std::size_t>(v)]) {
      w.push_back(via[static_cast<std::size_t>(v)]);
    }
    std::reverse(w.begin(), w.end());
    return Word(w);
  };
  // Labels of a shortest path from `from` to `to` inside component `id`.
  auto inner_path = [&](int from, int to, int id) {
    std::unordered_map<int, std::pair<int, char>> back;
    std::deque<int> queue{from};
    back.emplace(from, std::pair{-1, '\0'});
    while (!queue.empty() && !back.contains(to)) {
      const int s = queue.front();
      queue.pop_front();
      for (int c = 0; c < 2; ++c) {
        const int t = edge(static_cast<std::size_t>(s), c);
        if (t >= 0 && comp[static_cast<std::size_t>(t)] == id && !back.contains(t)) {
          back.emplace(t, std::pair{s, letter_of(c)});
          queue.push_back(t);
        }
      }
    }
    std::string w;
    for (int v = to; v != from; v = back.at(v).first) w.push_back(back.at(v).second);
    std::reverse(w.begin(), w.end());
    return w;
  };

  const Stepper stepper(ctx, hole);
  std::optional<Classification> countable;
  for (int id = 0; id < static_cast<int>(members.size()); ++id) {
    const auto& nodes = members[static_cast<std::size_t>(id)];
    std::size_t edges = 0;
    for (int s : nodes) {
      for (int c = 0; c < 2; ++c) {
        const int t = edge(static_cast<std::size_t>(s), c);
        if (t >= 0 && comp[static_cast<std::size_t>(t)] == id) ++edges;
      }
    }
    if (edges == 0) continue;
    if (edges > nodes.size()) {
      // Some state has both successors in the component: two cycles.
      for (int v : nodes) {
        const int t0 = edge(static_cast<std::size_t>(v), 0), t1 = edge(static_cast<std::size_t>(v), 1);
        if (t0 < 0 || t1 < 0 || comp[static_cast<std::size_t>(t0)] != id || comp[static_cast<std::size_t>(t1)] != id) continue;
        out.kind = SurvivorKind::Uncountable;
        out.prefix = path_to(v);
        out.cycles = {Word("0" + inner_path(t0, v, id)), Word("1" + inner_path(t1, v, id))};
        return out;
      }
    }
    if (countable) continue;
    // A simple cycle; read it from its first node.
    const int v0 = nodes.front();
    std::string labels;
    std::vector<int> cycle_states;
    for (int v = v0;;) {
      cycle_states.push_back(v);
      int step_to = -1;
      for (int c = 0; c < 2; ++c) {
        const int t = edge(static_cast<std::size_t>(v), c);
        if (t >= 0 && comp[static_cast<std::size_t>(t)] == id) {
          labels.push_back(letter_of(c));
          step_to = t;
        }
      }
      v = step_to;
      if (v == v0) break;
    }
    if (labels.find('1') == std::string::npos) continue;
    if (hole.closed) {
      // A pending match that survives a full turn forever means some shift
      // equals a or b exactly, which the closed hole forbids.
      const State& s0 = automaton.states[static_cast<std::size_t>(v0)];
      const std::size_t width = s0.a_match.size() + s0.b_match.size();
      std::vector<int> turn(width);
      for (std::size_t e = 0; e < width; ++e) turn[e] = static_cast<int>(e);
      for (std::size_t k = 0; k < cycle_states.size(); ++k) {
        const auto& from = automaton.states[static_cast<std::size_t>(cycle_states[k])];
        const auto& to = automaton.states[static_cast<std::size_t>(cycle_states[(k + 1) % cycle_states.size()])];
        const auto map = stepper.thread_map(from, labels[k], to);
        for (auto& e : turn) e = e < 0 ? -1 : map[static_cast<std::size_t>(e)];
      }
      bool persistent = false;
      for (std::size_t e = 0; e < width && !persistent; ++e) {
        int x = static_cast<int>(e);
        for (std::size_t r = 0; r <= width && x >= 0; ++r) x = turn[static_cast<std::size_t>(x)];
        persistent = x >= 0;
      }
      if (persistent) continue;
    }
    countable = Classification{SurvivorKind::CountableNonempty, path_to(v0), {Word(labels)}};
  }
  if (countable) return *countable;
  return out;
}

bool accepts(const LexAutomaton& automaton, const HoleSpec& hole, const EPSeq& x) {
  if (x.per() == Word("0")) return false;
  if (hole.closed) {
    for (std::size_t k = 0; k < x.orbit_span(); ++k) {
      const EPSeq y = x.shift(k);
      if (y == hole.a || y == hole.b) return false;
    }
  }
  const std::size_t pre = x.pre().size(), per = x.per().size();
  std::set<std::pair<int, std::size_t>> seen;
  int s = automaton.initial;
  for (std::size_t i = 0;; ++i) {
    if (s < 0 || !automaton.live[static_cast<std::size_t>(s)]) return false;
    if (i >= pre && !seen.emplace(s, (i - pre) % per).second) return true;
    s = automaton.next[static_cast<std::size_t>(s)][x.letter(i) == '1' ? 1 : 0];
  }
}

namespace {

// Necklace search for maximal rotations of least period n (the
// Fredricksen–Kessler–Maiorana recursion with 1 ordered before 0), pruned by
// the Parry automaton and by the pending hole comparisons of every shift
// started so far.
class OrbitSearch {
 public:
  OrbitSearch(const QuasiGreedyD& ctx, std::size_t n, const HoleSpec* hole, std::size_t limit)
      : ctx_(ctx), n_(static_cast<int>(n)), hole_(hole), limit_(limit), sym_(n + 1, 0), word_(n + 1, '0'),
        parry_(n + 1, 0), threads_(n + 1) {
    if (hole_) stepper_.emplace(ctx, *hole_);
  }

  std::vector<Word> run() {
    if (n_ >= 1) gen(1, 1);
    return std::move(found_);
  }

 private:
  struct Thread {
    Outcome kind;
    int offset;
  };

  bool place(int t, char c) {
    const int m = ctx_.step(parry_[static_cast<std::size_t>(t - 1)], c);
    if (m < 0) return false;
    parry_[static_cast<std::size_t>(t)] = m;
    word_[static_cast<std::size_t>(t)] = c;
    if (!stepper_) return true;
    auto& cur = threads_[static_cast<std::size_t>(t)];
    cur = threads_[static_cast<std::size_t>(t - 1)];
    cur.push_back({Outcome::A, 0});
    for (auto& th : cur) {
      Move mv{Outcome::Safe, 0};
      if (th.kind == Outcome::A) mv = stepper_->move_a(th.offset, c);
      else if (th.kind == Outcome::B) mv = stepper_->move_b(th.offset, c);
      else continue;
      if (mv.kind == Outcome::Dead) return false;
      th = {mv.kind, mv.offset};
    }
    return true;
  }

  void gen(int t, int p) {
    if (done()) return;
    if (t > n_) {
      if (p == n_) leaf();
      return;
    }
    for (int s = sym_[static_cast<std::size_t>(t - p)]; s < 2 && !done(); ++s) {
      sym_[static_cast<std::size_t>(t)] = s;
      if (!place(t, s == 0 ? '1' : '0')) continue;
      gen(t + 1, s == sym_[static_cast<std::size_t>(t - p)] ? p : t);
    }
  }

  void leaf() {
    const Word w(std::string(word_.begin() + 1, word_.end()));
    if (w == Word("0")) return;
    const EPSeq x = EPSeq::periodic(w);
    if (x > ctx_.d()) return;
    if (hole_ && !survives(x, ctx_, *hole_)) return;
    found_.push_back(w);
  }

  bool done() const { return limit_ > 0 && found_.size() >= limit_; }

  const QuasiGreedyD& ctx_;
  int n_;
  const HoleSpec* hole_;
  std::size_t limit_;
  std::optional<Stepper> stepper_;
  std::vector<int> sym_;
  std::vector<char> word_;
  std::vector<int> parry_;
  std::vector<std::vector<Thread>> threads_;
  std::vector<Word> found_;
};

}  // namespace

std::vector<Word> periodic_orbits(const QuasiGreedyD& ctx, std::size_t n, const HoleSpec* hole, std::size_t limit) {
  return OrbitSearch(ctx, n, hole, limit).run();
}

std::size_t n_beta(const QuasiGreedyD& ctx) {
  for (std::size_t n = 1; n <= 256; ++n) {
    if (periodic_orbits(ctx, n, nullptr, 2).size() >= 2) return n;
  }
  throw Error("DepthExceeded", "no period up to 256 carries two orbits");
}

std::set<std::size_t> bad_n(const QuasiGreedyD& ctx, const HoleSpec& hole, std::size_t n_max, PeriodMode mode) {
  const std::size_t first = n_beta(ctx) + 1;
  std::set<std::size_t> out;
  if (n_max < first) return out;
  std::mutex guard;
  parallel_for(n_max - first + 1, [&](std::size_t i) {
    const std::size_t n = first + i;
    bool bad = true;
    for (std::size_t k = 1; k <= n && bad; ++k) {
      if (n % k != 0 || (mode == PeriodMode::Least && k != n)) continue;
      bad = periodic_orbits(ctx, k, &hole, 1).empty();
    }
    if (bad) {
      std::lock_guard lock(guard);
      out.insert(n);
    }
  });
  return out;
}

}  // namespace betahole
