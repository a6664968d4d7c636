#include "betahole/beta_shift.hpp"

#include <cmath>
#include <set>
#include <utility>
#include <vector>

#include "betahole/error.hpp"

namespace betahole {
namespace {

// Σ_{i≥1} x_i t^i for t = 1/β, using the geometric tail for the period.
long double series(const EPSeq& x, long double t) {
  long double head = 0, power = 1;
  for (std::size_t i = 0; i < x.pre().size(); ++i) {
    power *= t;
    if (x.pre()[i] == '1') head += power;
  }
  long double cycle = 0, cpow = 1;
  for (std::size_t i = 0; i < x.per().size(); ++i) {
    cpow *= t;
    if (x.per()[i] == '1') cycle += cpow;
  }
  return head + power * cycle / (1 - cpow);
}

int parry_n(const EPSeq& d) {
  for (int n = 1;; ++n) {
    if (EPSeq::periodic(Word("1") + Word::zeros(n)) <= d) return n;
  }
}

}  // namespace

EPSeq quasi_greedy_from_greedy(const Word& greedy) {
  if (greedy.empty() || greedy.back() != '1') {
    throw Error("InvalidExpansion", "greedy expansion must end in 1: " + greedy.str());
  }
  Word per = greedy.substr(0, greedy.size() - 1);
  per.push_back('0');
  if (per.ones_count() == 0) throw Error("DegenerateBeta", "greedy expansion " + greedy.str() + " gives β ≤ 1");
  return EPSeq::periodic(per);
}

bool validate_parry(const EPSeq& d) {
  if (d.letter(0) != '1') return false;
  for (std::size_t k = 1; k < d.orbit_span(); ++k) {
    if (d.shift(k) > d) return false;
  }
  return true;
}

QuasiGreedyD::QuasiGreedyD(EPSeq d, double tol) : d_(std::move(d)), beta_(0), n_(0) {
  if (!validate_parry(d_)) throw Error("InvalidExpansion", d_.to_string() + " is not shift-maximal starting with 1");
  if (d_.per().ones_count() == 0) throw Error("InvalidExpansion", d_.to_string() + " ends in 0^∞");
  if (d_ == EPSeq::periodic(Word("1"))) throw Error("InvalidExpansion", "1^∞ corresponds to β = 2");
  beta_ = beta_from_d(d_, tol);
  n_ = parry_n(d_);
}

QuasiGreedyD QuasiGreedyD::from_greedy(const Word& greedy, double tol) {
  return QuasiGreedyD(quasi_greedy_from_greedy(greedy), tol);
}

int QuasiGreedyD::step(int state, char c) const noexcept {
  const char next = d_.letter(static_cast<std::size_t>(state));
  if (c < next) return 0;
  if (c > next) return -1;
  const int span = state_count();
  const int m = state + 1;
  return m == span ? m - static_cast<int>(d_.per().size()) : m;
}

// Runs the Parry automaton over the preperiod and then over whole periods
// until the state at a period boundary repeats.
bool is_admissible(const EPSeq& x, const QuasiGreedyD& ctx) {
  int state = 0;
  for (std::size_t i = 0; i < x.pre().size(); ++i) {
    state = ctx.step(state, x.pre()[i]);
    if (state < 0) return false;
  }
  std::vector<bool> seen(static_cast<std::size_t>(ctx.state_count()) + 1, false);
  while (!seen[static_cast<std::size_t>(state)]) {
    seen[static_cast<std::size_t>(state)] = true;
    for (std::size_t i = 0; i < x.per().size(); ++i) {
      state = ctx.step(state, x.per()[i]);
      if (state < 0) return false;
    }
  }
  return true;
}

bool is_admissible_prefix(const Word& w, const QuasiGreedyD& ctx) {
  int state = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    state = ctx.step(state, w[i]);
    if (state < 0) return false;
  }
  return true;
}

double beta_from_d(const EPSeq& d, double tol) {
  auto f = [&](long double x) { return series(d, 1 / x); };
  long double lo = 1, hi = 2;
  if (f(hi) >= 1) throw Error("NoRoot", "series at β = 2 does not fall below 1 for " + d.to_string());
  while (hi - lo > tol) {
    const long double mid = (lo + hi) / 2;
    if (f(mid) > 1) lo = mid;
    else hi = mid;
  }
  return static_cast<double>((lo + hi) / 2);
}

double eval_point(const EPSeq& x, double beta) {
  return static_cast<double>(series(x, 1 / static_cast<long double>(beta)));
}

EPSeq finite_word_point(const Word& w, const QuasiGreedyD& ctx) {
  std::size_t end = w.size();
  while (end > 0 && w[end - 1] == '0') --end;
  if (end == 0) return EPSeq::periodic(Word("0"));
  Word u = w.substr(0, end - 1);
  u.push_back('0');
  return ctx.d().prepend(u);
}

GreedyDigits greedy_expansion(double x, const QuasiGreedyD& ctx, std::size_t depth) {
  if (!(x >= 0 && x < 1)) throw Error("OutOfRange", "greedy expansion needs x in [0,1)");
  GreedyDigits out;
  const long double beta = ctx.beta();
  long double y = x;
  std::string digits;
  for (std::size_t i = 0; i < depth; ++i) {
    const long double z = beta * y;
    // Within the guard band the digit is ambiguous; the larger digit is the
    // greedy choice for the exact point, so snap upwards and flag it.
    const bool near = std::fabs(static_cast<double>(z - 1)) < 1e-12 && y != 0;
    if (near) out.unreliable = true;
    if (z >= 1 || near) {
      digits.push_back('1');
      y = z > 1 ? z - 1 : 0;
    } else {
      digits.push_back('0');
      y = z;
    }
  }
  out.digits = Word(digits);
  return out;
}

// Walk the Parry automaton along the target. If it never rejects, the target
// is admissible. Otherwise the first rejected letter is a 1; lowering it to 0
// is the latest possible deviation below the target, and the largest
// admissible continuation from the resulting state m is σ^m d.
EPSeq max_admissible_below(const EPSeq& target, const QuasiGreedyD& ctx) {
  if (target <= EPSeq::periodic(Word("0"))) {
    throw Error("NoAdmissiblePoint", "no admissible point below " + target.to_string());
  }
  const std::size_t pre = target.pre().size(), per = target.per().size();
  std::set<std::pair<int, std::size_t>> seen;
  int state = 0;
  std::string prefix;
  for (std::size_t i = 0;; ++i) {
    if (i >= pre) {
      const std::size_t phase = (i - pre) % per;
      if (!seen.emplace(state, phase).second) return target;
    }
    const char c = target.letter(i);
    const int next = ctx.step(state, c);
    if (next < 0) {
      const int lowered = ctx.step(state, '0');
      prefix.push_back('0');
      const EPSeq tail = ctx.d().shift(static_cast<std::size_t>(lowered));
      return EPSeq(Word(prefix) + tail.pre(), tail.per());
    }
    prefix.push_back(c);
    state = next;
  }
}

std::optional<Word> finite_form(const EPSeq& y, const QuasiGreedyD& ctx) {
  for (std::size_t k = 1; k <= y.orbit_span() + ctx.d().orbit_span(); ++k) {
    if (y.letter(k - 1) == '0' && y.shift(k) == ctx.d()) {
      Word u = y.prefix(k - 1);
      u.push_back('1');
      return u;
    }
  }
  return std::nullopt;
}

}  // namespace betahole
