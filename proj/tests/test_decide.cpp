#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "betahole/error.hpp"
#include "betahole/oracles.hpp"

using namespace betahole;

namespace {

EPSeq seq(const char* text) { return EPSeq::parse(text); }
QuasiGreedyD ctx(const char* d) { return QuasiGreedyD(seq(d)); }
HoleSpec hole(const char* a, const char* b, bool closed = false) { return HoleSpec(seq(a), seq(b), closed); }

std::vector<std::string> strs(const std::vector<Word>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(w.str());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("hole validation") {
  CHECK_THROWS_AS(hole("(10)", "(01)"), Error);
  CHECK(outside_hole(seq("(01)"), hole("(01)", "(10)")));
  CHECK_FALSE(outside_hole(seq("(01)"), hole("(01)", "(10)", true)));
}

TEST_CASE("maximal pair corner: only the orbit of s survives") {
  const auto c = ctx("(10)");
  const auto h = hole("(01)", "(10)");
  const auto r = decide(c, h);
  CHECK(r.kind == SurvivorKind::CountableNonempty);
  REQUIRE(r.cycles.size() == 1);
  CHECK(EPSeq(r.prefix, r.cycles[0]) == seq("(01)"));
  // The endpoints themselves are excluded from a closed hole.
  CHECK(decide(c, hole("(01)", "(10)", true)).kind == SurvivorKind::Empty);
}

TEST_CASE("a hole swallowing the shift of the b orbit leaves nothing") {
  const auto c = ctx("(10)");
  const auto h = hole("(0001)", "(10)");
  const auto automaton = build_avoider(c, h);
  CHECK(classify(automaton, c, h).kind == SurvivorKind::Empty);
  CHECK_FALSE(oracle_periodic_survivor(c, h, 14).has_value());
}

TEST_CASE("small b: survivors below inf X for the left parent block") {
  const auto c = ctx("(10)");
  // b = inf X_{1/2} itself leaves only X_{1/2}.
  CHECK(decide(c, hole("(001)", "(01)")).kind == SurvivorKind::CountableNonempty);
  // Below 0(01)^∞ the block shift of 0(01)^k, k ≥ 2, survives.
  const auto h = hole("(00001)", "(001)");
  const auto r = decide(c, h);
  CHECK(r.kind == SurvivorKind::Uncountable);
  REQUIRE(r.cycles.size() == 2);
  CHECK(verify_two_cycles(c, h, r.prefix, r.cycles[0], r.cycles[1]));
}

TEST_CASE("membership of the orbit of s") {
  const auto c = ctx("(10010000)");
  const auto h = hole("(0100)", "(1000)");
  const auto automaton = build_avoider(c, h);
  for (std::size_t k = 0; k < 4; ++k) CHECK(accepts(automaton, h, seq("(0100)").shift(k)));
  CHECK_FALSE(accepts(automaton, h, seq("(0010)").prepend(Word("1"))));
  CHECK_FALSE(accepts(automaton, h, seq("1(0)")));
}

TEST_CASE("state budget") {
  try {
    build_avoider(ctx("(10)"), hole("(00001)", "(001)"), 2);
    FAIL("expected StateBudgetExceeded");
  } catch (const Error& e) {
    CHECK(e.kind() == "StateBudgetExceeded");
  }
}

TEST_CASE("hole from real endpoints") {
  const auto c = ctx("(10)");
  const auto h = hole_from_reals(0.3, 0.6, c);
  CHECK(h.a.per() == Word("0"));
  CHECK(h.a.prefix(8) == greedy_expansion(0.3, c, 8).digits);
  try {
    hole_from_reals(1 / c.beta(), 0.9, c);
    FAIL("expected UnknownNearBoundary");
  } catch (const Error& e) {
    CHECK(e.kind() == "UnknownNearBoundary");
  }
}

TEST_CASE("periodic orbits and N_beta") {
  CHECK(strs(periodic_orbits(ctx("(10)"), 5)) == std::vector<std::string>{"10000", "10100"});
  CHECK(strs(periodic_orbits(ctx("(10)"), 2)) == std::vector<std::string>{"10"});
  CHECK(strs(periodic_orbits(ctx("(1110)"), 3)) == std::vector<std::string>{"100", "110"});
  CHECK(n_beta(ctx("(10)")) == 5);
  CHECK(n_beta(ctx("(1100)")) == 4);
  CHECK(n_beta(ctx("(1110)")) == 3);
}

TEST_CASE("periodic orbits match a necklace count") {
  // Without a hole and with d close to 1^∞ every primitive necklace except
  // 1 and 0 is admissible once 1^{k}0 fits; compare against brute force.
  const auto c = ctx("(1111110)");
  for (std::size_t n = 1; n <= 12; ++n) {
    std::size_t brute = 0;
    for (std::size_t bits = 0; bits < (std::size_t{1} << n); ++bits) {
      std::string s(n, '0');
      for (std::size_t i = 0; i < n; ++i) s[i] = (bits >> i) & 1 ? '1' : '0';
      const Word w(s);
      if (!is_primitive(w) || cyclic_extreme(w, Word(), Extreme::Max) != w || w == Word("0")) continue;
      if (EPSeq::periodic(w) <= c.d()) ++brute;
    }
    CHECK(periodic_orbits(c, n).size() == brute);
  }
}

TEST_CASE("bad n") {
  const auto g = ctx("(10)");
  CHECK(bad_n(g, hole("(01)", "(10)"), 12) == std::set<std::size_t>{6, 7, 8, 9, 10, 11, 12});
  // Below 0(01)^∞ only lengths that are not sums of 5, 7, 9, ... are bad.
  CHECK(bad_n(g, hole("(00001)", "(001)"), 12) == std::set<std::size_t>{6});
  // The exact corner (s^∞, ts^∞) for golden: every n beyond N_β is bad.
  CHECK(bad_n(g, hole("(01)", "10(01)"), 12) == std::set<std::size_t>{6, 7, 8, 9, 10, 11, 12});
  CHECK(bad_n(g, hole("(01)", "(10)"), 12, PeriodMode::Divisor) == std::set<std::size_t>{7, 9, 11});
}

TEST_CASE("property: bad n grow with the hole") {
  const auto c = ctx("(1100)");
  const auto small = hole("(0110)", "(1001)");
  const auto big = hole("(01)", "(10)");
  const auto bs = bad_n(c, small, 16), bb = bad_n(c, big, 16);
  CHECK(std::includes(bb.begin(), bb.end(), bs.begin(), bs.end()));
}

TEST_CASE("property: automaton agrees with brute force on random holes") {
  std::mt19937 rng(2024);
  std::bernoulli_distribution bit(0.5);
  auto word = [&](int lo, int hi) {
    std::string s(std::uniform_int_distribution<int>(lo, hi)(rng), '0');
    for (auto& ch : s) ch = bit(rng) ? '1' : '0';
    return Word(s);
  };
  const char* ds[] = {"(10)", "(1100)", "(10010000)", "(1110)", "(110)"};
  int seen[3] = {0, 0, 0};
  for (int trial = 0; trial < 600; ++trial) {
    const auto c = ctx(ds[trial % 5]);
    EPSeq a(word(0, 5), word(1, 5)), b(word(0, 5), word(1, 5));
    if (a == b) continue;
    if (b < a) std::swap(a, b);
    const HoleSpec h(a, b, trial % 3 == 0);
    const auto r = decide(c, h);
    const auto found = oracle_periodic_survivor(c, h, 14);
    ++seen[static_cast<int>(r.kind)];
    if (r.kind == SurvivorKind::Empty) {
      CHECK_FALSE(found.has_value());
      continue;
    }
    CHECK(found.has_value());
    if (r.kind == SurvivorKind::CountableNonempty) {
      CHECK(survives(EPSeq(r.prefix, r.cycles[0]), c, h));
    } else {
      CHECK(verify_two_cycles(c, h, r.prefix, r.cycles[0], r.cycles[1]));
    }
  }
  CHECK(seen[0] > 0);
  CHECK(seen[1] > 0);
  CHECK(seen[2] > 0);
}

TEST_CASE("property: uncountable survivor sets grow exponentially") {
  const auto c = ctx("(10)");
  const auto rich = hole("(00001)", "(001)");
  const auto thin = hole("(01)", "(10)");
  const auto r20 = count_avoiding_words(c, rich, 20, 20, 1u << 30), r40 = count_avoiding_words(c, rich, 40, 40, 1u << 30);
  const auto t20 = count_avoiding_words(c, thin, 20, 20, 1u << 30), t40 = count_avoiding_words(c, thin, 40, 40, 1u << 30);
  CHECK(r40 > 4 * r20);
  CHECK(t40 < 4 * t20);
}
