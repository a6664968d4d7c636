#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "betahole/beta_shift.hpp"
#include "betahole/error.hpp"

using namespace betahole;

namespace {

EPSeq seq(const char* text) { return EPSeq::parse(text); }

std::string kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return "";
}

}  // namespace

TEST_CASE("quasi-greedy expansion of 1 from a finite greedy one") {
  CHECK(quasi_greedy_from_greedy(Word("11")) == seq("(10)"));
  CHECK(quasi_greedy_from_greedy(Word("101")) == seq("(100)"));
  CHECK(kind_of([] { quasi_greedy_from_greedy(Word("1")); }) == "DegenerateBeta");
}

TEST_CASE("Parry condition") {
  CHECK(validate_parry(seq("(10)")));
  CHECK(validate_parry(seq("(10010000)")));
  CHECK_FALSE(validate_parry(seq("(1011)")));
  CHECK(kind_of([] { QuasiGreedyD(seq("(1011)")); }) == "InvalidExpansion");
  CHECK(kind_of([] { QuasiGreedyD(seq("1(0)")); }) == "InvalidExpansion");
  CHECK(kind_of([] { QuasiGreedyD(seq("(1)")); }) == "InvalidExpansion");
}

TEST_CASE("admissibility") {
  const QuasiGreedyD golden(seq("(10)"));
  const QuasiGreedyD trunc(seq("(10010000)"));
  CHECK_FALSE(is_admissible(seq("(1100)"), golden));
  CHECK(is_admissible(seq("(1000)"), trunc));
  CHECK_FALSE(is_admissible(seq("100(1000)"), trunc));
  CHECK(is_admissible_prefix(Word("10100"), golden));
  CHECK_FALSE(is_admissible_prefix(Word("0110"), golden));
}

TEST_CASE("beta from d") {
  CHECK(std::fabs(beta_from_d(seq("(10)")) - (1 + std::sqrt(5.0)) / 2) < 1e-9);
  CHECK(std::fabs(beta_from_d(seq("(10010000)")) - 1.427) < 5e-4);
  CHECK(std::fabs(beta_from_d(seq("(1100)")) - 1.755) < 5e-4);
  CHECK(QuasiGreedyD::from_greedy(Word("11")).d() == seq("(10)"));
}

TEST_CASE("n prefix") {
  CHECK(QuasiGreedyD(seq("(10)")).n_prefix() == 1);
  CHECK(QuasiGreedyD(seq("(1100)")).n_prefix() == 1);
  CHECK(QuasiGreedyD(seq("(10010000)")).n_prefix() == 3);
}

TEST_CASE("eval_point") {
  const QuasiGreedyD ctx(seq("(10010000)"));
  CHECK(std::fabs(eval_point(ctx.d(), ctx) - 1.0) < 1e-9);
  CHECK(eval_point(seq("(0)"), ctx) == 0.0);
  CHECK(std::fabs(eval_point(ctx.d().prepend(Word("0")), ctx) - 1 / ctx.beta()) < 1e-9);
}

TEST_CASE("greedy expansion") {
  const QuasiGreedyD golden(seq("(10)"));
  CHECK(greedy_expansion(0.0, golden, 8).digits == Word("00000000"));
  CHECK(greedy_expansion(0.5, golden, 10).digits == Word("0100100100"));
  const auto inv = greedy_expansion(1 / golden.beta(), golden, 6);
  CHECK(inv.digits.substr(0, 1) == Word("1"));
  CHECK(kind_of([&] { greedy_expansion(1.0, golden, 3); }) == "OutOfRange");
}

TEST_CASE("greatest admissible sequence below a target") {
  const QuasiGreedyD ctx(seq("(10010000)"));
  const EPSeq t1 = max_admissible_below(seq("0100(1000)"), ctx);
  CHECK(t1 == seq("0(10010000)"));
  CHECK(finite_form(t1, ctx) == Word("1"));
  const EPSeq t2 = max_admissible_below(seq("000010001001(000100010010)"), ctx);
  CHECK(t2 == seq("00001000(10010000)"));
  CHECK(finite_form(t2, ctx) == Word("00001001"));
  CHECK(max_admissible_below(ctx.d(), ctx) == ctx.d());
  CHECK(kind_of([&] { max_admissible_below(seq("(0)"), ctx); }) == "NoAdmissiblePoint");
}

TEST_CASE("property: greedy digits round trip") {
  const QuasiGreedyD ctx(seq("(1100)"));
  std::mt19937 rng(17);
  std::bernoulli_distribution bit(0.5);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    std::string pre, per;
    for (int i = 0; i < 4; ++i) pre.push_back(bit(rng) ? '1' : '0');
    for (int i = 0; i < 5; ++i) per.push_back(bit(rng) ? '1' : '0');
    if (per.find('1') == std::string::npos) continue;
    const EPSeq x{Word(pre), Word(per)};
    if (!is_admissible(x, ctx)) continue;
    const auto g = greedy_expansion(eval_point(x, ctx), ctx, 20);
    if (g.unreliable) continue;
    CHECK(g.digits == x.prefix(20));
    ++checked;
  }
  CHECK(checked > 30);
}

TEST_CASE("property: order embedding and monotone beta") {
  const QuasiGreedyD ctx(seq("(10010000)"));
  std::mt19937 rng(23);
  std::bernoulli_distribution bit(0.3);
  std::vector<EPSeq> xs;
  while (xs.size() < 60) {
    std::string pre, per;
    for (int i = 0; i < 3; ++i) pre.push_back(bit(rng) ? '1' : '0');
    for (int i = 0; i < 6; ++i) per.push_back(bit(rng) ? '1' : '0');
    const EPSeq x{Word(pre), Word(per)};
    if (is_admissible(x, ctx)) xs.push_back(x);
  }
  for (const auto& x : xs) {
    for (const auto& y : xs) {
      if (x < y) CHECK(eval_point(x, ctx) <= eval_point(y, ctx) + 1e-12);
    }
  }
  CHECK(beta_from_d(seq("(10010000)")) < beta_from_d(seq("(10)")));
  CHECK(beta_from_d(seq("(10)")) < beta_from_d(seq("(1100)")));
}

TEST_CASE("property: truncation is admissible, below target, and tight") {
  const QuasiGreedyD ctx(seq("(1100)"));
  std::mt19937 rng(29);
  std::bernoulli_distribution bit(0.5);
  for (int trial = 0; trial < 150; ++trial) {
    std::string pre, per;
    for (int i = 0; i < 3; ++i) pre.push_back(bit(rng) ? '1' : '0');
    for (int i = 0; i < 4; ++i) per.push_back(bit(rng) ? '1' : '0');
    const EPSeq target{Word(pre), Word(per)};
    if (target <= seq("(0)")) continue;
    const EPSeq y = max_admissible_below(target, ctx);
    CHECK(is_admissible(y, ctx));
    CHECK(y <= target);
    // No admissible sequence with small representation lies strictly between.
    for (int a = 0; a < 64; ++a) {
      for (int b = 1; b < 16; ++b) {
        std::string p2, q2;
        for (int i = 0; i < 6; ++i) p2.push_back((a >> i) & 1 ? '1' : '0');
        for (int i = 0; i < 4; ++i) q2.push_back((b >> i) & 1 ? '1' : '0');
        const EPSeq z{Word(p2), Word(q2)};
        if (y < z && z <= target) CHECK_FALSE(is_admissible(z, ctx));
      }
    }
  }
}
