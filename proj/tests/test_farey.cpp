#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "betahole/error.hpp"
#include "betahole/farey.hpp"

using namespace betahole;

namespace {

Fraction F(std::int64_t p, std::int64_t q) { return Fraction(p, q); }

}  // namespace

TEST_CASE("fractions reduce and parse") {
  CHECK(F(2, 4) == F(1, 2));
  CHECK(Fraction::parse("3/11") == F(3, 11));
  CHECK_THROWS_AS(F(3, 2), Error);
  CHECK_THROWS_AS(Fraction::parse("x"), Error);
  CHECK(parse_fraction_list("1/4,1/2") == std::vector{F(1, 4), F(1, 2)});
  CHECK(fraction_list_string({F(1, 4), F(1, 2)}) == "1/4,1/2");
}

TEST_CASE("mediant") {
  CHECK(mediant(F(1, 3), F(1, 2)) == F(2, 5));
  CHECK(mediant(F(0, 1), F(1, 1)) == F(1, 2));
  CHECK(mediant(F(1, 4), F(1, 3)) == F(2, 7));
  CHECK_THROWS_AS(mediant(F(1, 4), F(1, 2)), Error);
}

TEST_CASE("Farey parents") {
  CHECK(farey_parents(F(2, 5)) == std::pair{F(1, 3), F(1, 2)});
  CHECK(farey_parents(F(1, 2)) == std::pair{F(0, 1), F(1, 1)});
  CHECK(farey_parents(F(3, 11)) == std::pair{F(1, 4), F(2, 7)});
  CHECK_THROWS_AS(farey_parents(F(1, 1)), Error);
}

TEST_CASE("continued fractions") {
  CHECK(cf(F(2, 7)).terms == std::vector<std::int64_t>{3, 2});
  CHECK(cf(F(3, 11)).terms == std::vector<std::int64_t>{3, 1, 2});
  CHECK(cf(F(1, 2)).terms == std::vector<std::int64_t>{2});
  CHECK(cf(F(1, 1)).terms == std::vector<std::int64_t>{1});
  CHECK(cf(F(0, 1)).terms.empty());
  CHECK(cf_inverse(CFrac{{1, 1, 3}}) == F(4, 7));
  for (const auto& g : fractions_up_to(40)) CHECK(cf_inverse(cf(g)) == g);
}

TEST_CASE("balanced words of the Farey tree") {
  CHECK(balanced_word(F(1, 2)) == Word("10"));
  CHECK(balanced_word(F(1, 3)) == Word("100"));
  CHECK(balanced_word(F(2, 3)) == Word("110"));
  CHECK(balanced_word(F(2, 5)) == Word("10100"));
  CHECK(balanced_word(F(3, 5)) == Word("11010"));
  CHECK(min_shift(F(2, 7)) == Word("0001001"));
  CHECK(min_shift(F(1, 2)) == Word("01"));
  CHECK(min_shift(F(2, 5)) == Word("00101"));
}

TEST_CASE("balanced pairs and substitutions") {
  const auto p25 = balanced_pair(F(2, 5));
  CHECK(p25.s == Word("01010"));
  CHECK(p25.t == Word("10010"));
  CHECK(balanced_pair(F(1, 2)).s == Word("01"));
  CHECK(balanced_pair(F(1, 2)).t == Word("10"));
  CHECK(balanced_pair(F(1, 4)).s == Word("0100"));
  CHECK(balanced_pair(F(1, 4)).t == Word("1000"));
  CHECK(substitute(F(2, 5), Word("01")) == Word("0101010010"));
  CHECK(substitute(F(2, 5), Word("10")) == Word("1001001010"));
  CHECK(substitute(F(1, 4), Word("0")) == Word("0100"));
  CHECK(descendant_pair({F(1, 4), F(1, 2)}) == std::pair{Word("01001000"), Word("10000100")});
  CHECK(descendant_pair({F(2, 5), F(1, 2)}) == std::pair{Word("0101010010"), Word("1001001010")});
  CHECK(descendant_pair({F(3, 7)}) == std::pair{balanced_pair(F(3, 7)).s, balanced_pair(F(3, 7)).t});
}

TEST_CASE("property: tree words are balanced and maximal") {
  for (const auto& g : fractions_up_to(50)) {
    const Word w = balanced_word(g);
    CHECK(is_cyclically_balanced(w));
    CHECK(static_cast<std::int64_t>(w.size()) == g.q());
    CHECK(static_cast<std::int64_t>(w.ones_count()) == g.p());
    CHECK(w == cyclic_extreme(w, Word(), Extreme::Max));
  }
}

TEST_CASE("property: tree words increase with gamma") {
  const auto gs = fractions_up_to(30);
  for (std::size_t i = 0; i + 1 < gs.size(); ++i) {
    CHECK(EPSeq::periodic(balanced_word(gs[i])) < EPSeq::periodic(balanced_word(gs[i + 1])));
  }
}

TEST_CASE("property: balanced pair intervals are disjoint") {
  const auto gs = fractions_up_to(30);
  std::vector<std::pair<EPSeq, EPSeq>> ivs;
  for (const auto& g : gs) {
    const auto bp = balanced_pair(g);
    ivs.emplace_back(EPSeq::periodic(bp.s), EPSeq(bp.s, bp.t));
  }
  for (std::size_t i = 0; i < ivs.size(); ++i) {
    for (std::size_t j = i + 1; j < ivs.size(); ++j) {
      const bool apart = ivs[i].second < ivs[j].first || ivs[j].second < ivs[i].first;
      CHECK(apart);
    }
  }
}

TEST_CASE("property: mediant of parents") {
  for (std::int64_t q = 2; q <= 400; ++q) {
    for (std::int64_t p = 1; p < q; p += 1 + q / 37) {
      if (std::gcd(p, q) != 1) continue;
      const Fraction g(p, q);
      const auto [l, r] = farey_parents(g);
      CHECK(mediant(l, r) == g);
    }
  }
  for (std::int64_t q : {9973, 10000}) {
    const Fraction g(q == 10000 ? 7919 : 1234, q);
    const auto [l, r] = farey_parents(g);
    CHECK(mediant(l, r) == g);
  }
}
