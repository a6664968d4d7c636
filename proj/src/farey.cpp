#include "betahole/farey.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>

#include "betahole/error.hpp"

namespace betahole {

Fraction::Fraction(std::int64_t p, std::int64_t q) {
  if (q <= 0 || p < 0 || p > q) {
    throw Error("InvalidFraction", std::to_string(p) + "/" + std::to_string(q) + " is not in [0,1]");
  }
  const std::int64_t g = std::gcd(p, q);
  p_ = p / g;
  q_ = q / g;
}

Fraction Fraction::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) throw Error("ParseError", "expected p/q, got \"" + std::string(text) + "\"");
  try {
    return Fraction(std::stoll(std::string(text.substr(0, slash))), std::stoll(std::string(text.substr(slash + 1))));
  } catch (const std::logic_error&) {
    throw Error("ParseError", "expected p/q, got \"" + std::string(text) + "\"");
  }
}

std::vector<Fraction> parse_fraction_list(std::string_view text) {
  std::vector<Fraction> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    if (!piece.empty()) out.push_back(Fraction::parse(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string fraction_list_string(const std::vector<Fraction>& rs) {
  std::string out;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (i) out += ",";
    out += rs[i].to_string();
  }
  return out;
}

CFrac cf(const Fraction& g) {
  CFrac out;
  std::int64_t num = g.p(), den = g.q();
  // [0; a1, ...] of p/q is the expansion of q/p.
  std::int64_t a = den, b = num;
  while (b != 0) {
    out.terms.push_back(a / b);
    const std::int64_t r = a % b;
    a = b;
    b = r;
  }
  return out;
}

Fraction cf_inverse(const CFrac& c) {
  if (c.terms.empty()) return Fraction(0, 1);
  // Evaluate from the innermost term: x = a_n, then x = a_k + 1/x.
  std::int64_t num = 1, den = 0;  // represents ∞
  for (auto it = c.terms.rbegin(); it != c.terms.rend(); ++it) {
    const std::int64_t next_num = *it * num + den;
    den = num;
    num = next_num;
  }
  return Fraction(den, num);
}

bool are_neighbours(const Fraction& x, const Fraction& y) {
  return x < y && x.q() * y.p() - x.p() * y.q() == 1;
}

Fraction mediant(const Fraction& x, const Fraction& y) {
  const auto [lo, hi] = x < y ? std::pair{x, y} : std::pair{y, x};
  if (!are_neighbours(lo, hi)) throw Error("NotNeighbours", x.to_string() + " and " + y.to_string());
  return Fraction(lo.p() + hi.p(), lo.q() + hi.q());
}

std::pair<Fraction, Fraction> farey_parents(const Fraction& g) {
  if (g.p() == 0 || g.p() == g.q()) throw Error("RootFraction", g.to_string() + " has no Farey parents");
  CFrac c = cf(g);
  CFrac shorter{{c.terms.begin(), c.terms.end() - 1}};
  CFrac decremented = c;
  decremented.terms.back() -= 1;
  Fraction x = cf_inverse(shorter), y = cf_inverse(decremented);
  if (y < x) std::swap(x, y);
  return {x, y};
}

namespace {

struct WordCache {
  std::shared_mutex mutex;
  std::map<std::pair<std::int64_t, std::int64_t>, Word> words;
};

WordCache& word_cache() {
  static WordCache cache;
  return cache;
}

}  // namespace

Word balanced_word(const Fraction& g) {
  if (g.p() == 0) return Word("0");
  if (g.p() == g.q()) return Word("1");
  auto& cache = word_cache();
  const auto key = std::pair{g.p(), g.q()};
  {
    std::shared_lock lock(cache.mutex);
    if (auto it = cache.words.find(key); it != cache.words.end()) return it->second;
  }
  Word w;
  if (g.p() == 1) {
    w = Word("1") + Word::zeros(static_cast<std::size_t>(g.q() - 1));
  } else {
    const auto [left, right] = farey_parents(g);
    w = balanced_word(right) + balanced_word(left);
  }
  std::unique_lock lock(cache.mutex);
  cache.words.emplace(key, w);
  return w;
}

Word min_shift(const Fraction& g) { return cyclic_extreme(balanced_word(g), Word(), Extreme::Min); }

BalancedPair balanced_pair(const Fraction& g) {
  const Word w = balanced_word(g);
  return {g, cyclic_extreme(w, Word("0"), Extreme::Max), cyclic_extreme(w, Word("1"), Extreme::Min)};
}

Word substitute(const Word& w, const Word& zero, const Word& one) {
  Word out;
  for (std::size_t i = 0; i < w.size(); ++i) out += w[i] == '0' ? zero : one;
  return out;
}

Word substitute(const Fraction& r, const Word& w) {
  const BalancedPair bp = balanced_pair(r);
  return substitute(w, bp.s, bp.t);
}

std::pair<Word, Word> descendant_pair(const std::vector<Fraction>& rs) {
  Word s("0"), t("1");
  for (auto it = rs.rbegin(); it != rs.rend(); ++it) {
    s = substitute(*it, s);
    t = substitute(*it, t);
  }
  return {s, t};
}

std::vector<Fraction> fractions_up_to(std::int64_t q_cap) {
  std::vector<Fraction> out;
  for (std::int64_t q = 2; q <= q_cap; ++q) {
    for (std::int64_t p = 1; p < q; ++p) {
      if (std::gcd(p, q) == 1) out.emplace_back(p, q);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace betahole
