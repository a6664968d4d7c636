#include "betahole/words.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "betahole/error.hpp"

namespace betahole {

Word::Word(std::string_view letters) : letters_(letters) {
  for (char c : letters_) {
    if (c != '0' && c != '1') {
      throw Error("InvalidWord", "letter '" + std::string(1, c) + "' in \"" + letters_ + "\"");
    }
  }
}

std::size_t Word::ones_count() const noexcept {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), '1'));
}

Word Word::rotate(std::size_t k) const {
  if (letters_.empty()) return *this;
  k %= letters_.size();
  return Word(letters_.substr(k) + letters_.substr(0, k), Trusted{});
}

Word Word::pow(std::size_t k) const {
  std::string out;
  out.reserve(letters_.size() * k);
  for (std::size_t i = 0; i < k; ++i) out += letters_;
  return Word(std::move(out), Trusted{});
}

Word& Word::push_back(char c) {
  if (c != '0' && c != '1') throw Error("InvalidWord", "letter '" + std::string(1, c) + "'");
  letters_.push_back(c);
  return *this;
}

Word primitive_root(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (std::size_t i = p; i < n && ok; ++i) ok = w[i] == w[i - p];
    if (ok) return w.substr(0, p);
  }
  return w;
}

bool is_primitive(const Word& w) { return primitive_root(w).size() == w.size(); }

bool is_balanced(const Word& w) {
  const std::size_t n = w.size();
  std::vector<std::size_t> ones(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) ones[i + 1] = ones[i] + (w[i] == '1');
  for (std::size_t len = 1; len < n; ++len) {
    std::size_t lo = n, hi = 0;
    for (std::size_t i = 0; i + len <= n; ++i) {
      const std::size_t c = ones[i + len] - ones[i];
      lo = std::min(lo, c);
      hi = std::max(hi, c);
    }
    if (hi - lo > 1) return false;
  }
  return true;
}

bool is_cyclically_balanced(const Word& w) { return is_balanced(w + w); }

Word cyclic_extreme(const Word& w, const Word& prefix, Extreme mode) {
  const std::size_t n = w.size();
  std::optional<Word> best;
  for (std::size_t k = 0; k < n; ++k) {
    bool match = true;
    for (std::size_t i = 0; i < prefix.size() && match; ++i) match = prefix[i] == w[(k + i) % n];
    if (!match) continue;
    Word rot = w.rotate(k);
    if (!best || (mode == Extreme::Max ? rot > *best : rot < *best)) best = std::move(rot);
  }
  if (!best) throw Error("NoSuchRotation", "no rotation of " + w.str() + " begins with " + prefix.str());
  return *best;
}

EPSeq::EPSeq(Word pre, Word per) : pre_(std::move(pre)), per_(primitive_root(per)) {
  if (per_.empty()) throw Error("EmptyPeriod", "eventually periodic sequence needs a period");
  // Absorb trailing preperiod letters into the period by rotating it.
  std::size_t drop = 0;
  const std::size_t p = per_.size();
  std::size_t last = p - 1;
  while (drop < pre_.size() && pre_[pre_.size() - 1 - drop] == per_[last]) {
    ++drop;
    last = (last + p - 1) % p;
  }
  if (drop > 0) {
    pre_ = pre_.substr(0, pre_.size() - drop);
    per_ = per_.rotate(p - drop % p);
  }
}

EPSeq EPSeq::parse(std::string_view text) {
  const auto open = text.find('(');
  const auto close = text.rfind(')');
  if (open == std::string_view::npos || close != text.size() - 1 || close < open) {
    throw Error("ParseError", "expected PRE(PER), got \"" + std::string(text) + "\"");
  }
  return EPSeq(Word(text.substr(0, open)), Word(text.substr(open + 1, close - open - 1)));
}

Word EPSeq::prefix(std::size_t n) const {
  std::string out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(letter(i));
  return Word(out);
}

EPSeq EPSeq::shift(std::size_t n) const {
  if (n <= pre_.size()) return EPSeq(pre_.substr(n), per_);
  return EPSeq(Word(), per_.rotate((n - pre_.size()) % per_.size()));
}

std::string EPSeq::to_string() const { return pre_.str() + "(" + per_.str() + ")"; }

// Past index max(|pre_x|, |pre_y|) both sequences are purely periodic, and
// two periodic tails agreeing on lcm(|per_x|, |per_y|) letters agree forever.
// The horizon |pre_x| + |pre_y| + lcm therefore decides the order.
std::strong_ordering operator<=>(const EPSeq& x, const EPSeq& y) {
  if (x.pre_ == y.pre_ && x.per_ == y.per_) return std::strong_ordering::equal;
  const std::size_t horizon =
      x.pre_.size() + y.pre_.size() + std::lcm(x.per_.size(), y.per_.size());
  for (std::size_t i = 0; i < horizon; ++i) {
    const char a = x.letter(i), b = y.letter(i);
    if (a != b) return a < b ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;  // unreachable for canonical inputs
}

EPSeq max_shift(const EPSeq& x) {
  EPSeq best = x;
  for (std::size_t k = 1; k < x.orbit_span(); ++k) {
    EPSeq s = x.shift(k);
    if (s > best) best = std::move(s);
  }
  return best;
}

}  // namespace betahole
