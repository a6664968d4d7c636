#pragma once

// Finite binary words and eventually periodic binary sequences.

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

namespace betahole {

/// A finite word over {0,1}. Stored as a string of '0'/'1' characters.
class Word {
 public:
  Word() = default;
  /// Throws Error("InvalidWord") on any letter outside {0,1}.
  explicit Word(std::string_view letters);

  static Word zeros(std::size_t n) { return Word(std::string(n, '0'), Trusted{}); }
  static Word ones(std::size_t n) { return Word(std::string(n, '1'), Trusted{}); }

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  char operator[](std::size_t i) const noexcept { return letters_[i]; }
  char back() const noexcept { return letters_.back(); }
  const std::string& str() const noexcept { return letters_; }

  /// Number of 1s.
  std::size_t ones_count() const noexcept;

  Word substr(std::size_t pos, std::size_t len = std::string::npos) const {
    return Word(letters_.substr(pos, len), Trusted{});
  }
  /// Cyclic rotation: letters [k..n) followed by [0..k).
  Word rotate(std::size_t k) const;
  Word pow(std::size_t k) const;
  bool starts_with(const Word& prefix) const noexcept {
    return letters_.starts_with(prefix.letters_);
  }

  Word& operator+=(const Word& other) {
    letters_ += other.letters_;
    return *this;
  }
  Word& push_back(char c);
  friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& x, const Word& y) {
    return x.letters_ <=> y.letters_;
  }

 private:
  struct Trusted {};
  Word(std::string letters, Trusted) : letters_(std::move(letters)) {}

  std::string letters_;
};

/// The primitive root of w: the shortest r with w = r^k.
Word primitive_root(const Word& w);
bool is_primitive(const Word& w);

/// True iff every two factors of equal length differ by at most one in 1-count.
bool is_balanced(const Word& w);
/// True iff w^2 is balanced.
bool is_cyclically_balanced(const Word& w);

enum class Extreme { Max, Min };

/// Lexicographically maximal (or minimal) cyclic permutation of w whose
/// infinite repetition begins with `prefix`. An empty prefix means any
/// rotation. Throws Error("NoSuchRotation") when none qualifies.
Word cyclic_extreme(const Word& w, const Word& prefix, Extreme mode);

/// Eventually periodic sequence pre·per^∞, kept in canonical form: the
/// period is primitive and the preperiod is as short as possible. Two
/// EPSeq are equal as sequences iff their canonical forms coincide.
class EPSeq {
 public:
  /// Throws Error("EmptyPeriod") when per is empty.
  EPSeq(Word pre, Word per);

  static EPSeq periodic(Word per) { return EPSeq(Word(), std::move(per)); }
  /// Parses `PRE(PER)`, e.g. "0(0001)" or "(10)".
  static EPSeq parse(std::string_view text);

  const Word& pre() const noexcept { return pre_; }
  const Word& per() const noexcept { return per_; }
  /// Number of distinct shifts: |pre| + |per|.
  std::size_t orbit_span() const noexcept { return pre_.size() + per_.size(); }

  char letter(std::size_t i) const noexcept {
    return i < pre_.size() ? pre_[i] : per_[(i - pre_.size()) % per_.size()];
  }
  /// The first n letters.
  Word prefix(std::size_t n) const;

  EPSeq shift(std::size_t n) const;
  /// w·this.
  EPSeq prepend(const Word& w) const { return EPSeq(w + pre_, per_); }

  std::string to_string() const;

  friend bool operator==(const EPSeq&, const EPSeq&) = default;
  friend std::strong_ordering operator<=>(const EPSeq& x, const EPSeq& y);

 private:
  Word pre_;
  Word per_;
};

/// Lexicographic comparison of x and y as infinite sequences.
inline std::strong_ordering compare(const EPSeq& x, const EPSeq& y) { return x <=> y; }

/// The lexicographically largest element of the shift orbit of x.
EPSeq max_shift(const EPSeq& x);

}  // namespace betahole

template <>
struct std::hash<betahole::Word> {
  std::size_t operator()(const betahole::Word& w) const noexcept {
    return std::hash<std::string>{}(w.str());
  }
};

template <>
struct std::hash<betahole::EPSeq> {
  std::size_t operator()(const betahole::EPSeq& x) const noexcept {
    return std::hash<std::string>{}(x.pre().str()) * 31 ^ std::hash<std::string>{}(x.per().str());
  }
};
