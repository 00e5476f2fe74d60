#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "faircheck/alphabet.hpp"

namespace faircheck {

/// Ultimately periodic omega-word stem . cycle^omega.
struct LassoWord {
  Word stem;
  Word cycle;  // never empty

  std::size_t size() const noexcept { return stem.size() + cycle.size(); }
  /// Letter at 0-based position i of the infinite word.
  Symbol at(std::size_t i) const;

  /// Unique representative of the denoted omega-word: the cycle is reduced
  /// to its primitive root and the stem is shortened as far as possible by
  /// rotating trailing stem letters into the cycle.
  LassoWord normalized() const;

  /// Denote the same omega-word.
  bool same_word(const LassoWord& other) const;

  friend bool operator==(const LassoWord&, const LassoWord&) = default;
  friend auto operator<=>(const LassoWord&, const LassoWord&) = default;
};

/// "stem;cycle" with space separated tokens, e.g. "lock;request no reject".
std::string format_lasso(const LassoWord& x, const Alphabet& alphabet);
LassoWord parse_lasso(std::string_view text, const Alphabet& alphabet);

class Rational {
 public:
  Rational(std::int64_t numerator = 0, std::int64_t denominator = 1);

  std::int64_t numerator() const noexcept { return num_; }
  std::int64_t denominator() const noexcept { return den_; }
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::int64_t num_;
  std::int64_t den_;
};

/// Cantor metric: 0 for equal words, else 1/(|longest common prefix| + 1).
Rational cantor_distance(const LassoWord& x, const LassoWord& y);

}  // namespace faircheck
