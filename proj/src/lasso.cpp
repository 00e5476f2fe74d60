#include "faircheck/lasso.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "faircheck/error.hpp"

namespace faircheck {

Symbol LassoWord::at(std::size_t i) const {
  if (i < stem.size()) return stem[i];
  return cycle[(i - stem.size()) % cycle.size()];
}

LassoWord LassoWord::normalized() const {
  if (cycle.empty()) throw Error(ErrorKind::InvalidArgument, "lasso cycle must not be empty");
  LassoWord x;
  x.stem = stem;
  const std::size_t n = cycle.size();
  std::size_t period = n;
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i) periodic = cycle[i] == cycle[i - p];
    if (periodic) {
      period = p;
      break;
    }
  }
  x.cycle.assign(cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(period));
  while (!x.stem.empty() && x.stem.back() == x.cycle.back()) {
    x.stem.pop_back();
    std::rotate(x.cycle.rbegin(), x.cycle.rbegin() + 1, x.cycle.rend());
  }
  return x;
}

bool LassoWord::same_word(const LassoWord& other) const {
  return normalized() == other.normalized();
}

std::string format_lasso(const LassoWord& x, const Alphabet& alphabet) {
  return alphabet.decode(x.stem) + ";" + alphabet.decode(x.cycle);
}

namespace {

std::vector<std::string> split_tokens(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

}  // namespace

LassoWord parse_lasso(std::string_view text, const Alphabet& alphabet) {
  auto semi = text.find(';');
  if (semi == std::string_view::npos || text.find(';', semi + 1) != std::string_view::npos)
    throw Error(ErrorKind::Syntax, "lasso must have the form 'stem;cycle'");
  auto stem = split_tokens(text.substr(0, semi));
  auto cycle = split_tokens(text.substr(semi + 1));
  if (cycle.empty()) throw Error(ErrorKind::Syntax, "lasso cycle must not be empty");
  return LassoWord{alphabet.encode(stem), alphabet.encode(cycle)};
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  std::int64_t g = std::gcd(numerator, denominator);
  if (g == 0) g = 1;
  num_ = numerator / g;
  den_ = denominator / g;
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  // Denominators are positive, so cross multiplication keeps the order.
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

Rational cantor_distance(const LassoWord& x, const LassoWord& y) {
  LassoWord nx = x.normalized();
  LassoWord ny = y.normalized();
  if (nx == ny) return Rational(0);
  // Two distinct lassos differ before stem + lcm(cycle lengths) letters.
  std::size_t bound = std::max(nx.stem.size(), ny.stem.size()) +
                      std::lcm(nx.cycle.size(), ny.cycle.size());
  for (std::size_t i = 0; i < bound; ++i)
    if (nx.at(i) != ny.at(i)) return Rational(1, static_cast<std::int64_t>(i) + 1);
  throw Error(ErrorKind::InvalidArgument, "normal forms differ but words agree");
}

}  // namespace faircheck
