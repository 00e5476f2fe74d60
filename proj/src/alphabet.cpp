#include "faircheck/alphabet.hpp"

#include <algorithm>

#include "faircheck/error.hpp"

namespace faircheck {

Alphabet::Alphabet(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
  if (tokens_.empty()) throw Error(ErrorKind::InvalidArgument, "alphabet must not be empty");
  for (std::size_t i = 0; i < tokens_.size(); ++i) {
    const std::string& t = tokens_[i];
    if (t.empty()) throw Error(ErrorKind::InvalidArgument, "empty alphabet token");
    if (t == kEpsilonToken || t == kMarkerToken)
      throw Error(ErrorKind::InvalidArgument, "reserved token '" + t + "' in alphabet");
    if (std::find(tokens_.begin(), tokens_.begin() + i, t) != tokens_.begin() + i)
      throw Error(ErrorKind::InvalidArgument, "duplicate alphabet token '" + t + "'");
  }
}

std::optional<Symbol> Alphabet::find(std::string_view token) const {
  auto it = std::find(tokens_.begin(), tokens_.end(), token);
  if (it == tokens_.end()) return std::nullopt;
  return static_cast<Symbol>(it - tokens_.begin());
}

Symbol Alphabet::symbol(std::string_view token) const {
  if (auto s = find(token)) return *s;
  throw Error(ErrorKind::SymbolNotInAlphabet, "symbol '" + std::string(token) + "' not in alphabet");
}

Alphabet Alphabet::with_marker() const {
  if (has_marker()) throw Error(ErrorKind::InvalidArgument, "alphabet already extended");
  Alphabet result = *this;
  result.tokens_.emplace_back(kMarkerToken);
  return result;
}

bool Alphabet::has_marker() const noexcept {
  return !tokens_.empty() && tokens_.back() == kMarkerToken;
}

std::optional<Symbol> Alphabet::marker() const {
  if (!has_marker()) return std::nullopt;
  return static_cast<Symbol>(tokens_.size() - 1);
}

Word Alphabet::encode(std::span<const std::string> tokens) const {
  Word w;
  w.reserve(tokens.size());
  for (const auto& t : tokens) w.push_back(symbol(t));
  return w;
}

std::string Alphabet::decode(std::span<const Symbol> word) const {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += token(word[i]);
  }
  return out;
}

void require_same_alphabet(const Alphabet& a, const Alphabet& b, std::string_view what) {
  if (!(a == b))
    throw Error(ErrorKind::AlphabetMismatch, std::string(what) + ": alphabets differ");
}

}  // namespace faircheck
