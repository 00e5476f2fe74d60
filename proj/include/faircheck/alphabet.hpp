#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace faircheck {

using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;

/// Token reserved for the hidden-action proposition and for erased letters
/// in homomorphism files.
inline constexpr std::string_view kEpsilonToken = "eps";
/// Padding letter appended to maximal words by the extension construction.
inline constexpr std::string_view kMarkerToken = "#";

/// Ordered set of letters. Symbols are indices into the declaration order,
/// which is also the order every deterministic traversal follows.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> tokens);

  std::size_t size() const noexcept { return tokens_.size(); }
  bool empty() const noexcept { return tokens_.empty(); }
  const std::string& token(Symbol s) const { return tokens_.at(s); }
  const std::vector<std::string>& tokens() const noexcept { return tokens_; }

  std::optional<Symbol> find(std::string_view token) const;
  /// Throws SymbolNotInAlphabet.
  Symbol symbol(std::string_view token) const;
  bool contains(std::string_view token) const { return find(token).has_value(); }

  /// Copy of this alphabet with the padding letter appended as last symbol.
  Alphabet with_marker() const;
  bool has_marker() const noexcept;
  std::optional<Symbol> marker() const;

  Word encode(std::span<const std::string> tokens) const;
  std::string decode(std::span<const Symbol> word) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> tokens_;
};

/// Throws AlphabetMismatch unless both alphabets are identical.
void require_same_alphabet(const Alphabet& a, const Alphabet& b, std::string_view what);

}  // namespace faircheck
