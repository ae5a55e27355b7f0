#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace lsd {

/// One element of the symbolic code. Ids are small non-negative integers;
/// chains over alphabets of at most 26 symbols display as letters A..Z.
struct Symbol {
  int id = 0;
  friend constexpr auto operator<=>(const Symbol&, const Symbol&) = default;
};

/// Record of one applied reflection: the `size` symbols ending at `position`
/// were mirrored to the right of it. `position` equals the chain length
/// before the operation.
struct ReflectionAxis {
  std::size_t position = 0;
  std::size_t size = 0;
  friend constexpr bool operator==(const ReflectionAxis&, const ReflectionAxis&) = default;
};

/// The n:m rule driving chain growth: mirror `major` trailing symbols, then
/// `minor`, alternating, major first. Requires major > minor >= 1.
struct LsdRule {
  int major = 2;
  int minor = 1;
  friend constexpr bool operator==(const LsdRule&, const LsdRule&) = default;
};

/// Throws std::invalid_argument unless rule.major > rule.minor >= 1.
void validate(const LsdRule& rule);

/// A finite symbol sequence together with the reflection axes that built it.
class Chain {
 public:
  Chain() = default;
  explicit Chain(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}

  /// Reassembles a chain with a known operation history. Throws
  /// std::invalid_argument if any axis violates the mirror property or the
  /// chain bounds.
  Chain(std::vector<Symbol> symbols, std::vector<ReflectionAxis> axes);

  /// Parses "ABCDEFG" style text, mapping A..Z to ids 0..25.
  static Chain from_string(std::string_view text);

  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
  const std::vector<ReflectionAxis>& axes() const noexcept { return axes_; }

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }

  /// Largest id + 1; 0 for an empty chain.
  int alphabet_size() const noexcept;

  /// Appends the last `k` symbols in reverse order and records the axis.
  /// k == 0 is the identity. Throws std::invalid_argument if k > size().
  void extend_with_reflection(std::size_t k);

  void reserve(std::size_t n) { symbols_.reserve(n); }

  friend bool operator==(const Chain& a, const Chain& b) {
    return a.symbols_ == b.symbols_;
  }

 private:
  std::vector<Symbol> symbols_;
  std::vector<ReflectionAxis> axes_;
};

/// Value-preserving form of Chain::extend_with_reflection.
Chain apply_reflection(const Chain& chain, std::size_t k);

/// Grows `seed` by alternating reflections of rule.major and rule.minor
/// trailing symbols (major first) until the length reaches `target_length`.
/// The final block is kept whole, so the result may overshoot the target by
/// less than rule.major symbols.
Chain generate(const Chain& seed, const LsdRule& rule, std::size_t target_length);

/// First `length` symbols of `chain`, keeping only axes whose mirrored block
/// lies entirely inside the prefix.
Chain prefix(const Chain& chain, std::size_t length);

/// Letters A..Z when the alphabet fits, space-separated decimal ids otherwise.
std::string to_string(const Chain& chain);
std::string to_string(Symbol symbol, int alphabet_size);

}  // namespace lsd
