#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace braidcode {

/// A finite sequence of symbols drawn from {0, ..., alphabet_size - 1}.
class SymbolString {
 public:
  /// Empty string over an alphabet of `alphabet_size` symbols (>= 1).
  explicit SymbolString(int alphabet_size);
  /// Throws ValidationError if a symbol is out of range.
  SymbolString(int alphabet_size, std::vector<int> symbols);
  SymbolString(int alphabet_size, std::initializer_list<int> symbols)
      : SymbolString(alphabet_size, std::vector<int>(symbols)) {}

  int alphabet_size() const { return alphabet_size_; }
  std::span<const int> symbols() const { return symbols_; }
  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  int operator[](std::size_t k) const { return symbols_[k]; }

  SymbolString reversed() const;
  SymbolString appended(int symbol) const;

  friend bool operator==(const SymbolString&, const SymbolString&) = default;

 private:
  int alphabet_size_;
  std::vector<int> symbols_;
};

/// Number of strings of length in [min_len, max_len], saturating at UINT64_MAX.
std::uint64_t count_strings(int alphabet_size, int min_len, int max_len);

/// All strings with length in [min_len, max_len], shortest first, then
/// lexicographic. Throws ResourceError when the count exceeds `budget`.
std::vector<SymbolString> enumerate_strings(int alphabet_size, int min_len, int max_len,
                                            std::uint64_t budget);

}  // namespace braidcode
