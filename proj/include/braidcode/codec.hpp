#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "braidcode/braid_word.hpp"
#include "braidcode/execution.hpp"
#include "braidcode/symbols.hpp"

namespace braidcode {

inline constexpr std::uint64_t kDefaultDecodeBudget = 1'000'000;
inline constexpr std::uint64_t kDefaultPairBudget = 5'000'000;

/// An N-symbol alphabet carried by pure generators on N+1 strands. Every
/// generator meets the distinguished strand N+1; symbol k maps to
/// l_{N-k, N+1}, so symbol 0 is l_{N,N+1} and symbol N-1 is l_{1,N+1}.
class CodeScheme {
 public:
  /// Throws ValidationError for N < 2.
  explicit CodeScheme(int alphabet_size);

  int alphabet_size() const { return alphabet_size_; }
  int strands() const { return alphabet_size_ + 1; }
  int distinguished() const { return alphabet_size_ + 1; }
  PureGeneratorId generator(int symbol) const;
  /// Expanded generator word for `symbol`.
  const BraidWord& generator_word(int symbol) const;

 private:
  int alphabet_size_;
  std::vector<BraidWord> words_;
};

inline CodeScheme make_scheme(int alphabet_size) { return CodeScheme(alphabet_size); }

/// Concatenation of the symbols' generator words, first symbol leftmost.
BraidWord encode(const CodeScheme& scheme, const SymbolString& s);

/// The decoding string S^-1: generators of the reversed sequence, each
/// inverted. Equal to invert(encode(scheme, s)).
BraidWord inverse_string(const CodeScheme& scheme, const SymbolString& s);

/// Whether S * S^-1 is trivial in the braid group.
bool verify_roundtrip(const CodeScheme& scheme, const SymbolString& s);

/// Shortest-then-lexicographically-first string of length <= max_len whose
/// encoding is equivalent to `w`, or nullopt. Throws ResourceError when the
/// candidate count exceeds `budget`.
std::optional<SymbolString> decode_exhaustive(const CodeScheme& scheme, const BraidWord& w,
                                              int max_len,
                                              std::uint64_t budget = kDefaultDecodeBudget);

struct InjectivityReport {
  int alphabet_size = 0;
  int max_len = 0;
  std::uint64_t strings = 0;  ///< nonempty strings of length <= max_len
  std::uint64_t pairs = 0;    ///< unordered pairs compared
  std::vector<std::pair<SymbolString, SymbolString>> collisions;

  bool pass() const { return collisions.empty(); }
};

/// Checks that all distinct nonempty strings of length <= max_len encode to
/// pairwise non-equivalent braids. Throws ResourceError when the pair count
/// exceeds `budget`.
InjectivityReport injectivity_check(const CodeScheme& scheme, int max_len,
                                    Execution exec = Execution::Parallel,
                                    std::uint64_t budget = kDefaultPairBudget);

}  // namespace braidcode
