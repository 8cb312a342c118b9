#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "braidcode/execution.hpp"
#include "braidcode/symbols.hpp"

namespace braidcode {

inline constexpr std::uint64_t kDefaultTripleBudget = 200'000'000;
inline constexpr std::uint64_t kDefaultStringBudget = 10'000'000;

/// Largest x such that the last x symbols of both strings agree.
std::size_t common_suffix_len(const SymbolString& a, const SymbolString& b);

/// Suffix distance (f + d + |f - d| - 2x) / 2 with d, f the lengths and x the
/// common suffix length; equal to max(d, f) - x.
std::int64_t distance(const SymbolString& a, const SymbolString& b);

/// Number of positions at which two equal-length strings differ.
std::int64_t hamming_distance(const SymbolString& a, const SymbolString& b);

struct AxiomReport {
  int alphabet_size = 0;
  int max_len = 0;
  std::uint64_t strings = 0;
  std::uint64_t pairs_checked = 0;    ///< ordered pairs
  std::uint64_t triples_checked = 0;  ///< ordered triples
  std::uint64_t non_negativity_violations = 0;
  std::uint64_t identity_violations = 0;  ///< d = 0 iff equal
  std::uint64_t symmetry_violations = 0;
  std::uint64_t triangle_violations = 0;
  std::vector<std::string> examples;  ///< first few violations, deterministic order

  std::uint64_t violations() const {
    return non_negativity_violations + identity_violations + symmetry_violations +
           triangle_violations;
  }
  bool pass() const { return violations() == 0; }
};

/// Brute-force metric-axiom check over every string of length <= max_len,
/// including the empty string.
AxiomReport verify_axioms(int alphabet_size, int max_len, Execution exec = Execution::Parallel,
                          std::uint64_t budget = kDefaultTripleBudget);

struct DistanceReport {
  std::map<std::int64_t, std::uint64_t> histogram;
  std::uint64_t universe = 0;  ///< strings enumerated, reference included
  std::optional<SymbolString> reference;
};

/// Histogram of distance(reference, t) over every other string t of the same
/// length.
DistanceReport distance_distribution(int alphabet_size, int length,
                                     const SymbolString& reference,
                                     Execution exec = Execution::Parallel,
                                     std::uint64_t budget = kDefaultStringBudget);

}  // namespace braidcode
