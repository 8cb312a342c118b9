#include <string>

#include "braidcode/errors.hpp"
#include "braidcode/symbols.hpp"
#include "braidcode/word_problem.hpp"
#include "parallel_for.hpp"

namespace braidcode {
namespace {

// Word number `rank` among all words of exactly `len` letters, letters
// ordered sigma_1, sigma_1^-1, sigma_2, ...
BraidWord unrank(int strands, int len, std::uint64_t rank) {
  const auto alphabet = static_cast<std::uint64_t>(2 * (strands - 1));
  std::vector<Letter> letters(static_cast<std::size_t>(len));
  for (int pos = len - 1; pos >= 0; --pos) {
    const auto digit = static_cast<int>(rank % alphabet);
    rank /= alphabet;
    letters[static_cast<std::size_t>(pos)] = Letter(digit / 2 + 1, digit % 2 ? -1 : 1);
  }
  return BraidWord(strands, std::move(letters));
}

}  // namespace

OracleSweepReport oracle_sweep(int strands, int max_len, Execution exec, std::uint64_t budget) {
  if (strands < 2) throw ValidationError("strand count must be at least 2");
  if (max_len < 0) throw ValidationError("max_len must be non-negative");
  const int alphabet = 2 * (strands - 1);
  const std::uint64_t total = count_strings(alphabet, 0, max_len);
  if (total > budget) {
    throw ResourceError("oracle sweep of " + std::to_string(total) +
                        " words exceeds the budget of " + std::to_string(budget));
  }

  OracleSweepReport report;
  report.strands = strands;
  report.max_len = max_len;
  report.words = total;
  for (int len = 0; len <= max_len; ++len) {
    const std::uint64_t count = count_strings(alphabet, len, len);
    const auto n = static_cast<std::int64_t>(count);
    // 0 agree nontrivial, 1 agree trivial, 2/3 oracle inconclusive with the
    // decider saying trivial/nontrivial, 4 disagreement
    std::vector<unsigned char> outcome(count);
    auto classify = [&](std::int64_t r) {
      const BraidWord w = unrank(strands, len, static_cast<std::uint64_t>(r));
      const bool decided = is_trivial(w);
      const BurauVerdict oracle = burau_verdict(w);
      unsigned char o;
      if (oracle == BurauVerdict::Inconclusive) {
        o = decided ? 2 : 3;
      } else if (decided == (oracle == BurauVerdict::Trivial)) {
        o = decided ? 1 : 0;
      } else {
        o = 4;
      }
      outcome[static_cast<std::size_t>(r)] = o;
    };
    detail::for_each_index(exec, n, 64, classify);
    for (std::int64_t r = 0; r < n; ++r) {
      switch (outcome[static_cast<std::size_t>(r)]) {
        case 1:
          ++report.trivial;
          break;
        case 2:
          ++report.trivial;
          ++report.inconclusive;
          break;
        case 3:
          ++report.inconclusive;
          break;
        case 4:
          report.disagreements.push_back(unrank(strands, len, static_cast<std::uint64_t>(r)));
          break;
        default:
          break;
      }
    }
  }
  return report;
}

}  // namespace braidcode
