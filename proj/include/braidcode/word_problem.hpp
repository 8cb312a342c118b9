#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "braidcode/braid_word.hpp"
#include "braidcode/execution.hpp"
#include "braidcode/laurent.hpp"

namespace braidcode {

/// Bug guard for handle reduction; far above anything reached in practice.
inline constexpr std::size_t kDefaultStepLimit = 1'000'000;

struct HandleReduction {
  BraidWord word;
  std::size_t steps = 0;  ///< number of handles reduced
};

/// Dehornoy handle reduction.
///
/// A sigma_i-handle is a subword sigma_i^e v sigma_i^-e where v contains
/// neither sigma_i^{+-1} nor sigma_{i-1}^{+-1}. Reducing it deletes the two
/// ends and replaces every sigma_{i+1}^d in v by
/// sigma_{i+1}^-e sigma_i^d sigma_{i+1}^e. The handle chosen at each step is
/// the one whose closing letter is leftmost, which makes it innermost (and so
/// permitted). The result is group-equivalent to the input and is either
/// empty, sigma-positive or sigma-negative.
///
/// Throws StepLimitError if more than `step_limit` reductions are needed.
HandleReduction handle_reduce_traced(const BraidWord& w, std::size_t step_limit = kDefaultStepLimit);

inline BraidWord handle_reduce(const BraidWord& w, std::size_t step_limit = kDefaultStepLimit) {
  return handle_reduce_traced(w, step_limit).word;
}

/// True iff w represents the identity. Rejects on exponent sum and
/// permutation first, then decides by handle reduction.
bool is_trivial(const BraidWord& w, std::size_t step_limit = kDefaultStepLimit);

/// True iff w1 and w2 are the same group element. Throws ValidationError on
/// strand mismatch.
bool equivalent(const BraidWord& w1, const BraidWord& w2,
                std::size_t step_limit = kDefaultStepLimit);

/// Unreduced Burau matrix: the product, in letter order, of the images
/// sigma_i -> block [[1-t, t], [1, 0]] and sigma_i^-1 -> [[0, 1], [t^-1, 1-t^-1]]
/// placed at rows/columns (i, i+1) of the identity.
LaurentMatrix burau(const BraidWord& w);

/// Image of a single letter, as a full matrix.
LaurentMatrix burau_generator(Letter l, int strands);

enum class BurauVerdict { Trivial, NonTrivial, Inconclusive };

/// NonTrivial whenever the Burau matrix is not the identity (sound for all
/// strand counts). An identity matrix is conclusive only for up to three
/// strands, where the representation is faithful; beyond that the verdict is
/// Inconclusive unless the word is empty.
BurauVerdict burau_verdict(const BraidWord& w);

const char* to_string(BurauVerdict v);

struct OracleSweepReport {
  int strands = 0;
  int max_len = 0;
  std::uint64_t words = 0;         ///< all words of length <= max_len
  std::uint64_t trivial = 0;       ///< words the decider found trivial
  std::uint64_t inconclusive = 0;  ///< oracle could not decide
  std::vector<BraidWord> disagreements;

  bool pass() const { return disagreements.empty(); }
};

/// Runs is_trivial and burau_verdict on every word of length <= max_len over
/// the 2(strands - 1) letters and records where they disagree. Throws
/// ResourceError when the word count exceeds `budget`.
OracleSweepReport oracle_sweep(int strands, int max_len, Execution exec = Execution::Parallel,
                               std::uint64_t budget = 10'000'000);

}  // namespace braidcode
