#include "braidcode/word_problem.hpp"

#include <string>
#include <vector>

#include "braidcode/errors.hpp"

namespace braidcode {
namespace {

struct HandleSpan {
  std::size_t open;
  std::size_t close;
};

// Leftmost-closing handle, if any. last[k] holds the most recent position of
// a sigma_k^{+-1}; a letter at p closes a handle when the previous occurrence
// of its generator has the opposite sign and no sigma_{k-1} came after it.
bool find_handle(const std::vector<int>& w, int strands, HandleSpan& out) {
  std::vector<std::ptrdiff_t> last(static_cast<std::size_t>(strands), -1);
  for (std::size_t p = 0; p < w.size(); ++p) {
    const int k = w[p] < 0 ? -w[p] : w[p];
    const std::ptrdiff_t q = last[static_cast<std::size_t>(k)];
    if (q >= 0 && w[static_cast<std::size_t>(q)] == -w[p] &&
        (k == 1 || last[static_cast<std::size_t>(k - 1)] < q)) {
      out = {static_cast<std::size_t>(q), p};
      return true;
    }
    last[static_cast<std::size_t>(k)] = static_cast<std::ptrdiff_t>(p);
  }
  return false;
}

std::vector<int> reduce_handle(const std::vector<int>& w, HandleSpan h) {
  const int opener = w[h.open];
  const int i = opener < 0 ? -opener : opener;
  const int e = opener < 0 ? -1 : 1;
  std::vector<int> out;
  out.reserve(w.size() + 2 * (h.close - h.open));
  out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(h.open));
  for (std::size_t p = h.open + 1; p < h.close; ++p) {
    const int x = w[p];
    const int k = x < 0 ? -x : x;
    if (k == i + 1) {
      const int d = x < 0 ? -1 : 1;
      out.push_back(-e * (i + 1));
      out.push_back(d * i);
      out.push_back(e * (i + 1));
    } else {
      out.push_back(x);
    }
  }
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(h.close) + 1, w.end());
  return out;
}

}  // namespace

HandleReduction handle_reduce_traced(const BraidWord& w, std::size_t step_limit) {
  std::vector<int> letters = free_reduce(w).signed_indices();
  std::size_t steps = 0;
  HandleSpan h{};
  while (find_handle(letters, w.strands(), h)) {
    if (steps == step_limit) {
      throw StepLimitError("handle reduction exceeded " + std::to_string(step_limit) +
                           " steps on a word of length " + std::to_string(w.length()));
    }
    letters = reduce_handle(letters, h);
    ++steps;
  }
  return {make_word(w.strands(), letters), steps};
}

bool is_trivial(const BraidWord& w, std::size_t step_limit) {
  if (exponent_sum(w) != 0) return false;
  if (!permutation(w).is_identity()) return false;
  return handle_reduce(w, step_limit).empty();
}

bool equivalent(const BraidWord& w1, const BraidWord& w2, std::size_t step_limit) {
  return is_trivial(concat(w1, invert(w2)), step_limit);
}

LaurentMatrix burau_generator(Letter l, int strands) {
  if (l.index() < 1 || l.index() > strands - 1) {
    throw ValidationError("letter index out of range for Burau matrix");
  }
  LaurentMatrix m = LaurentMatrix::identity(strands);
  const int r = l.index() - 1;
  if (l.sign() > 0) {
    m.at(r, r) = LaurentPoly(1) - LaurentPoly::t();
    m.at(r, r + 1) = LaurentPoly::t();
    m.at(r + 1, r) = LaurentPoly(1);
    m.at(r + 1, r + 1) = LaurentPoly();
  } else {
    m.at(r, r) = LaurentPoly();
    m.at(r, r + 1) = LaurentPoly(1);
    m.at(r + 1, r) = LaurentPoly::t_inv();
    m.at(r + 1, r + 1) = LaurentPoly(1) - LaurentPoly::t_inv();
  }
  return m;
}

LaurentMatrix burau(const BraidWord& w) {
  // Right multiplication by a generator image only mixes columns r and r+1.
  const int n = w.strands();
  LaurentMatrix m = LaurentMatrix::identity(n);
  const LaurentPoly one(1);
  const LaurentPoly t = LaurentPoly::t();
  const LaurentPoly t_inv = LaurentPoly::t_inv();
  for (Letter l : w.letters()) {
    const int r = l.index() - 1;
    for (int row = 0; row < n; ++row) {
      const LaurentPoly a = m.at(row, r);
      const LaurentPoly b = m.at(row, r + 1);
      if (l.sign() > 0) {
        m.at(row, r) = a * (one - t) + b;
        m.at(row, r + 1) = a * t;
      } else {
        m.at(row, r) = b * t_inv;
        m.at(row, r + 1) = a + b * (one - t_inv);
      }
    }
  }
  return m;
}

BurauVerdict burau_verdict(const BraidWord& w) {
  if (w.empty()) return BurauVerdict::Trivial;
  if (!burau(w).is_identity()) return BurauVerdict::NonTrivial;
  return w.strands() <= 3 ? BurauVerdict::Trivial : BurauVerdict::Inconclusive;
}

const char* to_string(BurauVerdict v) {
  switch (v) {
    case BurauVerdict::Trivial:
      return "TRIVIAL";
    case BurauVerdict::NonTrivial:
      return "NONTRIVIAL";
    case BurauVerdict::Inconclusive:
      return "INCONCLUSIVE";
  }
  return "?";
}

}  // namespace braidcode
