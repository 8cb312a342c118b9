#include "braidcode/braid_word.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "braidcode/errors.hpp"

namespace braidcode {

Permutation Permutation::identity(int size) {
  Permutation p;
  p.image.resize(static_cast<std::size_t>(size));
  std::iota(p.image.begin(), p.image.end(), 0);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t k = 0; k < image.size(); ++k) {
    if (image[k] != static_cast<int>(k)) return false;
  }
  return true;
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.image.size() != image.size()) {
    throw ValidationError("permutation size mismatch");
  }
  Permutation out;
  out.image.resize(image.size());
  for (std::size_t k = 0; k < image.size(); ++k) {
    out.image[k] = next.image[static_cast<std::size_t>(image[k])];
  }
  return out;
}

BraidWord::BraidWord(int strands) : strands_(strands) {
  if (strands < 2) {
    throw ValidationError("strand count must be at least 2, got " + std::to_string(strands));
  }
}

BraidWord::BraidWord(int strands, std::vector<Letter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands < 2) {
    throw ValidationError("strand count must be at least 2, got " + std::to_string(strands));
  }
  for (std::size_t pos = 0; pos < letters_.size(); ++pos) {
    const int idx = letters_[pos].index();
    if (idx < 1 || idx > strands - 1) {
      throw ValidationError("letter " + std::to_string(letters_[pos].signed_index()) +
                            " at position " + std::to_string(pos) + " is invalid for " +
                            std::to_string(strands) + " strands");
    }
  }
}

std::vector<int> BraidWord::signed_indices() const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (Letter l : letters_) out.push_back(l.signed_index());
  return out;
}

BraidWord make_word(int strands, std::span<const int> signed_indices) {
  std::vector<Letter> letters;
  letters.reserve(signed_indices.size());
  for (std::size_t pos = 0; pos < signed_indices.size(); ++pos) {
    const int k = signed_indices[pos];
    if (k == 0) {
      throw ValidationError("zero letter at position " + std::to_string(pos));
    }
    letters.emplace_back(k);
  }
  return BraidWord(strands, std::move(letters));
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) {
    throw ValidationError("cannot concatenate words on " + std::to_string(a.strands()) +
                          " and " + std::to_string(b.strands()) + " strands");
  }
  std::vector<Letter> letters(a.letters().begin(), a.letters().end());
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.strands(), std::move(letters));
}

BraidWord invert(const BraidWord& w) {
  std::vector<Letter> letters;
  letters.reserve(w.length());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    letters.push_back(it->inverse());
  }
  return BraidWord(w.strands(), std::move(letters));
}

BraidWord free_reduce(const BraidWord& w) {
  // Stack-based: each incoming letter either cancels the top or is pushed.
  std::vector<Letter> stack;
  stack.reserve(w.length());
  for (Letter l : w.letters()) {
    if (!stack.empty() && stack.back() == l.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return BraidWord(w.strands(), std::move(stack));
}

BraidWord pure_generator(PureGeneratorId id, int strands) {
  if (id.i < 1 || id.i >= id.j || id.j > strands) {
    throw ValidationError("pure generator l_" + std::to_string(id.i) + "," +
                          std::to_string(id.j) + " is invalid for " +
                          std::to_string(strands) + " strands");
  }
  std::vector<Letter> letters;
  letters.reserve(static_cast<std::size_t>(2 * (id.j - id.i)));
  for (int k = id.j - 1; k > id.i; --k) letters.emplace_back(k);
  letters.emplace_back(id.i);
  letters.emplace_back(id.i);
  for (int k = id.i + 1; k <= id.j - 1; ++k) letters.emplace_back(-k);
  return BraidWord(strands, std::move(letters));
}

std::int64_t exponent_sum(const BraidWord& w) {
  std::int64_t sum = 0;
  for (Letter l : w.letters()) sum += l.sign();
  return sum;
}

Permutation permutation(const BraidWord& w) {
  // at[pos] = starting position of the strand currently at pos.
  std::vector<int> at(static_cast<std::size_t>(w.strands()));
  std::iota(at.begin(), at.end(), 0);
  for (Letter l : w.letters()) {
    const auto k = static_cast<std::size_t>(l.index() - 1);
    std::swap(at[k], at[k + 1]);
  }
  Permutation p;
  p.image.resize(at.size());
  for (std::size_t pos = 0; pos < at.size(); ++pos) {
    p.image[static_cast<std::size_t>(at[pos])] = static_cast<int>(pos);
  }
  return p;
}

}  // namespace braidcode
