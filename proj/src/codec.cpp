#include "braidcode/codec.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "braidcode/errors.hpp"
#include "braidcode/word_problem.hpp"
#include "parallel_for.hpp"

namespace braidcode {

SymbolString::SymbolString(int alphabet_size) : alphabet_size_(alphabet_size) {
  if (alphabet_size < 1) throw ValidationError("alphabet size must be positive");
}

SymbolString::SymbolString(int alphabet_size, std::vector<int> symbols)
    : alphabet_size_(alphabet_size), symbols_(std::move(symbols)) {
  if (alphabet_size < 1) throw ValidationError("alphabet size must be positive");
  for (std::size_t pos = 0; pos < symbols_.size(); ++pos) {
    if (symbols_[pos] < 0 || symbols_[pos] >= alphabet_size) {
      throw ValidationError("symbol " + std::to_string(symbols_[pos]) + " at position " +
                            std::to_string(pos) + " is outside an alphabet of size " +
                            std::to_string(alphabet_size));
    }
  }
}

SymbolString SymbolString::reversed() const {
  return SymbolString(alphabet_size_, std::vector<int>(symbols_.rbegin(), symbols_.rend()));
}

SymbolString SymbolString::appended(int symbol) const {
  std::vector<int> out = symbols_;
  out.push_back(symbol);
  return SymbolString(alphabet_size_, std::move(out));
}

std::uint64_t count_strings(int alphabet_size, int min_len, int max_len) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  const auto n = static_cast<std::uint64_t>(alphabet_size);
  std::uint64_t total = 0;
  std::uint64_t power = 1;
  for (int len = 0; len <= max_len; ++len) {
    if (len >= min_len) total = (total > kMax - power) ? kMax : total + power;
    power = (power > kMax / n) ? kMax : power * n;
  }
  return total;
}

std::vector<SymbolString> enumerate_strings(int alphabet_size, int min_len, int max_len,
                                            std::uint64_t budget) {
  const std::uint64_t count = count_strings(alphabet_size, min_len, max_len);
  if (count > budget) {
    throw ResourceError("enumeration of " + std::to_string(count) +
                        " strings exceeds the budget of " + std::to_string(budget));
  }
  std::vector<SymbolString> out;
  out.reserve(count);
  for (int len = std::max(min_len, 0); len <= max_len; ++len) {
    std::vector<int> digits(static_cast<std::size_t>(len), 0);
    while (true) {
      out.emplace_back(alphabet_size, digits);
      // odometer increment, last position fastest
      int pos = len - 1;
      while (pos >= 0 && ++digits[static_cast<std::size_t>(pos)] == alphabet_size) {
        digits[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  }
  return out;
}

CodeScheme::CodeScheme(int alphabet_size) : alphabet_size_(alphabet_size) {
  if (alphabet_size < 2) {
    throw ValidationError("alphabet size must be at least 2, got " +
                          std::to_string(alphabet_size));
  }
  words_.reserve(static_cast<std::size_t>(alphabet_size));
  for (int k = 0; k < alphabet_size; ++k) {
    words_.push_back(pure_generator(generator(k), strands()));
  }
}

PureGeneratorId CodeScheme::generator(int symbol) const {
  if (symbol < 0 || symbol >= alphabet_size_) {
    throw ValidationError("symbol " + std::to_string(symbol) + " is not in the alphabet");
  }
  return {alphabet_size_ - symbol, alphabet_size_ + 1};
}

const BraidWord& CodeScheme::generator_word(int symbol) const {
  generator(symbol);  // range check
  return words_[static_cast<std::size_t>(symbol)];
}

namespace {

void check_alphabet(const CodeScheme& scheme, const SymbolString& s) {
  if (s.alphabet_size() != scheme.alphabet_size()) {
    throw ValidationError("string over an alphabet of size " +
                          std::to_string(s.alphabet_size()) + " used with a scheme of size " +
                          std::to_string(scheme.alphabet_size()));
  }
}

}  // namespace

BraidWord encode(const CodeScheme& scheme, const SymbolString& s) {
  check_alphabet(scheme, s);
  std::vector<Letter> letters;
  for (int sym : s.symbols()) {
    const auto gen = scheme.generator_word(sym).letters();
    letters.insert(letters.end(), gen.begin(), gen.end());
  }
  return BraidWord(scheme.strands(), std::move(letters));
}

BraidWord inverse_string(const CodeScheme& scheme, const SymbolString& s) {
  check_alphabet(scheme, s);
  std::vector<Letter> letters;
  for (auto it = s.symbols().rbegin(); it != s.symbols().rend(); ++it) {
    const BraidWord inv = invert(scheme.generator_word(*it));
    letters.insert(letters.end(), inv.letters().begin(), inv.letters().end());
  }
  return BraidWord(scheme.strands(), std::move(letters));
}

bool verify_roundtrip(const CodeScheme& scheme, const SymbolString& s) {
  return is_trivial(concat(encode(scheme, s), inverse_string(scheme, s)));
}

std::optional<SymbolString> decode_exhaustive(const CodeScheme& scheme, const BraidWord& w,
                                              int max_len, std::uint64_t budget) {
  if (w.strands() != scheme.strands()) {
    throw ValidationError("word has " + std::to_string(w.strands()) +
                          " strands, scheme expects " + std::to_string(scheme.strands()));
  }
  if (max_len < 0) throw ValidationError("max_len must be non-negative");
  // Code words have exponent sum 2|s|, so only one length can match.
  const std::int64_t sum = exponent_sum(w);
  if (sum < 0 || sum % 2 != 0 || sum / 2 > max_len) {
    if (count_strings(scheme.alphabet_size(), 0, max_len) > budget) {
      throw ResourceError("decode enumeration exceeds the budget of " + std::to_string(budget));
    }
    return std::nullopt;
  }
  const auto candidates = enumerate_strings(scheme.alphabet_size(), 0, max_len, budget);
  const BraidWord w_inv = invert(w);
  for (const SymbolString& s : candidates) {
    if (is_trivial(concat(encode(scheme, s), w_inv))) return s;
  }
  return std::nullopt;
}

InjectivityReport injectivity_check(const CodeScheme& scheme, int max_len, Execution exec,
                                    std::uint64_t budget) {
  if (max_len < 1) throw ValidationError("max_len must be at least 1");
  const std::uint64_t count = count_strings(scheme.alphabet_size(), 1, max_len);
  const std::uint64_t pairs = count < (1ULL << 32) ? count * (count - 1) / 2
                                                   : std::numeric_limits<std::uint64_t>::max();
  if (pairs > budget) {
    throw ResourceError("injectivity check of " + std::to_string(pairs) +
                        " pairs exceeds the budget of " + std::to_string(budget));
  }
  const auto strings = enumerate_strings(scheme.alphabet_size(), 1, max_len, count);
  const auto n = static_cast<std::int64_t>(strings.size());
  std::vector<BraidWord> words;
  std::vector<BraidWord> inverses;
  words.reserve(strings.size());
  inverses.reserve(strings.size());
  for (const auto& s : strings) {
    words.push_back(encode(scheme, s));
    inverses.push_back(inverse_string(scheme, s));
  }

  // collided[a] lists every b > a whose encoding matches that of a.
  std::vector<std::vector<std::int64_t>> collided(strings.size());
  auto check_row = [&](std::int64_t a) {
    for (std::int64_t b = a + 1; b < n; ++b) {
      if (is_trivial(concat(words[static_cast<std::size_t>(a)],
                            inverses[static_cast<std::size_t>(b)]))) {
        collided[static_cast<std::size_t>(a)].push_back(b);
      }
    }
  };
  detail::for_each_index(exec, n, 4, check_row);

  InjectivityReport report;
  report.alphabet_size = scheme.alphabet_size();
  report.max_len = max_len;
  report.strings = strings.size();
  report.pairs = pairs;
  for (std::size_t a = 0; a < collided.size(); ++a) {
    for (std::int64_t b : collided[a]) {
      report.collisions.emplace_back(strings[a], strings[static_cast<std::size_t>(b)]);
    }
  }
  return report;
}

}  // namespace braidcode
