#include "braidcode/text_format.hpp"

#include <array>
#include <charconv>
#include <vector>

#include "braidcode/errors.hpp"

namespace braidcode {
namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Parses a positive decimal starting at `pos`; advances pos.
int parse_count(std::string_view text, std::size_t& pos, const char* what) {
  const std::size_t start = pos;
  while (pos < text.size() && is_digit(text[pos])) ++pos;
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, value);
  if (start == pos || ec != std::errc() || ptr != text.data() + pos) {
    throw ParseError(std::string("expected ") + what, start + 1);
  }
  return value;
}

std::string format_double(double v) {
  std::array<char, 64> buf{};
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  (void)ec;
  return std::string(buf.data(), ptr);
}

}  // namespace

std::string format_word(const BraidWord& w) {
  std::string out = "B" + std::to_string(w.strands()) + ":";
  for (Letter l : w.letters()) {
    out += ' ';
    out += std::to_string(l.signed_index());
  }
  return out;
}

BraidWord parse_word(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size() && is_space(text[pos])) ++pos;
  if (pos >= text.size() || text[pos] != 'B') throw ParseError("expected 'B<n>:' header", pos + 1);
  ++pos;
  const int strands = parse_count(text, pos, "strand count after 'B'");
  if (strands < 2) throw ParseError("strand count must be at least 2", pos);
  if (pos >= text.size() || text[pos] != ':') throw ParseError("expected ':' after strand count", pos + 1);
  ++pos;

  std::vector<Letter> letters;
  while (true) {
    while (pos < text.size() && is_space(text[pos])) ++pos;
    if (pos >= text.size()) break;
    const std::size_t start = pos;
    if (text[pos] == '-' || text[pos] == '+') ++pos;
    while (pos < text.size() && is_digit(text[pos])) ++pos;
    if (pos < text.size() && !is_space(text[pos])) {
      throw ParseError("unexpected character '" + std::string(1, text[pos]) + "'", pos + 1);
    }
    int k = 0;
    auto [ptr, ec] = std::from_chars(text.data() + start + (text[start] == '+'),
                                     text.data() + pos, k);
    if (ec != std::errc() || ptr != text.data() + pos) {
      throw ParseError("malformed letter", start + 1);
    }
    if (k == 0) throw ParseError("zero is not a generator", start + 1);
    if (k > strands - 1 || k < -(strands - 1)) {
      throw ParseError("generator " + std::to_string(k) + " out of range for " +
                           std::to_string(strands) + " strands",
                       start + 1);
    }
    letters.emplace_back(k);
  }
  return BraidWord(strands, std::move(letters));
}

std::string format_symbols(const SymbolString& s, bool with_prefix) {
  std::string out;
  if (with_prefix) out = "A" + std::to_string(s.alphabet_size()) + ":";
  const bool digits = s.alphabet_size() <= 10;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (!digits && k) out += ',';
    out += std::to_string(s[k]);
  }
  return out;
}

SymbolString parse_symbols(std::string_view text, std::optional<int> alphabet_size) {
  std::size_t pos = 0;
  while (pos < text.size() && is_space(text[pos])) ++pos;
  std::size_t end = text.size();
  while (end > pos && is_space(text[end - 1])) --end;

  if (pos < end && text[pos] == 'A') {
    ++pos;
    const int declared = parse_count(text, pos, "alphabet size after 'A'");
    if (pos >= end || text[pos] != ':') throw ParseError("expected ':' after alphabet size", pos + 1);
    ++pos;
    if (alphabet_size && *alphabet_size != declared) {
      throw ParseError("prefix declares alphabet " + std::to_string(declared) + " but " +
                           std::to_string(*alphabet_size) + " was requested",
                       1);
    }
    alphabet_size = declared;
  }
  if (!alphabet_size) throw ParseError("alphabet size unknown: add an 'A<N>:' prefix", 1);
  const int n = *alphabet_size;
  if (n < 1) throw ParseError("alphabet size must be positive", 1);

  std::vector<int> symbols;
  auto check = [&](int value, std::size_t column) {
    if (value < 0 || value >= n) {
      throw ParseError("symbol " + std::to_string(value) + " outside alphabet of size " +
                           std::to_string(n),
                       column);
    }
  };
  if (n <= 10) {
    for (; pos < end; ++pos) {
      if (!is_digit(text[pos])) {
        throw ParseError("unexpected character '" + std::string(1, text[pos]) + "'", pos + 1);
      }
      check(text[pos] - '0', pos + 1);
      symbols.push_back(text[pos] - '0');
    }
  } else if (pos < end) {
    while (true) {
      const std::size_t start = pos;
      const int value = parse_count(text.substr(0, end), pos, "decimal symbol");
      check(value, start + 1);
      symbols.push_back(value);
      if (pos == end) break;
      if (text[pos] != ',') throw ParseError("expected ','", pos + 1);
      ++pos;
    }
  }
  return SymbolString(n, std::move(symbols));
}

std::string format_histogram(const DistanceReport& report) {
  std::string out;
  for (const auto& [d, count] : report.histogram) {
    out += std::to_string(d) + ' ' + std::to_string(count) + '\n';
  }
  return out;
}

std::string format_curve_csv(const EfficiencyCurve& curve) {
  std::string out = "N,cost,gain,ratio\n";
  for (const EfficiencyRow& row : curve) {
    out += std::to_string(row.alphabet_size) + ',' + format_double(row.cost) + ',' +
           format_double(row.gain) + ',' + format_double(row.ratio) + '\n';
  }
  return out;
}

}  // namespace braidcode
