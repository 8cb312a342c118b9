#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "braidcode/braid_word.hpp"
#include "braidcode/efficiency.hpp"
#include "braidcode/metric.hpp"
#include "braidcode/symbols.hpp"

namespace braidcode {

// Braid words are written "B<n>: k1 k2 ... km" with each k a nonzero signed
// generator index; "B<n>:" alone is the identity.

std::string format_word(const BraidWord& w);

/// Throws ParseError carrying the 1-based column of the problem.
BraidWord parse_word(std::string_view text);

// Symbol strings are digit strings for alphabets of at most 10 symbols and
// comma-separated decimals above that, optionally prefixed "A<N>:".

std::string format_symbols(const SymbolString& s, bool with_prefix = false);

/// `alphabet_size` may be omitted only when the text carries an "A<N>:"
/// prefix; when both are present they must agree.
SymbolString parse_symbols(std::string_view text, std::optional<int> alphabet_size);

/// One "distance count" line per histogram bucket.
std::string format_histogram(const DistanceReport& report);

/// Header "N,cost,gain,ratio" then one row per alphabet size. Doubles are
/// written in shortest round-trip form, independent of the global locale.
std::string format_curve_csv(const EfficiencyCurve& curve);

}  // namespace braidcode
