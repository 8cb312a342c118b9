#include "braidcode/metric.hpp"

#include <algorithm>
#include <sstream>

#include "braidcode/errors.hpp"
#include "parallel_for.hpp"

namespace braidcode {
namespace {

void check_same_alphabet(const SymbolString& a, const SymbolString& b) {
  if (a.alphabet_size() != b.alphabet_size()) {
    throw ValidationError("strings are over different alphabets (" +
                          std::to_string(a.alphabet_size()) + " vs " +
                          std::to_string(b.alphabet_size()) + ")");
  }
}

std::string show(const SymbolString& s) {
  std::ostringstream os;
  os << '"';
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k && s.alphabet_size() > 10) os << ',';
    os << s[k];
  }
  os << '"';
  return os.str();
}

constexpr std::size_t kMaxExamples = 8;

}  // namespace

std::size_t common_suffix_len(const SymbolString& a, const SymbolString& b) {
  check_same_alphabet(a, b);
  const std::size_t limit = std::min(a.size(), b.size());
  std::size_t x = 0;
  while (x < limit && a[a.size() - 1 - x] == b[b.size() - 1 - x]) ++x;
  return x;
}

std::int64_t distance(const SymbolString& a, const SymbolString& b) {
  const auto x = static_cast<std::int64_t>(common_suffix_len(a, b));
  const auto d = static_cast<std::int64_t>(a.size());
  const auto f = static_cast<std::int64_t>(b.size());
  const std::int64_t gap = d > f ? d - f : f - d;
  return (f + d + gap - 2 * x) / 2;
}

std::int64_t hamming_distance(const SymbolString& a, const SymbolString& b) {
  check_same_alphabet(a, b);
  if (a.size() != b.size()) {
    throw ValidationError("Hamming distance needs equal lengths (" + std::to_string(a.size()) +
                          " vs " + std::to_string(b.size()) + ")");
  }
  std::int64_t count = 0;
  for (std::size_t k = 0; k < a.size(); ++k) count += a[k] != b[k];
  return count;
}

AxiomReport verify_axioms(int alphabet_size, int max_len, Execution exec,
                          std::uint64_t budget) {
  if (max_len < 0) throw ValidationError("max_len must be non-negative");
  const std::uint64_t count = count_strings(alphabet_size, 0, max_len);
  if (count > (1ULL << 21) || count * count * count > budget) {
    throw ResourceError("axiom check over " + std::to_string(count) +
                        " strings exceeds the triple budget of " + std::to_string(budget));
  }
  const auto strings = enumerate_strings(alphabet_size, 0, max_len, count);
  const auto n = static_cast<std::int64_t>(strings.size());
  const auto un = strings.size();

  // Full distance table; every axiom is then checked against it.
  std::vector<std::int64_t> dist(un * un);
  auto fill_row = [&](std::int64_t a) {
    const auto ua = static_cast<std::size_t>(a);
    for (std::size_t b = 0; b < un; ++b) dist[ua * un + b] = distance(strings[ua], strings[b]);
  };

  struct RowResult {
    std::uint64_t non_negativity = 0, identity = 0, symmetry = 0, triangle = 0;
    std::vector<std::string> examples;
  };
  std::vector<RowResult> rows(un);
  auto check_row = [&](std::int64_t a) {
    const auto ua = static_cast<std::size_t>(a);
    RowResult& r = rows[ua];
    auto note = [&](const std::string& what) {
      if (r.examples.size() < kMaxExamples) r.examples.push_back(what);
    };
    for (std::size_t b = 0; b < un; ++b) {
      const std::int64_t ab = dist[ua * un + b];
      if (ab < 0) {
        ++r.non_negativity;
        note("negative distance between " + show(strings[ua]) + " and " + show(strings[b]));
      }
      if ((ab == 0) != (strings[ua] == strings[b])) {
        ++r.identity;
        note("d = 0 does not match equality for " + show(strings[ua]) + ", " + show(strings[b]));
      }
      if (ab != dist[b * un + ua]) {
        ++r.symmetry;
        note("asymmetric pair " + show(strings[ua]) + ", " + show(strings[b]));
      }
      for (std::size_t c = 0; c < un; ++c) {
        if (dist[ua * un + c] > ab + dist[b * un + c]) {
          ++r.triangle;
          note("triangle inequality fails for " + show(strings[ua]) + ", " + show(strings[b]) +
               ", " + show(strings[c]));
        }
      }
    }
  };

  detail::for_each_index(exec, n, 8, fill_row);
  detail::for_each_index(exec, n, 1, check_row);

  AxiomReport report;
  report.alphabet_size = alphabet_size;
  report.max_len = max_len;
  report.strings = un;
  report.pairs_checked = un * un;
  report.triples_checked = un * un * un;
  for (const RowResult& r : rows) {
    report.non_negativity_violations += r.non_negativity;
    report.identity_violations += r.identity;
    report.symmetry_violations += r.symmetry;
    report.triangle_violations += r.triangle;
    for (const auto& e : r.examples) {
      if (report.examples.size() < kMaxExamples) report.examples.push_back(e);
    }
  }
  return report;
}

DistanceReport distance_distribution(int alphabet_size, int length,
                                     const SymbolString& reference, Execution exec,
                                     std::uint64_t budget) {
  if (reference.alphabet_size() != alphabet_size ||
      reference.size() != static_cast<std::size_t>(length)) {
    throw ValidationError("reference must have length " + std::to_string(length) +
                          " over an alphabet of size " + std::to_string(alphabet_size));
  }
  const auto strings = enumerate_strings(alphabet_size, length, length, budget);
  const auto n = static_cast<std::int64_t>(strings.size());
  std::vector<std::int64_t> d(strings.size(), -1);
  auto fill = [&](std::int64_t k) {
    const auto uk = static_cast<std::size_t>(k);
    if (!(strings[uk] == reference)) d[uk] = distance(reference, strings[uk]);
  };
  detail::for_each_index(exec, n, 256, fill);
  DistanceReport report;
  report.universe = strings.size();
  report.reference = reference;
  for (std::int64_t v : d) {
    if (v >= 0) ++report.histogram[v];
  }
  return report;
}

}  // namespace braidcode
