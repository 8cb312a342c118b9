#include "braidcode/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <optional>
#include <ostream>

#include "braidcode/codec.hpp"
#include "braidcode/efficiency.hpp"
#include "braidcode/errors.hpp"
#include "braidcode/metric.hpp"
#include "braidcode/text_format.hpp"
#include "braidcode/word_problem.hpp"

namespace braidcode {
namespace {

int yes_no(std::ostream& out, bool answer) {
  out << (answer ? "YES" : "NO") << '\n';
  return answer ? kExitYes : kExitNo;
}

const char* pass_fail(bool pass) { return pass ? "PASS" : "FAIL"; }

Execution execution(bool serial) { return serial ? Execution::Serial : Execution::Parallel; }

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"braidcode: pure-braid information coding toolkit"};
  app.require_subcommand(1);

  int alphabet = 0;
  int max_len = 0;
  int length = 0;
  bool serial = false;
  std::string text1;
  std::string text2;
  std::optional<int> alphabet_opt;
  std::optional<std::string> reference;
  double exponent = 0.0;
  int n_min = 2;
  int n_max = 0;
  bool show_matrix = false;
  std::optional<int> sweep_strands;

  auto* encode_cmd = app.add_subcommand("encode", "Encode a symbol string as a braid word");
  encode_cmd->add_option("-a,--alphabet", alphabet, "Alphabet size N >= 2")->required();
  encode_cmd->add_option("symbols", text1, "Symbol string")->required();

  auto* decode_cmd = app.add_subcommand("decode", "Exhaustively decode a braid word");
  decode_cmd->add_option("-a,--alphabet", alphabet, "Alphabet size N >= 2")->required();
  decode_cmd->add_option("--max-len", max_len, "Longest candidate string")->default_val(6);
  decode_cmd->add_option("word", text1, "Braid word, e.g. \"B3: 2 2\"")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Check that S * S^-1 is trivial");
  verify_cmd->add_option("-a,--alphabet", alphabet, "Alphabet size N >= 2")->required();
  verify_cmd->add_option("symbols", text1, "Symbol string")->required();

  auto* equiv_cmd = app.add_subcommand("equiv", "Decide whether two braid words are equal");
  equiv_cmd->add_option("word1", text1)->required();
  equiv_cmd->add_option("word2", text2)->required();

  auto* trivial_cmd = app.add_subcommand("trivial", "Decide whether a braid word is trivial");
  trivial_cmd->add_option("word", text1)->required();

  auto* distance_cmd = app.add_subcommand("distance", "Suffix distance between two strings");
  distance_cmd->add_option("-a,--alphabet", alphabet_opt, "Alphabet size");
  distance_cmd->add_option("first", text1)->required();
  distance_cmd->add_option("second", text2)->required();

  auto* axioms_cmd = app.add_subcommand("axioms", "Brute-force the metric axioms");
  axioms_cmd->add_option("-a,--alphabet", alphabet, "Alphabet size")->required();
  axioms_cmd->add_option("--max-len", max_len, "Longest string")->required();
  axioms_cmd->add_flag("--serial", serial, "Use the serial reference loop");

  auto* dist_cmd = app.add_subcommand("distribution", "Distance histogram around a reference");
  dist_cmd->add_option("-a,--alphabet", alphabet, "Alphabet size")->required();
  dist_cmd->add_option("--length", length, "String length")->required();
  dist_cmd->add_option("--reference", reference, "Reference string (default all zeros)");
  dist_cmd->add_flag("--serial", serial, "Use the serial reference loop");

  auto* eff_cmd = app.add_subcommand("efficiency", "Cost/gain curve as CSV");
  eff_cmd->add_option("--exponent", exponent, "Cost exponent i in N^i")->required();
  eff_cmd->add_option("--min", n_min, "Smallest alphabet size")->default_val(2);
  eff_cmd->add_option("--max", n_max, "Largest alphabet size")->required();

  auto* burau_cmd = app.add_subcommand("burau-check", "Burau oracle for one word or a sweep");
  burau_cmd->add_option("word", text1, "Braid word");
  burau_cmd->add_flag("--matrix", show_matrix, "Print the Burau matrix");
  burau_cmd->add_option("--strands", sweep_strands, "Sweep all words on this many strands");
  burau_cmd->add_option("--max-len", max_len, "Sweep word length bound")->default_val(6);
  burau_cmd->add_flag("--serial", serial, "Use the serial reference loop");

  auto* inj_cmd = app.add_subcommand("injectivity", "Check that distinct strings never collide");
  inj_cmd->add_option("-a,--alphabet", alphabet, "Alphabet size N >= 2")->required();
  inj_cmd->add_option("--max-len", max_len, "Longest string")->required();
  inj_cmd->add_flag("--serial", serial, "Use the serial reference loop");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*encode_cmd) {
      const CodeScheme scheme(alphabet);
      out << format_word(encode(scheme, parse_symbols(text1, alphabet))) << '\n';
      return 0;
    }
    if (*decode_cmd) {
      const CodeScheme scheme(alphabet);
      const auto decoded = decode_exhaustive(scheme, parse_word(text1), max_len);
      if (!decoded) {
        out << "NONE\n";
        return kExitNo;
      }
      out << format_symbols(*decoded) << '\n';
      return kExitYes;
    }
    if (*verify_cmd) {
      const CodeScheme scheme(alphabet);
      return yes_no(out, verify_roundtrip(scheme, parse_symbols(text1, alphabet)));
    }
    if (*equiv_cmd) return yes_no(out, equivalent(parse_word(text1), parse_word(text2)));
    if (*trivial_cmd) return yes_no(out, is_trivial(parse_word(text1)));
    if (*distance_cmd) {
      const SymbolString a = parse_symbols(text1, alphabet_opt);
      const SymbolString b = parse_symbols(text2, alphabet_opt ? alphabet_opt : a.alphabet_size());
      out << distance(a, b) << '\n';
      return 0;
    }
    if (*axioms_cmd) {
      const AxiomReport r = verify_axioms(alphabet, max_len, execution(serial));
      out << pass_fail(r.pass()) << " axioms alphabet=" << r.alphabet_size
          << " max_len=" << r.max_len << " strings=" << r.strings << " pairs=" << r.pairs_checked
          << " triples=" << r.triples_checked << " violations=" << r.violations() << '\n';
      for (const auto& e : r.examples) out << "violation: " << e << '\n';
      return r.pass() ? kExitYes : kExitNo;
    }
    if (*dist_cmd) {
      const SymbolString ref = reference ? parse_symbols(*reference, alphabet)
                                         : SymbolString(alphabet, std::vector<int>(
                                                                      static_cast<std::size_t>(
                                                                          std::max(length, 0)),
                                                                      0));
      out << format_histogram(distance_distribution(alphabet, length, ref, execution(serial)));
      return 0;
    }
    if (*eff_cmd) {
      out << format_curve_csv(curve(CostModel(exponent), n_min, n_max));
      return 0;
    }
    if (*burau_cmd) {
      if (sweep_strands) {
        const OracleSweepReport r = oracle_sweep(*sweep_strands, max_len, execution(serial));
        out << pass_fail(r.pass()) << " burau-check strands=" << r.strands
            << " max_len=" << r.max_len << " words=" << r.words << " trivial=" << r.trivial
            << " inconclusive=" << r.inconclusive
            << " disagreements=" << r.disagreements.size() << '\n';
        for (const auto& w : r.disagreements) out << "disagreement: " << format_word(w) << '\n';
        return r.pass() ? kExitYes : kExitNo;
      }
      if (text1.empty()) {
        err << "error: burau-check needs a word or --strands\n";
        return kExitUsage;
      }
      const BraidWord w = parse_word(text1);
      const BurauVerdict verdict = burau_verdict(w);
      const bool decided = is_trivial(w);
      const bool agree = verdict == BurauVerdict::Inconclusive ||
                         decided == (verdict == BurauVerdict::Trivial);
      out << to_string(verdict) << '\n';
      out << "handle-reduction: " << (decided ? "TRIVIAL" : "NONTRIVIAL") << '\n';
      if (show_matrix) out << burau(w).to_string();
      return agree ? kExitYes : kExitNo;
    }
    if (*inj_cmd) {
      const InjectivityReport r = injectivity_check(CodeScheme(alphabet), max_len,
                                                    execution(serial));
      out << pass_fail(r.pass()) << " injectivity alphabet=" << r.alphabet_size
          << " max_len=" << r.max_len << " strings=" << r.strings << " pairs=" << r.pairs
          << " collisions=" << r.collisions.size() << '\n';
      for (const auto& [a, b] : r.collisions) {
        out << "collision: " << format_symbols(a) << ' ' << format_symbols(b) << '\n';
      }
      return r.pass() ? kExitYes : kExitNo;
    }
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const StepLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace braidcode
