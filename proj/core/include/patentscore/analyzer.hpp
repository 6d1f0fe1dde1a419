#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace patentscore::analyzer {

/// Byte range [begin, end) into the source text of a claim.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::string_view in(std::string_view source) const {
    return source.substr(begin, end - begin);
  }
  bool empty() const { return end <= begin; }

  friend bool operator==(const Span&, const Span&) = default;
};

enum class Terminator { semicolon, comma, none };

/// Punctuation facts gathered during parsing, one entry per element.
struct PunctuationInventory {
  bool colon_after_transition = false;
  std::vector<Terminator> element_terminators;
  bool and_before_last = false;
  bool terminal_period = false;
};

/// Structural decomposition of a Claim 1. Spans index into `source` and are
/// non-overlapping and ordered; the bytes between spans are the separators,
/// so reconstruct() reproduces `source` exactly.
struct ParsedClaim {
  std::string source;
  Span preamble;
  Span transition;
  std::vector<Span> elements;
  std::vector<Span> trailing_clauses;  // "wherein"-style segments
  PunctuationInventory punctuation;

  std::string_view preamble_text() const { return preamble.in(source); }
  std::string_view transition_text() const { return transition.in(source); }
  std::string_view element_text(std::size_t i) const { return elements[i].in(source); }

  /// Concatenates spans plus inter-span separators; equals `source` for any
  /// claim this library parsed.
  std::string reconstruct() const;
};

struct ParseOptions {
  std::vector<std::string> transitions = {
      "comprising", "consisting essentially of", "consisting of",
      "including",  "having",                    "characterized in that"};
};

/// Decomposes a claim into preamble, transitional phrase, semicolon-separated
/// elements and trailing "wherein" clauses. A leading claim numeral ("1.") is
/// kept in `source` but excluded from the preamble span.
/// Throws EmptyBody, NoTransition.
ParsedClaim parse_claim(std::string_view body, const ParseOptions& options = {});

enum class Severity { error, warning };

std::string_view to_string(Severity s);

struct Finding {
  std::string rule_id;  // must exist in the rule registry
  Severity severity = Severity::error;
  std::string message;
  Span span;
};

/// One finding per violated rule among PUNC-COLON, PUNC-SEMI, PUNC-AND,
/// PUNC-PERIOD; empty when the claim's punctuation is in order.
std::vector<Finding> check_punctuation(const ParsedClaim& parsed);

/// A determiner-led noun phrase as found in the claim text.
struct NounPhrase {
  std::string phrase;      // normalized: lowercase, determiner stripped
  std::string determiner;  // "a", "an", "the" or "said"
  Span span;               // determiner through last phrase token
};

struct AntecedentReport {
  std::vector<NounPhrase> introductions;  // led by "a"/"an"
  std::vector<NounPhrase> references;     // led by "the"/"said"
  std::vector<Finding> violations;        // AB-NOANTE / AB-REINTRO
};

/// Flags definite references with no earlier matching introduction
/// (AB-NOANTE) and repeated indefinite introductions (AB-REINTRO).
/// Throws EmptyBody.
AntecedentReport scan_antecedents(std::string_view body);

/// Maps a violation count to a 1..5 band; index i holds the band for exactly
/// i error findings, the last entry applies to every higher count.
struct RubricBands {
  std::vector<double> band_by_count = {5.0, 4.0, 3.0, 2.0, 1.0};

  static RubricBands defaults() { return {}; }
};

/// Deterministic lint score: band lookup on the number of error-severity
/// findings. Zero findings scores 5. This is an offline aid, not a substitute
/// for judge scores.
double rule_score(const std::vector<Finding>& findings,
                  const RubricBands& bands = RubricBands::defaults());

/// `<rule_id>\t<severity>\t<byte_start>-<byte_end>\t<message>`
std::string format_finding(const Finding& finding);

}  // namespace patentscore::analyzer
