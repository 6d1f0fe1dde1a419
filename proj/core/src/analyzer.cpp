#include "patentscore/analyzer.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "patentscore/errors.hpp"
#include "patentscore/rules.hpp"

namespace patentscore::analyzer {

namespace {

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '\'';
}

std::string lowercase(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

bool all_whitespace(std::string_view text) {
  return std::all_of(text.begin(), text.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

/// Content start after an optional leading claim numeral ("1." or "1)").
std::size_t skip_claim_numeral(std::string_view source) {
  std::size_t i = 0;
  while (i < source.size() && std::isspace(static_cast<unsigned char>(source[i]))) ++i;
  std::size_t d = i;
  while (d < source.size() && std::isdigit(static_cast<unsigned char>(source[d]))) ++d;
  if (d == i || d - i > 3) return 0;
  if (d >= source.size() || (source[d] != '.' && source[d] != ')')) return 0;
  std::size_t after = d + 1;
  if (after >= source.size() || !std::isspace(static_cast<unsigned char>(source[after])))
    return 0;
  while (after < source.size() &&
         std::isspace(static_cast<unsigned char>(source[after])))
    ++after;
  return after;
}

bool word_bounded(std::string_view text, std::size_t begin, std::size_t end) {
  bool left_ok = begin == 0 || !is_word_char(text[begin - 1]);
  bool right_ok = end >= text.size() || !is_word_char(text[end]);
  return left_ok && right_ok;
}

/// Earliest whole-word occurrence of any keyword; ties go to the longest.
std::optional<Span> find_transition(std::string_view lower, std::size_t from,
                                    const std::vector<std::string>& keywords) {
  std::optional<Span> best;
  for (const std::string& raw : keywords) {
    std::string keyword = lowercase(raw);
    std::size_t pos = from;
    while ((pos = lower.find(keyword, pos)) != std::string_view::npos) {
      if (word_bounded(lower, pos, pos + keyword.size())) {
        Span candidate{pos, pos + keyword.size()};
        if (!best || candidate.begin < best->begin ||
            (candidate.begin == best->begin && candidate.end > best->end)) {
          best = candidate;
        }
        break;
      }
      ++pos;
    }
  }
  return best;
}

struct Token {
  std::string lower;
  std::size_t begin = 0;
  std::size_t end = 0;
  bool word = false;  // false: a punctuation character
};

/// Words (letters, digits, '-', '\'' and decimal points inside numbers) and
/// single punctuation characters; whitespace is dropped.
std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    if (is_word_char(text[i])) {
      std::size_t j = i;
      while (j < text.size()) {
        if (is_word_char(text[j])) {
          ++j;
        } else if (text[j] == '.' && j + 1 < text.size() && j > i &&
                   std::isdigit(static_cast<unsigned char>(text[j - 1])) &&
                   std::isdigit(static_cast<unsigned char>(text[j + 1]))) {
          ++j;  // decimal point inside a number, e.g. "2.4"
        } else {
          break;
        }
      }
      tokens.push_back({lowercase(text.substr(i, j - i)), i, j, true});
      i = j;
    } else {
      tokens.push_back({std::string(1, text[i]), i, i + 1, false});
      ++i;
    }
  }
  return tokens;
}

const std::unordered_set<std::string>& determiners() {
  static const std::unordered_set<std::string> set = {"a", "an", "the", "said"};
  return set;
}

/// Tokens that always end a noun-phrase run.
const std::unordered_set<std::string>& hard_stops() {
  static const std::unordered_set<std::string> set = {
      // prepositions
      "of", "to", "for", "with", "in", "on", "at", "by", "from", "into", "within",
      "between", "over", "under", "above", "below", "through", "across", "along",
      "upon", "onto", "toward", "towards", "against", "about", "without", "per",
      "via", "near", "relative",
      // conjunctions and relatives
      "and", "or", "nor", "but", "that", "which", "who", "whom", "whose", "when",
      "where", "while", "whether", "wherein", "whereby", "so", "than", "as", "if",
      "such", "each", "thereof", "thereto", "therein", "thereby", "therefrom",
      // linking and auxiliary verbs
      "is", "are", "was", "were", "be", "been", "being", "am", "has", "have", "had",
      "does", "do", "did", "can", "may", "shall", "will", "must", "should", "would",
      "could",
      // transitional participles
      "comprising", "comprises", "comprise", "including", "includes", "include",
      "consisting", "consists", "consist", "having", "characterized"};
  return set;
}

/// Claim verbs that end the run only once a head token has been collected, so
/// prenominal uses ("a selected position") stay inside the phrase.
const std::unordered_set<std::string>& soft_stops() {
  static const std::unordered_set<std::string> set = {
      "configured",   "adapted",     "arranged",   "coupled",    "connected",
      "attached",     "mounted",     "formed",     "defined",    "disposed",
      "positioned",   "located",     "received",   "secured",    "extended",
      "operated",     "stored",      "processed",  "transmitted", "powered",
      "updated",      "performed",   "provided",   "controlled", "generated",
      "designed",     "selected",    "operable",   "operatively",
      "connects",     "extends",     "operates",   "stores",     "processes",
      "transmits",    "powers",      "updates",    "performs",   "provides",
      "controls",     "generates",   "receives",   "secures",    "couples",
      "defines",      "forms",       "causes",     "enables",    "contains",
      "holds",        "supports",    "drives",
      "storing",      "powering",    "transmitting", "extending", "operating",
      "generating",   "providing",   "performing", "receiving",  "securing",
      "updating",     "coupling",    "connecting"};
  return set;
}

/// Adverb suffixes; "assembly"/"supply" style nouns do not match them.
bool adverb_like(const std::string& token) {
  auto ends_with = [&](std::string_view suffix) {
    return token.size() > suffix.size() &&
           token.compare(token.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  return ends_with("ally") || ends_with("ively") || ends_with("ably") ||
         ends_with("ibly") || ends_with("edly") || ends_with("ingly");
}

struct PhraseEvent {
  NounPhrase phrase;
  bool indefinite = false;  // "a"/"an" introduction
};

std::vector<PhraseEvent> extract_phrases(std::string_view body) {
  std::vector<Token> tokens = tokenize(body);
  std::vector<PhraseEvent> events;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (!tokens[i].word || !determiners().contains(tokens[i].lower)) continue;
    std::string phrase;
    std::size_t end = tokens[i].end;
    std::size_t collected = 0;
    for (std::size_t j = i + 1; j < tokens.size(); ++j) {
      const Token& tok = tokens[j];
      if (!tok.word) break;  // punctuation ends the run
      if (determiners().contains(tok.lower) || hard_stops().contains(tok.lower)) break;
      if (collected > 0 && (soft_stops().contains(tok.lower) || adverb_like(tok.lower)))
        break;
      if (!phrase.empty()) phrase += ' ';
      phrase += tok.lower;
      end = tok.end;
      ++collected;
    }
    if (phrase.empty()) continue;
    bool indefinite = tokens[i].lower == "a" || tokens[i].lower == "an";
    events.push_back(
        {NounPhrase{phrase, tokens[i].lower, Span{tokens[i].begin, end}}, indefinite});
  }
  return events;
}

Terminator terminator_after(std::string_view source, std::size_t pos) {
  while (pos < source.size() && std::isspace(static_cast<unsigned char>(source[pos])))
    ++pos;
  if (pos >= source.size()) return Terminator::none;
  if (source[pos] == ';') return Terminator::semicolon;
  if (source[pos] == ',') return Terminator::comma;
  return Terminator::none;
}

bool segment_leads_with(std::string_view lower, std::size_t begin, std::size_t end,
                        std::string_view word) {
  if (begin + word.size() > end) return false;
  if (lower.compare(begin, word.size(), word) != 0) return false;
  return word_bounded(lower, begin, begin + word.size());
}

}  // namespace

std::string ParsedClaim::reconstruct() const {
  std::vector<Span> spans;
  spans.push_back(preamble);
  spans.push_back(transition);
  spans.insert(spans.end(), elements.begin(), elements.end());
  spans.insert(spans.end(), trailing_clauses.begin(), trailing_clauses.end());
  std::sort(spans.begin(), spans.end(),
            [](const Span& a, const Span& b) { return a.begin < b.begin; });

  std::string out;
  out.reserve(source.size());
  std::size_t cursor = 0;
  for (const Span& span : spans) {
    if (span.begin < cursor) return out;  // overlapping spans: bookkeeping bug
    out.append(source, cursor, span.begin - cursor);
    out.append(source, span.begin, span.end - span.begin);
    cursor = span.end;
  }
  out.append(source, cursor, source.size() - cursor);
  return out;
}

ParsedClaim parse_claim(std::string_view body, const ParseOptions& options) {
  if (body.empty() || all_whitespace(body)) throw EmptyBody();

  ParsedClaim claim;
  claim.source.assign(body);
  std::string lower = lowercase(claim.source);

  std::size_t content_begin = skip_claim_numeral(claim.source);
  std::optional<Span> transition =
      find_transition(lower, content_begin, options.transitions);
  if (!transition) throw NoTransition();
  claim.transition = *transition;

  std::size_t pre_begin = content_begin;
  while (pre_begin < transition->begin &&
         std::isspace(static_cast<unsigned char>(claim.source[pre_begin])))
    ++pre_begin;
  std::size_t pre_end = transition->begin;
  while (pre_end > pre_begin &&
         (std::isspace(static_cast<unsigned char>(claim.source[pre_end - 1])) ||
          claim.source[pre_end - 1] == ','))
    --pre_end;
  claim.preamble = Span{pre_begin, pre_end};

  std::size_t cursor = transition->end;
  while (cursor < claim.source.size() &&
         std::isspace(static_cast<unsigned char>(claim.source[cursor])))
    ++cursor;
  if (cursor < claim.source.size() && claim.source[cursor] == ':') {
    claim.punctuation.colon_after_transition = true;
    ++cursor;
  } else {
    cursor = transition->end;
  }

  std::vector<bool> element_and_led;
  std::size_t seg_begin = cursor;
  while (seg_begin <= claim.source.size()) {
    std::size_t semi = claim.source.find(';', seg_begin);
    std::size_t seg_end = semi == std::string::npos ? claim.source.size() : semi;

    std::size_t begin = seg_begin;
    while (begin < seg_end &&
           std::isspace(static_cast<unsigned char>(claim.source[begin])))
      ++begin;

    bool and_led = false;
    if (segment_leads_with(lower, begin, seg_end, "and")) {
      and_led = true;
      begin += 3;
      while (begin < seg_end &&
             std::isspace(static_cast<unsigned char>(claim.source[begin])))
        ++begin;
    }
    bool trailing = segment_leads_with(lower, begin, seg_end, "wherein") ||
                    segment_leads_with(lower, begin, seg_end, "whereby");

    std::size_t end = seg_end;
    while (end > begin && std::isspace(static_cast<unsigned char>(claim.source[end - 1])))
      --end;
    if (semi == std::string::npos && end > begin && claim.source[end - 1] == '.') {
      --end;  // the claim's terminal period is a separator, not content
      while (end > begin &&
             std::isspace(static_cast<unsigned char>(claim.source[end - 1])))
        --end;
    }

    if (end > begin) {
      Span span{begin, end};
      if (trailing) {
        claim.trailing_clauses.push_back(span);
      } else {
        claim.elements.push_back(span);
        claim.punctuation.element_terminators.push_back(
            terminator_after(claim.source, end));
        element_and_led.push_back(and_led);
      }
    }
    if (semi == std::string::npos) break;
    seg_begin = semi + 1;
  }

  if (claim.elements.empty())
    throw DomainError("no claim elements after the transitional phrase");

  claim.punctuation.and_before_last = !element_and_led.empty() && element_and_led.back();
  std::size_t tail = claim.source.size();
  while (tail > 0 && std::isspace(static_cast<unsigned char>(claim.source[tail - 1])))
    --tail;
  claim.punctuation.terminal_period = tail > 0 && claim.source[tail - 1] == '.';
  return claim;
}

std::vector<Finding> check_punctuation(const ParsedClaim& parsed) {
  std::vector<Finding> findings;
  const PunctuationInventory& punct = parsed.punctuation;

  if (!punct.colon_after_transition) {
    findings.push_back({"PUNC-COLON", Severity::error,
                        "no colon after the transitional phrase \"" +
                            std::string(parsed.transition_text()) + "\"",
                        Span{parsed.transition.end, parsed.transition.end}});
  }

  // Every element followed by another segment needs a semicolon terminator.
  std::size_t n = parsed.elements.size();
  for (std::size_t i = 0; i < n; ++i) {
    bool needs_semicolon = i + 1 < n || !parsed.trailing_clauses.empty();
    if (needs_semicolon && punct.element_terminators[i] != Terminator::semicolon) {
      findings.push_back({"PUNC-SEMI", Severity::error,
                          "element " + std::to_string(i + 1) +
                              " is not terminated by a semicolon",
                          Span{parsed.elements[i].end, parsed.elements[i].end}});
      break;  // one finding per rule
    }
  }

  if (n >= 2 && !punct.and_before_last) {
    findings.push_back({"PUNC-AND", Severity::error,
                        "missing \"and\" before the last element",
                        Span{parsed.elements.back().begin, parsed.elements.back().begin}});
  }

  if (!punct.terminal_period) {
    findings.push_back({"PUNC-PERIOD", Severity::error,
                        "claim does not end with a period",
                        Span{parsed.source.size(), parsed.source.size()}});
  }
  return findings;
}

AntecedentReport scan_antecedents(std::string_view body) {
  if (body.empty() || all_whitespace(body)) throw EmptyBody();

  AntecedentReport report;
  std::unordered_map<std::string, std::size_t> introduced;  // phrase -> position
  for (PhraseEvent& event : extract_phrases(body)) {
    if (event.indefinite) {
      if (introduced.contains(event.phrase.phrase)) {
        report.violations.push_back(
            {"AB-REINTRO", Severity::warning,
             "\"" + event.phrase.determiner + " " + event.phrase.phrase +
                 "\" reintroduces an element already introduced",
             event.phrase.span});
      } else {
        introduced.emplace(event.phrase.phrase, event.phrase.span.begin);
      }
      report.introductions.push_back(std::move(event.phrase));
    } else {
      if (!introduced.contains(event.phrase.phrase)) {
        report.violations.push_back(
            {"AB-NOANTE", Severity::error,
             "\"" + event.phrase.determiner + " " + event.phrase.phrase +
                 "\" has no earlier introduction with \"a\" or \"an\"",
             event.phrase.span});
      }
      report.references.push_back(std::move(event.phrase));
    }
  }
  return report;
}

double rule_score(const std::vector<Finding>& findings, const RubricBands& bands) {
  if (bands.band_by_count.empty())
    throw DomainError("rubric band map must not be empty");
  std::size_t errors = 0;
  for (const Finding& finding : findings) {
    if (finding.severity == Severity::error) ++errors;
  }
  std::size_t index = std::min(errors, bands.band_by_count.size() - 1);
  return bands.band_by_count[index];
}

std::string_view to_string(Severity s) {
  return s == Severity::error ? "error" : "warning";
}

std::string format_finding(const Finding& finding) {
  std::ostringstream out;
  out << finding.rule_id << '\t' << to_string(finding.severity) << '\t'
      << finding.span.begin << '-' << finding.span.end << '\t' << finding.message;
  return out.str();
}

}  // namespace patentscore::analyzer
