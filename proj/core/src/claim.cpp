#include "patentscore/claim.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "patentscore/errors.hpp"

namespace patentscore {

namespace {

bool all_whitespace(const std::string& text) {
  return std::all_of(text.begin(), text.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

}  // namespace

std::string_view to_string(Provenance p) {
  return p == Provenance::gold ? "gold" : "generated";
}

ClaimText make_claim_text(std::string patent_id, std::string body, Provenance provenance) {
  if (body.empty() || all_whitespace(body)) throw EmptyBody();
  return ClaimText{std::move(patent_id), std::move(body), provenance};
}

ExpertAnnotation make_expert_annotation(std::vector<double> scores) {
  if (scores.empty()) throw DomainError("expert annotation needs at least one score");
  for (double s : scores) {
    if (s < 1.0 || s > 5.0)
      throw DomainError("expert score " + std::to_string(s) + " is outside [1, 5]");
  }
  double mean = std::accumulate(scores.begin(), scores.end(), 0.0) /
                static_cast<double>(scores.size());
  return ExpertAnnotation{std::move(scores), mean};
}

ClaimPair make_claim_pair(ClaimText gold, ClaimText generated,
                          std::optional<ExpertAnnotation> annotation,
                          std::optional<std::string> ipc_section) {
  if (gold.provenance != Provenance::gold)
    throw DomainError("gold claim must carry gold provenance");
  if (generated.provenance != Provenance::generated)
    throw DomainError("generated claim must carry generated provenance");
  if (gold.patent_id != generated.patent_id)
    throw DomainError("claim pair spans two patents: " + gold.patent_id + " vs " +
                      generated.patent_id);
  std::string id = gold.patent_id;
  return ClaimPair{std::move(id), std::move(gold), std::move(generated),
                   std::move(annotation), std::move(ipc_section)};
}

}  // namespace patentscore
