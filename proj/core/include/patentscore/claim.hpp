#pragma once

#include <optional>
#include <string>
#include <vector>

namespace patentscore {

enum class Provenance { gold, generated };

std::string_view to_string(Provenance p);

/// A single Claim 1 text tied to its patent.
struct ClaimText {
  std::string patent_id;
  std::string body;  // UTF-8, non-empty after trimming
  Provenance provenance = Provenance::gold;
};

/// Validates the non-empty-body invariant; throws EmptyBody.
ClaimText make_claim_text(std::string patent_id, std::string body, Provenance provenance);

/// Per-claim expert ratings on the 1-5 scale, with their arithmetic mean.
struct ExpertAnnotation {
  std::vector<double> scores;
  double mean = 0.0;
};

/// Computes the mean from the scores; throws DomainError when empty or when a
/// score falls outside [1, 5].
ExpertAnnotation make_expert_annotation(std::vector<double> scores);

/// A gold and a generated Claim 1 for the same patent.
struct ClaimPair {
  std::string patent_id;
  ClaimText gold;
  ClaimText generated;
  std::optional<ExpertAnnotation> annotation;
  std::optional<std::string> ipc_section;
};

/// Enforces shared patent_id and gold/generated provenance.
ClaimPair make_claim_pair(ClaimText gold, ClaimText generated,
                          std::optional<ExpertAnnotation> annotation = std::nullopt,
                          std::optional<std::string> ipc_section = std::nullopt);

}  // namespace patentscore
