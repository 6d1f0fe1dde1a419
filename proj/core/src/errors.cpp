#include "patentscore/errors.hpp"

#include <sstream>

namespace patentscore {

namespace {

std::string metric_list(const std::vector<std::pair<MetricId, double>>& items) {
  std::ostringstream out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out << ", ";
    out << to_string(items[i].first) << " (" << items[i].second << ")";
  }
  return out.str();
}

}  // namespace

MissingMetric::MissingMetric(MetricId id)
    : DomainError("score vector is missing metric " + std::string(to_string(id))),
      metric_(id) {}

ScoreOutOfRange::ScoreOutOfRange(MetricId id, double value)
    : DomainError((std::ostringstream{} << "score for " << to_string(id) << " is "
                                        << value << ", outside [1, 5]")
                      .str()),
      metric_(id),
      value_(value) {}

NoTransition::NoTransition()
    : DomainError(
          "no transitional phrase found; a Claim 1 links its preamble to its "
          "elements with a keyword such as \"comprising\", \"consisting of\" "
          "or \"including\"") {}

UnresolvedPlaceholder::UnresolvedPlaceholder(const std::string& placeholder)
    : DomainError("unresolved placeholder {{" + placeholder + "}} after substitution"),
      placeholder_(placeholder) {}

ParsedScoreOutOfRange::ParsedScoreOutOfRange(double value)
    : DomainError((std::ostringstream{} << "parsed score " << value
                                        << " is outside [1, 5]")
                      .str()),
      value_(value) {}

ProviderUnavailable::ProviderUnavailable(const std::string& message,
                                         std::vector<MetricId> failed)
    : AvailabilityError(message), failed_(std::move(failed)) {}

PartialFailure::PartialFailure(MetricId metric, std::size_t parsed,
                               std::size_t requested, std::size_t quorum)
    : AvailabilityError((std::ostringstream{}
                         << "metric " << to_string(metric) << ": only " << parsed
                         << " of " << requested << " samples parsed (quorum " << quorum
                         << ")")
                            .str()),
      metric_(metric),
      parsed_(parsed) {}

RawScoreOutOfRange::RawScoreOutOfRange(double value)
    : DomainError((std::ostringstream{} << "raw similarity " << value
                                        << " is outside [0, 1]")
                      .str()),
      value_(value) {}

DegenerateDenominator::DegenerateDenominator(double total)
    : DomainError((std::ostringstream{}
                   << "sum of ablation deltas is " << total
                   << "; weights are undefined for a non-positive total")
                      .str()),
      total_(total) {}

NegativeContribution::NegativeContribution(
    std::vector<std::pair<MetricId, double>> offending)
    : DomainError("negative ablation contribution for " + metric_list(offending)),
      offending_(std::move(offending)) {}

LengthMismatch::LengthMismatch(std::size_t lhs, std::size_t rhs)
    : DomainError((std::ostringstream{} << "length mismatch: " << lhs << " vs " << rhs)
                      .str()) {}

FileNotFound::FileNotFound(const std::string& path)
    : UsageError("file not found: " + path) {}

SchemaViolation::SchemaViolation(std::size_t line, const std::string& field,
                                 const std::string& message)
    : DomainError((std::ostringstream{} << "line " << line << ", field \"" << field
                                        << "\": " << message)
                      .str()),
      line_(line),
      field_(field) {}

MissingAnnotation::MissingAnnotation(const std::string& patent_id)
    : DomainError("no expert annotation for patent " + patent_id),
      patent_id_(patent_id) {}

UnmatchedResult::UnmatchedResult(const std::string& patent_id)
    : DomainError("run result for unknown patent " + patent_id),
      patent_id_(patent_id) {}

}  // namespace patentscore
