#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "patentscore/metric.hpp"

namespace patentscore {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

/// Bad invocation, missing file, malformed configuration. CLI exit code 2.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// A domain rule was violated by otherwise well-formed input. CLI exit code 1.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A remote provider or backend could not be reached or kept failing.
/// CLI exit code 3.
class AvailabilityError : public Error {
 public:
  using Error::Error;
};

// --- core model -------------------------------------------------------------

class MissingMetric : public DomainError {
 public:
  explicit MissingMetric(MetricId id);
  MetricId metric() const { return metric_; }

 private:
  MetricId metric_;
};

class ScoreOutOfRange : public DomainError {
 public:
  ScoreOutOfRange(MetricId id, double value);
  MetricId metric() const { return metric_; }
  double value() const { return value_; }

 private:
  MetricId metric_;
  double value_;
};

class InvalidWeights : public DomainError {
 public:
  using DomainError::DomainError;
};

class EmptyBody : public DomainError {
 public:
  EmptyBody() : DomainError("claim body is empty after trimming whitespace") {}
};

// --- claim analyzer ---------------------------------------------------------

class NoTransition : public DomainError {
 public:
  NoTransition();
};

// --- prompt / judge ---------------------------------------------------------

class UnresolvedPlaceholder : public DomainError {
 public:
  explicit UnresolvedPlaceholder(const std::string& placeholder);
  const std::string& placeholder() const { return placeholder_; }

 private:
  std::string placeholder_;
};

class TemplateFormatError : public DomainError {
 public:
  using DomainError::DomainError;
};

class NoScoreFound : public DomainError {
 public:
  NoScoreFound() : DomainError("no score marker with a numeric value found in response") {}
};

class ParsedScoreOutOfRange : public DomainError {
 public:
  explicit ParsedScoreOutOfRange(double value);
  double value() const { return value_; }

 private:
  double value_;
};

class ProviderUnavailable : public AvailabilityError {
 public:
  explicit ProviderUnavailable(const std::string& message,
                               std::vector<MetricId> failed = {});
  const std::vector<MetricId>& failed_metrics() const { return failed_; }

 private:
  std::vector<MetricId> failed_;
};

class PartialFailure : public AvailabilityError {
 public:
  PartialFailure(MetricId metric, std::size_t parsed, std::size_t requested,
                 std::size_t quorum);
  MetricId metric() const { return metric_; }
  std::size_t parsed() const { return parsed_; }

 private:
  MetricId metric_;
  std::size_t parsed_;
};

// --- semantic ---------------------------------------------------------------

class BackendUnavailable : public AvailabilityError {
 public:
  using AvailabilityError::AvailabilityError;
};

class EmptyText : public DomainError {
 public:
  EmptyText() : DomainError("text is empty") {}
};

class RawScoreOutOfRange : public DomainError {
 public:
  explicit RawScoreOutOfRange(double value);
  double value() const { return value_; }

 private:
  double value_;
};

// --- scoring ----------------------------------------------------------------

class DegenerateDenominator : public DomainError {
 public:
  explicit DegenerateDenominator(double total);
  double total() const { return total_; }

 private:
  double total_;
};

class NegativeContribution : public DomainError {
 public:
  explicit NegativeContribution(std::vector<std::pair<MetricId, double>> offending);
  const std::vector<std::pair<MetricId, double>>& offending() const { return offending_; }

 private:
  std::vector<std::pair<MetricId, double>> offending_;
};

// --- stats ------------------------------------------------------------------

class LengthMismatch : public DomainError {
 public:
  LengthMismatch(std::size_t lhs, std::size_t rhs);
};

class ZeroVariance : public DomainError {
 public:
  using DomainError::DomainError;
};

class AllTied : public DomainError {
 public:
  AllTied() : DomainError("all pairs are tied; tau-b is undefined") {}
};

class DegenerateVariance : public DomainError {
 public:
  using DomainError::DomainError;
};

class InsufficientPairs : public DomainError {
 public:
  InsufficientPairs() : DomainError("fewer than two pairable ratings; alpha is undefined") {}
};

// --- datasets ---------------------------------------------------------------

class FileNotFound : public UsageError {
 public:
  explicit FileNotFound(const std::string& path);
};

class SchemaViolation : public DomainError {
 public:
  SchemaViolation(std::size_t line, const std::string& field, const std::string& message);
  std::size_t line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

class IoFailure : public DomainError {
 public:
  using DomainError::DomainError;
};

class MissingAnnotation : public DomainError {
 public:
  explicit MissingAnnotation(const std::string& patent_id);
  const std::string& patent_id() const { return patent_id_; }

 private:
  std::string patent_id_;
};

class UnmatchedResult : public DomainError {
 public:
  explicit UnmatchedResult(const std::string& patent_id);
  const std::string& patent_id() const { return patent_id_; }

 private:
  std::string patent_id_;
};

}  // namespace patentscore
