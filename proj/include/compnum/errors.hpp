#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace compnum {

enum class ErrorKind {
  UnknownVertex,
  InvalidGraph,
  CyclicDigraph,
  SizeGuardExceeded,
  EmptyGraph,
  VertexCollision,
  NotAClique,
  NonPositiveM,
  CompetitionMismatch,
  InvalidInput,
  PreconditionViolated,
  NotAnEdge,
  HypothesisNotMet,
  BudgetExceeded,
  NotConnected,
  InternalInvariant,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::InvalidGraph: return "InvalidGraph";
    case ErrorKind::CyclicDigraph: return "CyclicDigraph";
    case ErrorKind::SizeGuardExceeded: return "SizeGuardExceeded";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::VertexCollision: return "VertexCollision";
    case ErrorKind::NotAClique: return "NotAClique";
    case ErrorKind::NonPositiveM: return "NonPositiveM";
    case ErrorKind::CompetitionMismatch: return "CompetitionMismatch";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::NotAnEdge: return "NotAnEdge";
    case ErrorKind::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

// Base of everything the library throws.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class CyclicDigraphError : public Error {
 public:
  explicit CyclicDigraphError(std::vector<std::string> cycle)
      : Error(ErrorKind::CyclicDigraph, "directed cycle " + render(cycle)),
        cycle_(std::move(cycle)) {}

  // Closed walk: first label repeated at the end.
  const std::vector<std::string>& cycle() const noexcept { return cycle_; }

 private:
  static std::string render(const std::vector<std::string>& cycle) {
    std::string out;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out += "->";
      out += cycle[i];
    }
    return out;
  }

  std::vector<std::string> cycle_;
};

class BudgetExceededError : public Error {
 public:
  BudgetExceededError(const std::string& message, int lower_bound, int upper_bound)
      : Error(ErrorKind::BudgetExceeded, message), lower_(lower_bound), upper_(upper_bound) {}

  int lower_bound() const noexcept { return lower_; }
  // -1 when no upper bound is known.
  int upper_bound() const noexcept { return upper_; }

 private:
  int lower_;
  int upper_;
};

}  // namespace compnum
