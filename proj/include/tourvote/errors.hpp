#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace tourvote {

using Vertex = std::uint32_t;

/// A ranking list or profile whose members do not share one vertex set.
class MalformedProfileError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A relation that violates the tournament invariants.
class InvalidTournamentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a profile leaves some pair undecided. The empty profile on a
/// single vertex has no pair to report, so the pair is optional.
class TieError : public std::runtime_error {
 public:
  TieError(std::optional<std::pair<Vertex, Vertex>> pair, const std::string& what)
      : std::runtime_error(what), pair_(pair) {}

  const std::optional<std::pair<Vertex, Vertex>>& pair() const noexcept { return pair_; }

 private:
  std::optional<std::pair<Vertex, Vertex>> pair_;
};

class OrientationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The old profile does not generate the tournament it was supposed to.
class PreconditionError : public std::invalid_argument {
 public:
  PreconditionError(Vertex i, Vertex j, const std::string& what)
      : std::invalid_argument(what), i_(i), j_(j) {}

  std::pair<Vertex, Vertex> pair() const noexcept { return {i_, j_}; }

 private:
  Vertex i_;
  Vertex j_;
};

/// An exhaustive routine refused an input larger than its cap.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(std::size_t cap, const std::string& what)
      : std::runtime_error(what), cap_(cap) {}

  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

class BudgetExceededError : public std::runtime_error {
 public:
  BudgetExceededError(std::size_t last_completed, const std::string& what)
      : std::runtime_error(what), last_completed_(last_completed) {}

  /// Largest voter count fully refuted before the budget ran out (0 if none).
  std::size_t last_completed() const noexcept { return last_completed_; }

 private:
  std::size_t last_completed_;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace tourvote
