#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace eigenport {

// Malformed text input. Line numbers are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Well-formed lines that do not describe a valid graph (dangling parent, cycle, ...).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolverStats {
  int iterations = 0;
  double residual = 0.0;
};

// Base for failures of the transport LP. Carries the (i, j) pmf pair when
// raised from a distance-matrix sweep.
class TransportError : public std::runtime_error {
 public:
  TransportError(const std::string& what, SolverStats stats)
      : std::runtime_error(what), stats_(stats) {}

  const SolverStats& stats() const noexcept { return stats_; }
  const std::optional<std::pair<int, int>>& pair() const noexcept { return pair_; }
  void set_pair(int i, int j) { pair_ = std::make_pair(i, j); }

 private:
  SolverStats stats_;
  std::optional<std::pair<int, int>> pair_;
};

// The balance equation has no nonnegative solution (mass cannot reach its sinks).
class InfeasibleError : public TransportError {
 public:
  using TransportError::TransportError;
};

// Pivot limit exceeded or residual out of tolerance.
class NumericError : public TransportError {
 public:
  using TransportError::TransportError;
};

// A coordinate-bearing Gram eigenvalue is negative, or the requested
// dimension cannot be drawn.
class DimensionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace eigenport
