#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace epg {

/// Base for all library errors; the CLI maps these to exit status 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed group-spec text. `position` is the 0-based offset of the problem.
class SpecSyntaxError : public Error {
 public:
  SpecSyntaxError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A Cayley table (or constructed group) that violates a group axiom.
class GroupAxiomError : public Error {
 public:
  GroupAxiomError(std::string axiom, std::vector<std::size_t> witness, const std::string& what)
      : Error(what), axiom_(std::move(axiom)), witness_(std::move(witness)) {}
  const std::string& axiom() const { return axiom_; }
  const std::vector<std::size_t>& witness() const { return witness_; }

 private:
  std::string axiom_;
  std::vector<std::size_t> witness_;
};

class OrderLimitError : public Error {
 public:
  using Error::Error;
};

class NotNilpotentError : public Error {
 public:
  using Error::Error;
};

class EmptyGraphError : public Error {
 public:
  using Error::Error;
};

class NotApplicableError : public Error {
 public:
  using Error::Error;
};

/// Graph exceeds a configured size bound for an exact algorithm.
class BoundExceededError : public Error {
 public:
  BoundExceededError(std::size_t n, std::size_t bound)
      : Error("graph with " + std::to_string(n) + " vertices exceeds bound " + std::to_string(bound)),
        n_(n), bound_(bound) {}
  std::size_t n() const { return n_; }
  std::size_t bound() const { return bound_; }

 private:
  std::size_t n_;
  std::size_t bound_;
};

/// Branch-and-bound ran out of nodes; carries the best bounds found so far.
class SearchBudgetExceeded : public Error {
 public:
  SearchBudgetExceeded(std::size_t lower, std::size_t upper)
      : Error("domination search budget exhausted; bounds [" + std::to_string(lower) + ", " +
              std::to_string(upper) + "]"),
        lower_(lower), upper_(upper) {}
  std::size_t lower() const { return lower_; }
  std::size_t upper() const { return upper_; }

 private:
  std::size_t lower_;
  std::size_t upper_;
};

class NonConvergence : public Error {
 public:
  NonConvergence(double off_norm, int sweeps)
      : Error("Jacobi iteration did not converge after " + std::to_string(sweeps) +
              " sweeps (off-diagonal norm " + std::to_string(off_norm) + ")"),
        off_norm_(off_norm) {}
  double off_norm() const { return off_norm_; }

 private:
  double off_norm_;
};

}  // namespace epg
