#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace semitwist {

/// Kinds of invariant violations surfaced during structure construction and
/// morphism checks. Each carries the first witness found in canonical scan
/// order, so failures are reproducible.
enum class Violation {
  NotAbelianAddition,
  NotAssociative,
  NotDistributive,
  NoIdentity,
  BadInverse,
  BadTable,
  NotAHomomorphism,
  UnknownAutomorphism,
  NotOverAut,
  NotUnderR,
  NotInvariantFactors,
  BadRecipe,
};

const char* to_string(Violation v);

class validation_error : public std::runtime_error {
 public:
  validation_error(Violation kind, std::string witness, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail +
                           (witness.empty() ? "" : " [witness " + witness + "]")),
        kind_(kind),
        witness_(std::move(witness)) {}

  Violation kind() const { return kind_; }
  const std::string& witness() const { return witness_; }

 private:
  Violation kind_;
  std::string witness_;
};

class cap_exceeded : public std::runtime_error {
 public:
  cap_exceeded(std::string cap, long long limit, long long requested)
      : std::runtime_error("cap '" + cap + "' exceeded: need " + std::to_string(requested) +
                           ", limit " + std::to_string(limit)),
        cap_(std::move(cap)),
        limit_(limit),
        requested_(requested) {}

  const std::string& cap() const { return cap_; }
  long long limit() const { return limit_; }
  long long requested() const { return requested_; }

 private:
  std::string cap_;
  long long limit_;
  long long requested_;
};

class parse_error : public std::runtime_error {
 public:
  parse_error(int line, int column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ":" + std::to_string(column) + ": " +
                           message),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace semitwist
