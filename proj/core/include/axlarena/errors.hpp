#pragma once

#include <stdexcept>
#include <string>

namespace axl {

// Base class for every error the library throws on purpose.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A payoff quadruple that is not a prisoner's dilemma, or a broken
// structural invariant (e.g. a lookup table of the wrong size).
class ConstraintViolation : public Error {
 public:
  using Error::Error;
};

// A parameter outside its admissible range. Keeps the field name so
// diagnostics can point at the offending setting.
class InvalidValue : public Error {
 public:
  InvalidValue(std::string field, const std::string& message)
      : Error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// A decision rule signalled an internal failure.
class StrategyFault : public Error {
 public:
  using Error::Error;
};

// A total lookup table was missing a key; only reachable through a
// construction bug, never through normal play.
class KeyMissing : public StrategyFault {
 public:
  using StrategyFault::StrategyFault;
};

// A strategy that needs the match length in advance was used in a
// probabilistic-ending match.
class LengthUnknown : public StrategyFault {
 public:
  using StrategyFault::StrategyFault;
};

class EmptyArchive : public Error {
 public:
  using Error::Error;
};

// Replicator step with zero mean fitness.
class DegenerateFitness : public Error {
 public:
  using Error::Error;
};

// A player name that does not resolve; carries the closest builtin name.
class UnknownStrategy : public Error {
 public:
  UnknownStrategy(std::string name, std::string suggestion)
      : Error("unknown strategy '" + name + "' (did you mean '" + suggestion + "'?)"),
        name_(std::move(name)),
        suggestion_(std::move(suggestion)) {}
  const std::string& name() const { return name_; }
  const std::string& suggestion() const { return suggestion_; }

 private:
  std::string name_;
  std::string suggestion_;
};

class IoFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace axl
