#pragma once

#include <stdexcept>
#include <string>

namespace zslab {

// Malformed user input (group strings, sequence text, bad parameters).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Operands live over different groups.
class GroupMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotADivisor : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A catalog truncated below D(G), or not covering the support of the target.
class CatalogIncomplete : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class FactorizationSetTooLarge : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Precondition of a search or construction does not hold for the given input.
class PreconditionFailed : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class GroupTooSmall : public PreconditionFailed {
 public:
  using PreconditionFailed::PreconditionFailed;
};

class NotCyclic : public PreconditionFailed {
 public:
  using PreconditionFailed::PreconditionFailed;
};

class PropertyPFails : public PreconditionFailed {
 public:
  using PreconditionFailed::PreconditionFailed;
};

class PropertyPStarFails : public PreconditionFailed {
 public:
  using PreconditionFailed::PreconditionFailed;
};

class SampleNotMaxElastic : public PreconditionFailed {
 public:
  using PreconditionFailed::PreconditionFailed;
};

class OddOrder : public PreconditionFailed {
 public:
  using PreconditionFailed::PreconditionFailed;
};

class NPlusOnePrime : public PreconditionFailed {
 public:
  using PreconditionFailed::PreconditionFailed;
};

class NPlusOneComposite : public PreconditionFailed {
 public:
  using PreconditionFailed::PreconditionFailed;
};

// A search hit its configured node limit.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace zslab
