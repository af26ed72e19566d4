#pragma once

#include <stdexcept>
#include <string>

namespace greenbound {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// z lies (numerically) in the group orbit of w, so a singular sum diverges.
class OrbitCoincidence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedFamily : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The compactified quotient has genus zero; the canonical (1,1)-form is undefined.
class GenusZero : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NonConvergent : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Brute-force search box does not contain every candidate matrix.
class EntryBoundTooSmall : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two independent counting routes disagreed.
class CertificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace greenbound
