#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace liealg {

using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown when an argument violates an operation's precondition
/// (bad rank, non-dominant weight, label outside the alcove, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an internal consistency check fails, e.g. a Dynkin index that
/// is not an integer or a branching residual that goes negative.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Exact conversion of an integral rational; throws InvariantError otherwise.
inline Integer to_integer(const Rational& q, const char* what) {
  if (q.get_den() != 1) {
    throw InvariantError(std::string(what) + ": expected an integer, got " +
                         q.get_str());
  }
  return q.get_num();
}

}  // namespace liealg
