#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace radial {

using Integer = mpz_class;
using Rational = mpq_class;

/// Malformed input: bad indices, broken Cayley tables, unparsable documents,
/// operands built over different group specs.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called outside the hypotheses it is defined for.
class PreconditionError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace radial
