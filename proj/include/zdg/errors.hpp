#pragma once

#include <stdexcept>
#include <string>

namespace zdg {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define ZDG_DEFINE_ERROR(Name)          \
  class Name : public Error {           \
   public:                              \
    using Error::Error;                 \
  }

/// Malformed ring presentation, ideal, graph document or argument.
ZDG_DEFINE_ERROR(InvalidSpec);
/// A quotient-algebra presentation whose rewrite rules do not produce a ring
/// (failed axioms or a normal-form count different from the recorded order).
ZDG_DEFINE_ERROR(NonConfluentPresentation);
ZDG_DEFINE_ERROR(WholeRingIdeal);
ZDG_DEFINE_ERROR(NotRadical);
/// Input above a documented size guard.
ZDG_DEFINE_ERROR(TooLarge);
ZDG_DEFINE_ERROR(MTooLarge);
/// A bound was requested whose preconditions do not hold for the input.
ZDG_DEFINE_ERROR(HypothesisNotMet);
ZDG_DEFINE_ERROR(CliqueHypothesisViolated);

#undef ZDG_DEFINE_ERROR

}  // namespace zdg
