#pragma once

#include <stdexcept>
#include <string>

namespace modrep {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad arguments: non-prime characteristic, mismatched shapes, foreign groups.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A randomized search (submodule, splitting endomorphism, isomorphism) ran
/// out of attempts. Retrying with another seed or more retries may succeed.
class SearchExhausted : public Error {
 public:
  SearchExhausted(const std::string& what, unsigned long long seed)
      : Error(what + " (seed " + std::to_string(seed) + ")"), seed_(seed) {}
  unsigned long long seed() const noexcept { return seed_; }

 private:
  unsigned long long seed_;
};

/// A simple module whose endomorphism ring is bigger than the field.
class NonSplitField : public Error {
 public:
  using Error::Error;
};

/// A hypothesis of a construction does not hold (unstable line, p | m, ...).
class HypothesisViolation : public Error {
 public:
  using Error::Error;
};

/// An internal postcondition failed; always indicates a bug.
class AssertionFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace modrep
