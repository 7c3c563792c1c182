#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "mmalign/bigint.hpp"

namespace mmalign {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The zero column is never an admissible step.
class ZeroStepError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class InfiniteStepSet : public Error {
 public:
  using Error::Error;
};

class EnumerationCapExceeded : public Error {
 public:
  EnumerationCapExceeded(Count count, Count cap)
      : Error("enumeration cap exceeded: " + count.get_str() + " alignments (cap " + cap.get_str() + ")"),
        count_(std::move(count)) {}

  const Count& count() const { return count_; }

 private:
  Count count_;
};

class NoAlignmentExists : public Error {
 public:
  using Error::Error;
};

class UnboundedParts : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class UnknownFormula : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position, std::string token)
      : Error(what + " at position " + std::to_string(position) + (token.empty() ? "" : " near '" + token + "'")),
        position_(position),
        token_(std::move(token)) {}

  std::size_t position() const { return position_; }
  const std::string& token() const { return token_; }

 private:
  std::size_t position_;
  std::string token_;
};

}  // namespace mmalign
