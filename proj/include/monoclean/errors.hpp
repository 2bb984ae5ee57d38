#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace monoclean {

/// Two operands were built over rings with different variable counts.
class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Text input that does not follow the monomial / ideal syntax.
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::string token, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position) + " near '" +
                              token + "'"),
        token_(std::move(token)),
        position_(position) {}

  const std::string& token() const noexcept { return token_; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::string token_;
  std::size_t position_;
};

/// Operation called outside its mathematical domain (e.g. decomposing the zero ideal).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A documented precondition of the operation does not hold for the arguments.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A hard resource cap was hit. Never silently truncated.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Inconsistent corpus or harness configuration.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace monoclean
