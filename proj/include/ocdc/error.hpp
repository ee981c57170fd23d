#ifndef OCDC_ERROR_HPP
#define OCDC_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ocdc {

// Parameters outside an operation's domain (cycle(2), non-cubic host, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Structurally malformed input: loops, repeated cycle vertices, bad rotations.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation's precondition on its mathematical input does not hold,
// e.g. a claimed CDC that covers some edge three times.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A certificate does not have the arc structure a surgery relies on.
class CertificateInconsistency : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Requested a small cover of one of the known exceptions (K4, K6).
class NoSocdcExists : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotPlanarEmbedding : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A search ran out of budget where the caller needed an answer.
class Unresolved : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ocdc

#endif  // OCDC_ERROR_HPP
