#pragma once

#include <stdexcept>
#include <string>

namespace linkslope {

/// An input violates an operation's precondition (CLI exit code 2).
class PreconditionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A character is not admissible for the link it is applied to.
class InadmissibleCharacter : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// The chosen method cannot decide the answer at this input.
class InconclusiveError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// Malformed textual or JSON input (CLI exit code 3).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position = npos)
      : std::runtime_error(position == npos ? what : what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace linkslope
