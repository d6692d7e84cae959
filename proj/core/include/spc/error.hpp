#pragma once

#include <stdexcept>
#include <string>

namespace spc {

enum class ErrorCode {
  EmptyCloud,
  GridOverflow,
  CodeOutOfRange,
  BatchOverflow,
  TooFewPoints,
  LengthMismatch,
  NonFinite,
  DuplicateCell,
  SingularPose,
  ClassOutOfRange,
  NoValidClasses,
  ShapeMismatch,
  InvalidArgument,
  IoError,
  ParseError,
};

const char* error_code_name(ErrorCode code);

/// Library-wide failure type. code() is stable and machine-parsable;
/// the CLI renders failures as "error: <Code>: <detail>".
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + detail),
        code_(code),
        detail_(detail) {}

  ErrorCode code() const { return code_; }
  const std::string& detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace spc
