#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qid {

enum class ErrorCode {
  IoError,
  EncodingError,
  ParseError,
  PolarityConflict,
  DimensionMismatch,
  EmptyDataset,
  SingleClass,
  NegativeFeature,
  TooLarge,
  InvalidLabel,
  DuplicateId,
  SchemaMismatch,
  VersionMismatch,
  CorruptModel,
  LengthMismatch,
  BadParams,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above so
// callers (notably the CLI) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qid
