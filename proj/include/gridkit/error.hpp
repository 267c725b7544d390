#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gridkit {

enum class ErrorCode {
  NotAPermutation,
  Collision,
  TooSmall,
  ParseError,
  IndexOutOfRange,
  IllegalCommutation,
  NotInterleaved,
  NotABandSite,
  WrongBandClass,
  NotDestabilizable,
  TrivialConfiguration,
  BudgetExhausted,
  UnknownName,
  UnknownEntry,
  DegenerateInput,
  InvalidArgument,
};

std::string_view error_name(ErrorCode code) noexcept;

// Every domain failure in the library is reported through this type; the CLI
// prints error_name(code()) and exits with status 1.
class GridError : public std::runtime_error {
 public:
  GridError(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gridkit
