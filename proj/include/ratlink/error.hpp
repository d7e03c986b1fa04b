#pragma once

#include <stdexcept>
#include <string>

namespace ratlink {

// Every domain failure carries one of these codes so callers (and the CLI)
// can react without parsing message text.
enum class Errc {
    EmptyInput,
    ParseError,
    NonPositiveSite,
    FirstOrLastSiteTooSmall,
    NotATwoComponentLink,
    NotDivisible,
    UndefinedAtZero,
    SignPatternViolation,
    ZeroDeterminant,
    MoveNotAvailable,
    StateBudgetExceeded,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
  public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    Errc code() const noexcept { return code_; }

  private:
    Errc code_;
};

} // namespace ratlink
