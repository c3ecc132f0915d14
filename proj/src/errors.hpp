#pragma once

#include <stdexcept>
#include <string>

namespace xprod {

enum class ErrorCode {
    invalid_input,
    parse_error,
    not_a_group,
    not_in_algebra,
    not_psd,
    action_violation,
    too_large,
    system_mismatch,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

} // namespace xprod
