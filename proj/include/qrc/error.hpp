#pragma once

#include <stdexcept>
#include <string>

namespace qrc {

enum class ErrorCode {
    InvalidArgument,
    Io,
    Format,
    Limit,
    Internal,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string &msg)
        : std::runtime_error(msg), code_(code) {}

    ErrorCode code() const { return code_; }

  private:
    ErrorCode code_;
};

inline void require(bool cond, ErrorCode code, const std::string &msg) {
    if (!cond)
        throw Error(code, msg);
}

} // namespace qrc
