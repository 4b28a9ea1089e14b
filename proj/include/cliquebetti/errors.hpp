#ifndef CLIQUEBETTI_ERRORS_HPP
#define CLIQUEBETTI_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cliquebetti {

// Every failure the library reports carries one of these codes so that
// callers (and the C API) can map errors without string matching.
enum class ErrorCode {
    Parse,            // malformed input text (carries line info in message)
    InvalidArgument,  // bad parameter value
    Precondition,     // violated operation precondition (e.g. norm > 1)
    Limit,            // exact/brute-force guard exceeded
    Structure,        // dimension or shape mismatch between objects
    Io,               // file not found / unreadable
    Unsupported,      // valid input outside the supported configuration
    Internal,         // invariant broken inside the library
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void raise(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace cliquebetti

#endif
