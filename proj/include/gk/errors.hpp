#pragma once

#include <stdexcept>
#include <string>

namespace gk {

// Every failure carries a short kind name (e.g. "NotBipartite") so that the
// CLI and tests can match on it without parsing the message.
class Error : public std::runtime_error {
public:
    Error(std::string kind, std::string detail)
        : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)), detail_(std::move(detail)) {}
    const std::string& kind() const noexcept { return kind_; }
    // the message without the kind prefix
    const std::string& detail() const noexcept { return detail_; }

private:
    std::string kind_;
    std::string detail_;
};

// Raised for malformed user input (files, flags); the CLI maps it to exit 2.
class InputError : public Error {
public:
    using Error::Error;
};

[[noreturn]] inline void fail(const std::string& kind, const std::string& what) {
    throw Error(kind, what);
}

} // namespace gk
