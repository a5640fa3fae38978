#pragma once

#include <stdexcept>
#include <string>

namespace weylhodge {

// Base of every error the engine raises. The CLI maps the concrete type to a
// process exit code, so new error kinds should derive from one of these.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: bad partition, unsupported group, index out of range.
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A desk-scale guard refused the request (tensor space or group too large).
class ResourceLimit : public Error {
public:
    using Error::Error;
};

/// The input is well-formed but outside what the method can certify.
class Refusal : public Error {
public:
    Refusal(std::string rule, const std::string& message)
        : Error(message), rule_(std::move(rule)) {}
    const std::string& rule() const noexcept { return rule_; }

private:
    std::string rule_;
};

} // namespace weylhodge
