#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace blockseq {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidBase : public Error {
public:
    using Error::Error;
};

class InvalidPattern : public Error {
public:
    using Error::Error;
};

// Raised by φ_w and the step builders when a word length is not a multiple
// of m^(|w|-1).
class WindowAlignmentError : public Error {
public:
    using Error::Error;
};

// A 0-word handed to the non-0-word builder, or vice versa.
class WrongVariantError : public Error {
public:
    using Error::Error;
};

class KernelOverflow : public Error {
public:
    using Error::Error;
};

// Re-validation at doubled fingerprint length split two identified kernel
// elements.
class KernelMismatch : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

} // namespace blockseq
