#pragma once

#include <stdexcept>
#include <string>

namespace hinglish {

// Bad configuration or bad input schema: caller-side mistakes, CLI exit code 1.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Unreadable/unwritable files and malformed file contents, CLI exit code 2.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// A line that violates a file format; carries the 1-based line number.
class ParseError : public IoError {
public:
    ParseError(const std::string& file, size_t line, const std::string& msg)
        : IoError(file + ":" + std::to_string(line) + ": " + msg), line_(line) {}
    size_t line() const { return line_; }

private:
    size_t line_;
};

// An operation was handed data that breaks its contract (e.g. OOV token
// reaching the output assembler).
class ContractViolation : public std::logic_error {
public:
    explicit ContractViolation(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace hinglish
