#pragma once

#include <stdexcept>
#include <string>

namespace cogweave {

// Hard failure while reading a CPL or ontology document. line is 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Request over a domain element that does not exist or is no longer current
// (unhoused cycle concept, stale counting violation, empty script).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Workspace save/load failure: unreadable file, corrupt payload, or a
// format version this build does not speak.
class PersistError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace cogweave
