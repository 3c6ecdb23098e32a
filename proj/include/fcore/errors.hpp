#ifndef FCORE_ERRORS_HPP
#define FCORE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace fcore {

/// Raised when an operation requires a reduced tree-diagram and gets an
/// unreduced one.
class NotReducedError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when an attachment point is not a leaf of the host automaton.
class NotALeafError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when a word does not label a path in an automaton.
class UnreadableError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised when quotient enumeration exceeds its hard cap.
class CapExceededError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Raised on malformed textual input; carries a position when known.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what, long position = -1)
        : std::runtime_error(what), position_(position) {}

    long position() const { return position_; }

private:
    long position_;
};

} // namespace fcore

#endif
