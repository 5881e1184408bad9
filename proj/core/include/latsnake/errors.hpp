#pragma once

#include <stdexcept>
#include <string>

namespace latsnake {

/// Caller supplied something outside an operation's domain.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A configured size cap would be exceeded; the message carries an estimate.
class CapExceeded : public InvalidInput {
public:
    using InvalidInput::InvalidInput;
};

/// An internal identity failed to hold. Indicates a bug, not bad input.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace latsnake
