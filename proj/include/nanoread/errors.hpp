#pragma once

#include <stdexcept>
#include <string>

namespace nanoread {

/// Precondition violation: wrong lengths, out-of-range parameters, bad indices.
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// No codeword is consistent with the received read.
class DecodingFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A received read that cannot have come from a single deletion (adjacent gap > 2).
class MalformedInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parameter outside the supported regime (e.g. two-read reconstruction with window 1).
class UnsupportedParameter : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Two reads that do not share a common source read vector.
class InconsistentInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A proven structural property failed to hold. Never expected in practice.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Exhaustive enumeration requested beyond the guarded size.
class ResourceLimit : public std::length_error {
public:
    using std::length_error::length_error;
};

} // namespace nanoread
