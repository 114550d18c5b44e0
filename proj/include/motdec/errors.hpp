#pragma once

#include <stdexcept>
#include <string>

namespace motdec {

/// Invalid descriptor data: bad permutations, divisibility violations,
/// malformed weights. Maps to CLI exit code 1.
class DescriptorError : public std::runtime_error {
public:
    explicit DescriptorError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Families or sizes outside the implemented scope. Maps to exit code 2.
class UnsupportedError : public std::runtime_error {
public:
    explicit UnsupportedError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Hard caps (group order, orbit counts, exterior algebra size). Exit code 2.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& msg) : std::runtime_error(msg) {}
};

/// An exact identity that the paper predicts failed to hold. Exit code 3.
class VerificationError : public std::runtime_error {
public:
    explicit VerificationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A structural self-consistency check failed; indicates a bug, not bad input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace motdec
