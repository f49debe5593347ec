#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qk {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed digraph, out-of-range vertex, broken split partition.
class InvalidInput : public Error {
public:
    using Error::Error;
};

// An algorithm was called on an input outside its domain
// (e.g. a digraph with sinks handed to a sink-free construction).
class PreconditionError : public Error {
public:
    using Error::Error;
};

// Exhaustive search refused because the instance exceeds the practical cap.
class CapExceeded : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

// A claimed quasi-kernel failed verification; `offender` is the first vertex
// that breaks independence or has no path of length <= 2 into the set.
class NotQuasiKernel : public Error {
public:
    NotQuasiKernel(std::uint32_t offender, const std::string& reason)
        : Error(reason), offender_(offender) {}

    std::uint32_t offender() const noexcept { return offender_; }

private:
    std::uint32_t offender_;
};

// Post-verification of a constructive result failed. Always a library bug.
class VerificationFailure : public Error {
public:
    using Error::Error;
};

} // namespace qk
