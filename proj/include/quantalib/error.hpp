#ifndef QUANTALIB_ERROR_HPP
#define QUANTALIB_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace quantalib {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed or invalid input (unknown ids, broken axioms in loaded data).
class InputError : public Error {
public:
    using Error::Error;
};

/// Morphisms or distributors whose types do not line up.
class CompositionError : public Error {
public:
    using Error::Error;
};

/// The operation needs structure the value does not carry (e.g. an involution).
class CapabilityError : public Error {
public:
    using Error::Error;
};

/// A configured search or enumeration cap was exceeded.
class ResourceError : public Error {
public:
    ResourceError(std::string cap, std::uint64_t limit, const std::string& what)
        : Error(what + " (cap '" + cap + "' = " + std::to_string(limit) + ")"),
          cap_(std::move(cap)), limit_(limit) {}

    const std::string& cap() const noexcept { return cap_; }
    std::uint64_t limit() const noexcept { return limit_; }

private:
    std::string cap_;
    std::uint64_t limit_;
};

/// A construction produced output violating a property it guarantees.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

} // namespace quantalib

#endif
