#pragma once

#include <stdexcept>
#include <string>

namespace itkc {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad input: parse failures, validation failures, domain errors.
class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& what) : Error(what) {}
};

// The requested quantity is only defined when every cabling coefficient is
// positive in the preferred framing; the input is outside that regime.
class UnsupportedRegime : public Error {
public:
    explicit UnsupportedRegime(const std::string& what) : Error(what) {}
};

// An identity the library relies on failed to hold at runtime.
class InternalInvariant : public Error {
public:
    explicit InternalInvariant(const std::string& what) : Error(what) {}
};

inline void require(bool cond, const std::string& what) {
    if (!cond)
        throw InvalidArgument(what);
}

inline void ensure(bool cond, const std::string& what) {
    if (!cond)
        throw InternalInvariant(what);
}

} // namespace itkc
