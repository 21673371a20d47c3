#pragma once

#include <stdexcept>
#include <string>

namespace floquet_echo {

/// Invalid argument supplied by a caller (bad size, non-finite value, empty list, ...).
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A documented precondition on an input object does not hold (e.g. non-unitary propagator).
class PreconditionError : public std::logic_error {
public:
    explicit PreconditionError(const std::string& what) : std::logic_error(what) {}
};

/// Input is valid but admits no unique answer (zero Hamiltonian has no unique ground state).
class DegenerateInputError : public std::domain_error {
public:
    explicit DegenerateInputError(const std::string& what) : std::domain_error(what) {}
};

class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace floquet_echo
