#ifndef KGACT_ERROR_HPP
#define KGACT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace kgact {

/// Base class for all library errors.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad input shapes, malformed files, violated manifest invariants. Exit code 2.
class validation_error : public error {
public:
    using error::error;
};

/// Non-finite values, diverged training, failed numeric self-checks. Exit code 3.
class numeric_error : public error {
public:
    using error::error;
};

/// Bad command-line usage. Exit code 1.
class usage_error : public error {
public:
    using error::error;
};

} // namespace kgact

#endif // KGACT_ERROR_HPP
