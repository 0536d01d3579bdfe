#ifndef WELLCAST_ERRORS_HPP
#define WELLCAST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wellcast {

// Error categories map 1:1 onto CLI exit codes (see tools/).
struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Malformed input schema: missing columns, unknown attribute codes.
struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& msg) : std::runtime_error(msg) {}
};

// Data integrity violations: duplicate dates, empty attributes, bad splits.
struct DataError : std::runtime_error {
    explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Non-finite intermediates, zero-variance scaling, diverged training.
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace wellcast

#endif  // WELLCAST_ERRORS_HPP
