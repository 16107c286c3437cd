#pragma once

#include <stdexcept>
#include <string>

namespace hyperfuse {

// Base class for all library errors.
class error : public std::runtime_error {
public:
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input (scalar literal or object file).
class parse_error : public error {
public:
    parse_error(std::string message, int line, int col)
        : error("parse error at " + std::to_string(line) + ":" + std::to_string(col) +
                ": " + message),
          line_(line), col_(col), message_(std::move(message)) {}

    int line() const { return line_; }
    int col() const { return col_; }
    const std::string& message() const { return message_; }

private:
    int line_;
    int col_;
    std::string message_;
};

class division_by_zero : public error {
public:
    division_by_zero() : error("division by zero") {}
};

// Arithmetic attempted between scalars over incompatible radicands,
// or a value does not fit in the declared quadratic field.
class field_mismatch : public error {
public:
    explicit field_mismatch(const std::string& what) : error(what) {}
};

// A result requires an algebraic number of degree > 2 that cannot be
// represented exactly.
class unsupported_field : public error {
public:
    explicit unsupported_field(const std::string& what) : error(what) {}
};

// An interval query could not be decided before the interval width
// dropped below the configured precision floor.
class precision_floor_reached : public error {
public:
    explicit precision_floor_reached(const std::string& what)
        : error("precision floor reached: " + what) {}
};

// A postcondition the theory guarantees failed; indicates a bug upstream.
class internal_inconsistency : public error {
public:
    explicit internal_inconsistency(const std::string& what)
        : error("internal consistency failure: " + what) {}
};

} // namespace hyperfuse
