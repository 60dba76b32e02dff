#pragma once

#include <stdexcept>
#include <string>

namespace mrenyi {

// Malformed caller data: size mismatches, empty inputs, bad files.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Parameter outside its documented domain (sigma <= 0, alpha <= 0, ...).
class ParameterError : public std::invalid_argument {
public:
    explicit ParameterError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Numerical breakdown: eigensolver failure, badly non-PSD input.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace mrenyi
