#pragma once

#include <stdexcept>
#include <string>

namespace infl {

/// Bad or inconsistent input data (malformed rows, nonpositive values,
/// mismatched grids, too few points).
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A computation produced a non-finite or otherwise unusable result.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace infl
