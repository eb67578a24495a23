#pragma once

#include <stdexcept>

namespace fpt {

/// Invalid inputs: malformed parameters, models, or files. CLI exit code 2.
class ValidationError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Numerical failure at run time: singular systems, residue breaches,
/// non-convergent sums, infinite expectations. CLI exit code 3.
class NumericalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace fpt
