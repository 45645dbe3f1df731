#ifndef TRANSLIT_ERRORS_HPP
#define TRANSLIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace translit {

// Bad options, bounds, or table construction. CLI maps this to exit 1.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input data: encoding errors, unparsable lines, length
// mismatches between parallel files. CLI maps this to exit 2.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Numerical failure (EM divergence, empty training data for a model).
// CLI maps this to exit 3.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace translit

#endif
