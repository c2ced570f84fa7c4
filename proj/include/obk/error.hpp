#pragma once

#include <stdexcept>
#include <string>

namespace obk {

// Every invalid input surfaces as this type; the CLI maps it to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace obk
