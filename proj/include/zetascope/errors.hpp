#pragma once

#include <stdexcept>
#include <string>

namespace zetascope {

// Bad user input: malformed weights, out-of-range parameters, inconsistent data.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A numerical procedure failed to reach its accuracy contract.
struct tolerance_error : std::runtime_error {
  explicit tolerance_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Valid request outside the implemented catalog (e.g. quaternionic I_p, p > 1).
struct capability_error : std::runtime_error {
  explicit capability_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace zetascope
