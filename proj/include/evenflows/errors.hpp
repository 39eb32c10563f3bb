#pragma once

#include <stdexcept>
#include <string>

namespace evenflows {

// Cross-checked quantities disagreed (closed form vs oracle, divisor vs
// weight classifier, ...). CLI maps this to exit code 2.
struct InvariantBreach : std::logic_error {
  explicit InvariantBreach(const std::string& what) : std::logic_error(what) {}
};

// A computation would exceed a configured cap. CLI maps this to exit code 3.
struct ResourceLimit : std::runtime_error {
  explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace evenflows
