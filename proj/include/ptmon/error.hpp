#ifndef PTMON_ERROR_HPP_
#define PTMON_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ptmon {

// Thrown when an enumeration, closure, or subset search would exceed the
// configured budget.  `reached` holds the partial progress made before
// giving up: the number of elements produced so far for enumerations and
// closures, or the largest subset size fully ruled out for rank searches.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t reached)
      : std::runtime_error(what), reached_(reached) {}

  std::uint64_t reached() const noexcept { return reached_; }

 private:
  std::uint64_t reached_;
};

}  // namespace ptmon

#endif  // PTMON_ERROR_HPP_
