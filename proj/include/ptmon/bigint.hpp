#ifndef PTMON_BIGINT_HPP_
#define PTMON_BIGINT_HPP_

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace ptmon {

// Unsigned arbitrary-precision integer.  All counts produced by this
// library (idempotent counts, generating-set counts, ranks) are exact;
// quantities like 2^binom(n,2) overflow fixed-width types quickly, so
// every counting routine returns a BigUint.
//
// Only the operations the counting formulas need are provided: addition,
// subtraction (underflow throws), multiplication, powers, small division
// (for decimal rendering and exact binomial arithmetic) and comparisons.
class BigUint {
 public:
  BigUint() = default;
  BigUint(std::uint64_t value);  // implicit: counts mix with literals

  bool is_zero() const noexcept { return limbs_.empty(); }

  bool fits_uint64() const noexcept { return limbs_.size() <= 2; }
  std::uint64_t to_uint64() const;  // throws std::overflow_error

  std::string to_decimal() const;

  BigUint& operator+=(const BigUint& other);
  BigUint& operator-=(const BigUint& other);  // throws std::underflow_error
  BigUint& operator*=(const BigUint& other);

  friend BigUint operator+(BigUint lhs, const BigUint& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend BigUint operator-(BigUint lhs, const BigUint& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend BigUint operator*(const BigUint& lhs, const BigUint& rhs);

  // Divides in place by a small divisor and returns the remainder.
  std::uint32_t div_small(std::uint32_t divisor);

  friend bool operator==(const BigUint& lhs, const BigUint& rhs) {
    return lhs.limbs_ == rhs.limbs_;
  }
  friend std::strong_ordering operator<=>(const BigUint& lhs,
                                          const BigUint& rhs);

  static BigUint pow2(std::uint64_t exponent);
  static BigUint pow(const BigUint& base, std::uint64_t exponent);

 private:
  void trim();

  // Base 2^32 limbs, least significant first, no trailing zero limbs.
  // An empty vector represents zero.
  std::vector<std::uint32_t> limbs_;
};

std::ostream& operator<<(std::ostream& os, const BigUint& value);

}  // namespace ptmon

#endif  // PTMON_BIGINT_HPP_
