#include "ptmon/bigint.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace ptmon {

BigUint::BigUint(std::uint64_t value) {
  if (value != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(value));
    if (value >> 32) {
      limbs_.push_back(static_cast<std::uint32_t>(value >> 32));
    }
  }
}

void BigUint::trim() {
  while (!limbs_.empty() && limbs_.back() == 0) {
    limbs_.pop_back();
  }
}

std::uint64_t BigUint::to_uint64() const {
  if (!fits_uint64()) {
    throw std::overflow_error("BigUint: value does not fit in 64 bits");
  }
  std::uint64_t out = 0;
  if (limbs_.size() > 1) {
    out = static_cast<std::uint64_t>(limbs_[1]) << 32;
  }
  if (!limbs_.empty()) {
    out |= limbs_[0];
  }
  return out;
}

BigUint& BigUint::operator+=(const BigUint& other) {
  if (other.limbs_.size() > limbs_.size()) {
    limbs_.resize(other.limbs_.size(), 0);
  }
  std::uint64_t carry = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::uint64_t sum = carry + limbs_[i];
    if (i < other.limbs_.size()) {
      sum += other.limbs_[i];
    }
    limbs_[i] = static_cast<std::uint32_t>(sum);
    carry = sum >> 32;
  }
  if (carry != 0) {
    limbs_.push_back(static_cast<std::uint32_t>(carry));
  }
  return *this;
}

BigUint& BigUint::operator-=(const BigUint& other) {
  if (*this < other) {
    throw std::underflow_error("BigUint: subtraction underflow");
  }
  std::int64_t borrow = 0;
  for (std::size_t i = 0; i < limbs_.size(); ++i) {
    std::int64_t diff = static_cast<std::int64_t>(limbs_[i]) - borrow;
    if (i < other.limbs_.size()) {
      diff -= other.limbs_[i];
    }
    if (diff < 0) {
      diff += (std::int64_t{1} << 32);
      borrow = 1;
    } else {
      borrow = 0;
    }
    limbs_[i] = static_cast<std::uint32_t>(diff);
  }
  trim();
  return *this;
}

BigUint operator*(const BigUint& lhs, const BigUint& rhs) {
  BigUint out;
  if (lhs.is_zero() || rhs.is_zero()) {
    return out;
  }
  out.limbs_.assign(lhs.limbs_.size() + rhs.limbs_.size(), 0);
  for (std::size_t i = 0; i < lhs.limbs_.size(); ++i) {
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < rhs.limbs_.size(); ++j) {
      std::uint64_t cur = out.limbs_[i + j] + carry
                          + static_cast<std::uint64_t>(lhs.limbs_[i])
                                * rhs.limbs_[j];
      out.limbs_[i + j] = static_cast<std::uint32_t>(cur);
      carry = cur >> 32;
    }
    out.limbs_[i + rhs.limbs_.size()] += static_cast<std::uint32_t>(carry);
  }
  out.trim();
  return out;
}

BigUint& BigUint::operator*=(const BigUint& other) {
  *this = *this * other;
  return *this;
}

std::uint32_t BigUint::div_small(std::uint32_t divisor) {
  if (divisor == 0) {
    throw std::invalid_argument("BigUint: division by zero");
  }
  std::uint64_t rem = 0;
  for (std::size_t i = limbs_.size(); i-- > 0;) {
    std::uint64_t cur = (rem << 32) | limbs_[i];
    limbs_[i] = static_cast<std::uint32_t>(cur / divisor);
    rem = cur % divisor;
  }
  trim();
  return static_cast<std::uint32_t>(rem);
}

std::strong_ordering operator<=>(const BigUint& lhs, const BigUint& rhs) {
  if (lhs.limbs_.size() != rhs.limbs_.size()) {
    return lhs.limbs_.size() <=> rhs.limbs_.size();
  }
  for (std::size_t i = lhs.limbs_.size(); i-- > 0;) {
    if (lhs.limbs_[i] != rhs.limbs_[i]) {
      return lhs.limbs_[i] <=> rhs.limbs_[i];
    }
  }
  return std::strong_ordering::equal;
}

std::string BigUint::to_decimal() const {
  if (is_zero()) {
    return "0";
  }
  BigUint tmp = *this;
  std::string out;
  while (!tmp.is_zero()) {
    std::uint32_t chunk = tmp.div_small(1000000000u);
    for (int d = 0; d < 9; ++d) {
      out.push_back(static_cast<char>('0' + chunk % 10));
      chunk /= 10;
    }
  }
  while (out.size() > 1 && out.back() == '0') {
    out.pop_back();
  }
  std::reverse(out.begin(), out.end());
  return out;
}

BigUint BigUint::pow2(std::uint64_t exponent) {
  BigUint out;
  out.limbs_.assign(exponent / 32 + 1, 0);
  out.limbs_.back() = std::uint32_t{1} << (exponent % 32);
  return out;
}

BigUint BigUint::pow(const BigUint& base, std::uint64_t exponent) {
  BigUint result{1};
  BigUint sq = base;
  while (exponent != 0) {
    if (exponent & 1) {
      result *= sq;
    }
    exponent >>= 1;
    if (exponent != 0) {
      sq *= sq;
    }
  }
  return result;
}

std::ostream& operator<<(std::ostream& os, const BigUint& value) {
  return os << value.to_decimal();
}

}  // namespace ptmon
