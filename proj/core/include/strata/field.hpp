#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace strata {

// Coefficient field: Z/p for a prime p, or the rationals when characteristic
// is zero.
struct FieldSpec {
  std::uint32_t characteristic = 2;

  bool is_rational() const { return characteristic == 0; }
  std::string name() const;
  // Accepts "2", "Z/3", "GF(5)", "0", "Q", "rational". Throws InputError.
  static FieldSpec parse(const std::string& text);
};

bool is_prime(std::uint64_t n);

class PrimeField {
 public:
  using value_type = std::uint32_t;

  // Throws InputError unless p is a prime below 2^31.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t characteristic() const { return p_; }
  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    return static_cast<value_type>(r < 0 ? r + p_ : r);
  }
  bool is_zero(value_type a) const { return a == 0; }
  value_type add(value_type a, value_type b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<value_type>(s >= p_ ? s - p_ : s);
  }
  value_type sub(value_type a, value_type b) const {
    return a >= b ? a - b : static_cast<value_type>(std::uint64_t{a} + p_ - b);
  }
  value_type neg(value_type a) const { return a == 0 ? 0 : p_ - a; }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(std::uint64_t{a} * b % p_);
  }
  value_type inv(value_type a) const;

 private:
  std::uint32_t p_;
};

class RationalField {
 public:
  using value_type = boost::multiprecision::cpp_rational;

  std::uint32_t characteristic() const { return 0; }
  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long v) const { return value_type(v); }
  bool is_zero(const value_type& a) const { return a == 0; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const;
};

// Exact conversion of a finite double to a rational.
RationalField::value_type exact_rational(double v);

}  // namespace strata
