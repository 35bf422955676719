#include "strata/field.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>

#include "strata/errors.hpp"

namespace strata {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::string FieldSpec::name() const {
  return is_rational() ? "Q" : "Z/" + std::to_string(characteristic);
}

FieldSpec FieldSpec::parse(const std::string& text) {
  std::string t;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(static_cast<char>(std::tolower(c)));
  }
  if (t == "q" || t == "rational" || t == "rationals" || t == "0") return FieldSpec{0};
  std::string digits = t;
  if (digits.rfind("z/", 0) == 0) {
    digits = digits.substr(2);
  } else if (digits.rfind("gf(", 0) == 0 && digits.back() == ')') {
    digits = digits.substr(3, digits.size() - 4);
  }
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit) || digits.size() > 10) {
    throw InputError("unrecognised field '" + text + "'");
  }
  std::uint64_t p = std::stoull(digits);
  if (p >= (1ull << 31) || !is_prime(p)) {
    throw InputError("field characteristic must be a prime below 2^31, got " + digits);
  }
  return FieldSpec{static_cast<std::uint32_t>(p)};
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p)) throw InputError("Z/p requires a prime p below 2^31");
}

PrimeField::value_type PrimeField::inv(value_type a) const {
  if (a == 0) throw PreconditionError("division by zero in Z/p");
  // Fermat: a^(p-2).
  std::uint64_t result = 1, base = a, e = p_ - 2;
  while (e) {
    if (e & 1) result = result * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<value_type>(result);
}

RationalField::value_type RationalField::inv(const value_type& a) const {
  if (a == 0) throw PreconditionError("division by zero in Q");
  return 1 / a;
}

RationalField::value_type exact_rational(double v) {
  if (!std::isfinite(v)) throw InputError("non-finite coordinate");
  if (v == 0.0) return 0;
  int exp = 0;
  double mant = std::frexp(v, &exp);
  // mant * 2^53 is an integer for every finite double.
  auto m = static_cast<long long>(std::ldexp(mant, 53));
  exp -= 53;
  using boost::multiprecision::cpp_int;
  cpp_int num = m;
  cpp_int den = 1;
  if (exp > 0) {
    num <<= exp;
  } else {
    den <<= -exp;
  }
  return RationalField::value_type(num, den);
}

}  // namespace strata
