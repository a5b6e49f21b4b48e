#pragma once

// Arithmetic in F_q for a prime 5 <= q < 2^32.

#include <cstdint>
#include <iosfwd>

#include <gmpxx.h>

namespace binorder {

/// Element of F_q. Carries its modulus; mixing moduli raises ModulusMismatch.
class PrimeFieldElement {
 public:
  /// Reduces `value` modulo q. Does not validate q; use PrimeField for that.
  PrimeFieldElement(std::uint64_t value, std::uint64_t modulus)
      : value_(value % modulus), modulus_(modulus) {}

  std::uint64_t value() const { return value_; }
  std::uint64_t modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }

  PrimeFieldElement operator+(const PrimeFieldElement& o) const;
  PrimeFieldElement operator-(const PrimeFieldElement& o) const;
  PrimeFieldElement operator*(const PrimeFieldElement& o) const;
  PrimeFieldElement operator-() const { return {value_ == 0 ? 0 : modulus_ - value_, modulus_}; }

  PrimeFieldElement pow(std::uint64_t exponent) const;
  PrimeFieldElement pow(const mpz_class& exponent) const;
  /// Throws ZeroElement for 0.
  PrimeFieldElement inverse() const;

  bool operator==(const PrimeFieldElement&) const = default;

 private:
  std::uint64_t value_;
  std::uint64_t modulus_;
};

std::ostream& operator<<(std::ostream& os, const PrimeFieldElement& x);

/// A validated prime field. Construction throws InvalidField unless q is a prime in [5, 2^32).
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t q);

  std::uint64_t modulus() const { return q_; }
  PrimeFieldElement element(std::uint64_t v) const { return {v, q_}; }
  PrimeFieldElement zero() const { return {0, q_}; }
  PrimeFieldElement one() const { return {1, q_}; }

 private:
  std::uint64_t q_;
};

/// Smallest g >= 2 of multiplicative order q - 1.
PrimeFieldElement find_primitive_element(std::uint64_t q);

/// Exact multiplicative order of a nonzero element (divides q - 1).
std::uint64_t element_order(const PrimeFieldElement& x);

}  // namespace binorder
