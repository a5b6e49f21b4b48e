#pragma once

// Arithmetic in the quotient ring F_q[x]/(x^m - a). When x^m - a is irreducible
// this is the field F_{q^m}, with theta the coset of x and theta^m = a.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "binorder/prime_field.hpp"

namespace binorder {

/// The modulus x^m - a over F_q. Irreducibility is not required here.
struct BinomialRing {
  std::uint64_t q = 0;
  std::uint64_t m = 0;
  std::uint64_t a = 0;

  /// Throws InvalidField for a bad q, InvalidArgument for m < 1 or a outside [1, q).
  static BinomialRing make(std::uint64_t q, std::uint64_t m, std::uint64_t a);

  bool operator==(const BinomialRing&) const = default;
};

/// Element of F_q[x]/(x^m - a) as m dense coefficients; index d holds the coefficient of theta^d.
class ExtElement {
 public:
  /// Throws LengthMismatch unless coefficients.size() == m. Coefficients are reduced mod q.
  ExtElement(const BinomialRing& ring, std::vector<std::uint64_t> coefficients);

  static ExtElement zero(const BinomialRing& ring);
  static ExtElement one(const BinomialRing& ring);
  static ExtElement constant(const BinomialRing& ring, std::uint64_t c);
  static ExtElement theta(const BinomialRing& ring);
  /// c * theta^degree, reducing degree >= m through theta^m = a.
  static ExtElement monomial(const BinomialRing& ring, std::uint64_t c, std::uint64_t degree);
  /// c * theta^degree + b: the binomials the high-order construction works with.
  static ExtElement binomial(const BinomialRing& ring, std::uint64_t c, std::uint64_t degree,
                             std::uint64_t b);

  const BinomialRing& ring() const { return ring_; }
  std::span<const std::uint64_t> coefficients() const { return coeffs_; }
  PrimeFieldElement coefficient(std::size_t d) const { return {coeffs_.at(d), ring_.q}; }

  bool is_zero() const;
  bool is_one() const;
  /// Number of nonzero coefficients.
  std::size_t weight() const;

  ExtElement operator+(const ExtElement& o) const;
  ExtElement operator-(const ExtElement& o) const;
  ExtElement operator-() const;
  ExtElement operator*(const ExtElement& o) const;
  ExtElement& operator*=(const ExtElement& o) { return *this = *this * o; }

  /// Exact comparison; elements of different rings compare unequal.
  bool operator==(const ExtElement& o) const { return ring_ == o.ring_ && coeffs_ == o.coeffs_; }

  std::size_t hash() const;

 private:
  BinomialRing ring_;
  std::vector<std::uint64_t> coeffs_;
};

/// x^n by left-to-right square-and-multiply; pow(x, 0) = 1.
ExtElement pow(const ExtElement& x, const mpz_class& n);

/// x^q in O(m log q): theta^d maps to a^{floor(dq/m)} theta^{dq mod m}. Agrees with pow(x, q).
ExtElement frobenius(const ExtElement& x);
/// frobenius applied `times` times, i.e. x^{q^times}.
ExtElement frobenius(const ExtElement& x, std::uint64_t times);

/// x * (c theta^degree + b) in O(m), degree < m.
ExtElement mul_binomial(const ExtElement& x, std::uint64_t c, std::uint64_t degree, std::uint64_t b);

/// Canonical text `c_{m-1}*t^{m-1}+...+c_1*t+c_0`, every coefficient printed.
std::string to_string(const ExtElement& x);
/// Parses terms `c*t^d`, `c*t` or `c` joined by '+'; missing degrees are zero.
ExtElement parse_element(const BinomialRing& ring, std::string_view text);

std::ostream& operator<<(std::ostream& os, const ExtElement& x);

}  // namespace binorder

template <>
struct std::hash<binorder::ExtElement> {
  std::size_t operator()(const binorder::ExtElement& x) const noexcept { return x.hash(); }
};
