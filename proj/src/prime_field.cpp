#include "binorder/prime_field.hpp"

#include <ostream>
#include <string>

#include "binorder/error.hpp"
#include "binorder/integers.hpp"

namespace binorder {

namespace {

void require_same_modulus(const PrimeFieldElement& x, const PrimeFieldElement& y) {
  if (x.modulus() != y.modulus())
    throw Error(ErrorKind::ModulusMismatch, "elements of F_" + std::to_string(x.modulus()) +
                                                " and F_" + std::to_string(y.modulus()));
}

}  // namespace

PrimeFieldElement PrimeFieldElement::operator+(const PrimeFieldElement& o) const {
  require_same_modulus(*this, o);
  const std::uint64_t s = value_ + o.value_;
  return {s >= modulus_ ? s - modulus_ : s, modulus_};
}

PrimeFieldElement PrimeFieldElement::operator-(const PrimeFieldElement& o) const {
  require_same_modulus(*this, o);
  return {value_ >= o.value_ ? value_ - o.value_ : value_ + modulus_ - o.value_, modulus_};
}

PrimeFieldElement PrimeFieldElement::operator*(const PrimeFieldElement& o) const {
  require_same_modulus(*this, o);
  return {mulmod_u64(value_, o.value_, modulus_), modulus_};
}

PrimeFieldElement PrimeFieldElement::pow(std::uint64_t exponent) const {
  return {powmod_u64(value_, exponent, modulus_), modulus_};
}

PrimeFieldElement PrimeFieldElement::pow(const mpz_class& exponent) const {
  mpz_class r, base = value_, mod = modulus_;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), mod.get_mpz_t());
  return {mpz_get_ui(r.get_mpz_t()), modulus_};
}

PrimeFieldElement PrimeFieldElement::inverse() const {
  if (value_ == 0) throw Error(ErrorKind::ZeroElement, "zero has no inverse");
  return pow(modulus_ - 2);
}

std::ostream& operator<<(std::ostream& os, const PrimeFieldElement& x) { return os << x.value(); }

PrimeField::PrimeField(std::uint64_t q) : q_(q) {
  if (q < 5 || q >= (std::uint64_t{1} << 32) || !is_prime_u64(q))
    throw Error(ErrorKind::InvalidField,
                "F_" + std::to_string(q) + " is not a supported prime field (need prime 5 <= q < 2^32)");
}

std::uint64_t element_order(const PrimeFieldElement& x) {
  if (x.is_zero()) throw Error(ErrorKind::ZeroElement, "zero has no multiplicative order");
  const std::uint64_t n = x.modulus() - 1;
  const Factorization f = factorize(mpz_class(static_cast<unsigned long>(n)));
  const mpz_class order = reduce_order(mpz_class(static_cast<unsigned long>(n)), f,
                                       [&](const mpz_class& e) { return x.pow(e).value() == 1; });
  return mpz_get_ui(order.get_mpz_t());
}

PrimeFieldElement find_primitive_element(std::uint64_t q) {
  const PrimeField field(q);
  const std::uint64_t n = q - 1;
  const Factorization f = factorize(mpz_class(static_cast<unsigned long>(n)));
  for (std::uint64_t g = 2; g < q; ++g) {
    const PrimeFieldElement x = field.element(g);
    bool generator = true;
    for (const auto& [p, e] : f) {
      if (x.pow(n / mpz_get_ui(p.get_mpz_t())).value() == 1) {
        generator = false;
        break;
      }
    }
    if (generator) return x;
  }
  throw Error(ErrorKind::InvalidField, "no primitive element found in F_" + std::to_string(q));
}

}  // namespace binorder
