#include "binorder/extension_field.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>

#include "binorder/error.hpp"
#include "binorder/integers.hpp"

namespace binorder {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

void require_same_ring(const ExtElement& x, const ExtElement& y) {
  if (!(x.ring() == y.ring()))
    throw Error(ErrorKind::SpecMismatch, "elements belong to different extension rings");
}

// a^e in F_q with e reduced mod q - 1 (a is a unit).
u64 a_power(const BinomialRing& ring, u64 e) { return powmod_u64(ring.a, e % (ring.q - 1), ring.q); }

u64 parse_u64(std::string_view s, std::string_view context) {
  u64 v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw Error(ErrorKind::InvalidArgument, "malformed element term '" + std::string(context) + "'");
  return v;
}

}  // namespace

BinomialRing BinomialRing::make(u64 q, u64 m, u64 a) {
  const PrimeField field(q);
  if (m < 1) throw Error(ErrorKind::InvalidArgument, "extension degree must be at least 1");
  if (a == 0 || a >= q) throw Error(ErrorKind::InvalidArgument, "a must lie in [1, q)");
  return BinomialRing{field.modulus(), m, a};
}

ExtElement::ExtElement(const BinomialRing& ring, std::vector<u64> coefficients)
    : ring_(ring), coeffs_(std::move(coefficients)) {
  if (coeffs_.size() != ring_.m)
    throw Error(ErrorKind::LengthMismatch, "expected " + std::to_string(ring_.m) +
                                               " coefficients, got " + std::to_string(coeffs_.size()));
  for (auto& c : coeffs_) c %= ring_.q;
}

ExtElement ExtElement::zero(const BinomialRing& ring) { return {ring, std::vector<u64>(ring.m, 0)}; }

ExtElement ExtElement::one(const BinomialRing& ring) { return constant(ring, 1); }

ExtElement ExtElement::constant(const BinomialRing& ring, u64 c) {
  std::vector<u64> v(ring.m, 0);
  v[0] = c % ring.q;
  return {ring, std::move(v)};
}

ExtElement ExtElement::theta(const BinomialRing& ring) { return monomial(ring, 1, 1); }

ExtElement ExtElement::monomial(const BinomialRing& ring, u64 c, u64 degree) {
  std::vector<u64> v(ring.m, 0);
  v[degree % ring.m] = mulmod_u64(c % ring.q, a_power(ring, degree / ring.m), ring.q);
  return {ring, std::move(v)};
}

ExtElement ExtElement::binomial(const BinomialRing& ring, u64 c, u64 degree, u64 b) {
  return monomial(ring, c, degree) + constant(ring, b);
}

bool ExtElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](u64 c) { return c == 0; });
}

bool ExtElement::is_one() const {
  return coeffs_[0] == 1 && std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](u64 c) { return c == 0; });
}

std::size_t ExtElement::weight() const {
  return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](u64 c) { return c != 0; }));
}

ExtElement ExtElement::operator+(const ExtElement& o) const {
  require_same_ring(*this, o);
  std::vector<u64> r(ring_.m);
  for (std::size_t d = 0; d < r.size(); ++d) {
    const u64 s = coeffs_[d] + o.coeffs_[d];
    r[d] = s >= ring_.q ? s - ring_.q : s;
  }
  return {ring_, std::move(r)};
}

ExtElement ExtElement::operator-(const ExtElement& o) const { return *this + (-o); }

ExtElement ExtElement::operator-() const {
  std::vector<u64> r(coeffs_);
  for (auto& c : r) c = c == 0 ? 0 : ring_.q - c;
  return {ring_, std::move(r)};
}

ExtElement ExtElement::operator*(const ExtElement& o) const {
  require_same_ring(*this, o);
  const std::size_t m = ring_.m;
  const u64 q = ring_.q;
  // Schoolbook product of length 2m - 1, then theta^{m+d} -> a theta^d.
  std::vector<u128> acc(2 * m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    const u64 xi = coeffs_[i];
    if (xi == 0) continue;
    const u64* y = o.coeffs_.data();
    u128* out = acc.data() + i;
    for (std::size_t j = 0; j < m; ++j) out[j] += static_cast<u128>(xi) * y[j];
  }
  std::vector<u64> r(m);
  for (std::size_t d = 0; d < m; ++d) {
    const u64 high = static_cast<u64>(acc[d + m] % q);
    r[d] = static_cast<u64>((acc[d] + static_cast<u128>(high) * ring_.a) % q);
  }
  return {ring_, std::move(r)};
}

std::size_t ExtElement::hash() const {
  // FNV-1a over the coefficients.
  std::size_t h = 1469598103934665603ull;
  for (u64 c : coeffs_) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

ExtElement pow(const ExtElement& x, const mpz_class& n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent");
  ExtElement result = ExtElement::one(x.ring());
  const std::size_t bits = n == 0 ? 0 : mpz_sizeinbase(n.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = result * result;
    if (mpz_tstbit(n.get_mpz_t(), i) != 0) result = result * x;
  }
  return result;
}

ExtElement frobenius(const ExtElement& x) {
  const BinomialRing& ring = x.ring();
  std::vector<u64> r(ring.m, 0);
  const auto c = x.coefficients();
  for (u64 d = 0; d < ring.m; ++d) {
    if (c[d] == 0) continue;
    const u64 dq = d * ring.q;
    // gcd(q, m) = 1 is not assumed; colliding targets accumulate.
    const u64 target = dq % ring.m;
    const u64 term = mulmod_u64(c[d], a_power(ring, dq / ring.m), ring.q);
    r[target] = (r[target] + term) % ring.q;
  }
  return {ring, std::move(r)};
}

ExtElement frobenius(const ExtElement& x, u64 times) {
  ExtElement y = x;
  for (u64 i = 0; i < times; ++i) y = frobenius(y);
  return y;
}

ExtElement mul_binomial(const ExtElement& x, u64 c, u64 degree, u64 b) {
  const BinomialRing& ring = x.ring();
  if (degree >= ring.m) throw Error(ErrorKind::InvalidArgument, "binomial degree must be below m");
  const u64 q = ring.q;
  const auto src = x.coefficients();
  const u64 ca = mulmod_u64(c % q, ring.a, q);
  c %= q;
  b %= q;
  std::vector<u64> r(ring.m);
  for (u64 d = 0; d < ring.m; ++d) r[d] = mulmod_u64(src[d], b, q);
  for (u64 d = 0; d < ring.m; ++d) {
    if (src[d] == 0) continue;
    const u64 target = d + degree;
    if (target < ring.m)
      r[target] = (r[target] + mulmod_u64(src[d], c, q)) % q;
    else
      r[target - ring.m] = (r[target - ring.m] + mulmod_u64(src[d], ca, q)) % q;
  }
  return {ring, std::move(r)};
}

std::string to_string(const ExtElement& x) {
  const auto c = x.coefficients();
  std::string out;
  for (std::size_t d = c.size(); d-- > 0;) {
    out += std::to_string(c[d]);
    if (d >= 2)
      out += "*t^" + std::to_string(d);
    else if (d == 1)
      out += "*t";
    if (d != 0) out += '+';
  }
  return out;
}

ExtElement parse_element(const BinomialRing& ring, std::string_view text) {
  std::vector<u64> coeffs(ring.m, 0);
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('+', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view term = text.substr(pos, end - pos);
    u64 degree = 0;
    std::string_view coeff = term;
    if (const std::size_t star = term.find('*'); star != std::string_view::npos) {
      coeff = term.substr(0, star);
      const std::string_view var = term.substr(star + 1);
      if (var == "t")
        degree = 1;
      else if (var.size() > 2 && var.substr(0, 2) == "t^")
        degree = parse_u64(var.substr(2), term);
      else
        throw Error(ErrorKind::InvalidArgument, "malformed element term '" + std::string(term) + "'");
    }
    if (degree >= ring.m)
      throw Error(ErrorKind::LengthMismatch, "term degree " + std::to_string(degree) + " is not below m");
    coeffs[degree] = (coeffs[degree] + parse_u64(coeff, term)) % ring.q;
    pos = end + 1;
  }
  return {ring, std::move(coeffs)};
}

std::ostream& operator<<(std::ostream& os, const ExtElement& x) { return os << to_string(x); }

}  // namespace binorder
