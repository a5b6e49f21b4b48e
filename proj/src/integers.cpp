#include "binorder/integers.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <string>

#include "binorder/error.hpp"

namespace binorder {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::SizeCapExceeded: return "SizeCapExceeded";
    case ErrorKind::FactorizationIncomplete: return "FactorizationIncomplete";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::InvalidField: return "InvalidField";
    case ErrorKind::UnsupportedField: return "UnsupportedField";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::ModulusMismatch: return "ModulusMismatch";
    case ErrorKind::SpecMismatch: return "SpecMismatch";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::NoBinomialExists: return "NoBinomialExists";
    case ErrorKind::IrreducibilityFailure: return "IrreducibilityFailure";
    case ErrorKind::FormulaMismatch: return "FormulaMismatch";
    case ErrorKind::BoundsTooLarge: return "BoundsTooLarge";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NoSolution: return "NoSolution";
  }
  return "Unknown";
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    constexpr std::uint32_t limit = 1'000'000;
    std::vector<bool> composite(limit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= limit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (u64 j = u64{i} * i; j <= limit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

bool fits_u64(const mpz_class& n) { return mpz_sizeinbase(n.get_mpz_t(), 2) <= 64 && n >= 0; }

u64 to_u64(const mpz_class& n) {
  // mpz_get_ui is 64-bit on LP64 targets.
  static_assert(sizeof(unsigned long) == 8);
  return mpz_get_ui(n.get_mpz_t());
}

mpz_class from_u64(u64 v) {
  mpz_class r;
  mpz_set_ui(r.get_mpz_t(), static_cast<unsigned long>(v));
  return r;
}

bool strong_probable_prime_u64(u64 n, u64 base) {
  base %= n;
  if (base == 0) return true;
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  u64 x = powmod_u64(base, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int r = 1; r < s; ++r) {
    x = mulmod_u64(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

bool strong_probable_prime(const mpz_class& n, unsigned long base) {
  mpz_class d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  mpz_class x;
  mpz_class b = base;
  mpz_powm(x.get_mpz_t(), b.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  const mpz_class n_minus_1 = n - 1;
  if (x == 1 || x == n_minus_1) return true;
  for (unsigned long r = 1; r < s; ++r) {
    x = (x * x) % n;
    if (x == n_minus_1) return true;
  }
  return false;
}

u64 gcd_u64(u64 a, u64 b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

std::mt19937_64 rng_seeded_from(const mpz_class& n) {
  // Low 64 bits of n mixed with its bit length: reproducible across runs.
  mpz_class low = n;
  mpz_fdiv_r_2exp(low.get_mpz_t(), low.get_mpz_t(), 64);
  return std::mt19937_64(to_u64(low) ^ (u64{0x9e3779b97f4a7c15} * mpz_sizeinbase(n.get_mpz_t(), 2)));
}

// Brent's cycle detection on x -> x^2 + c with batched gcds. Returns a nontrivial
// divisor or 0 when the iteration limit is exhausted.
u64 brent_u64(u64 n, u64 c, u64 y, u64 limit) {
  constexpr u64 batch = 128;
  u64 x = y, ys = y, g = 1, q = 1;
  u64 r = 1, steps = 0;
  auto f = [&](u64 v) {
    u128 s = static_cast<u128>(v) * v + c;
    return static_cast<u64>(s % n);
  };
  while (g == 1) {
    x = y;
    for (u64 i = 0; i < r; ++i) y = f(y);
    u64 k = 0;
    while (k < r && g == 1) {
      ys = y;
      const u64 m = std::min(batch, r - k);
      for (u64 i = 0; i < m; ++i) {
        y = f(y);
        q = mulmod_u64(q, x > y ? x - y : y - x, n);
      }
      g = gcd_u64(q, n);
      k += m;
    }
    steps += r;
    r <<= 1;
    if (steps > limit) return 0;
  }
  if (g == n) {
    do {
      ys = f(ys);
      g = gcd_u64(x > ys ? x - ys : ys - x, n);
    } while (g == 1);
  }
  return g == n ? 0 : g;
}

mpz_class brent_mpz(const mpz_class& n, const mpz_class& c, mpz_class y, u64 limit) {
  constexpr u64 batch = 128;
  mpz_class x = y, ys = y, g = 1, q = 1, diff;
  u64 r = 1, steps = 0;
  auto f = [&](mpz_class& v) {
    v = v * v + c;
    v %= n;
  };
  while (g == 1) {
    x = y;
    for (u64 i = 0; i < r; ++i) f(y);
    u64 k = 0;
    while (k < r && g == 1) {
      ys = y;
      const u64 m = std::min(batch, r - k);
      for (u64 i = 0; i < m; ++i) {
        f(y);
        diff = x - y;
        q = (q * abs(diff)) % n;
      }
      g = gcd(q, n);
      k += m;
    }
    steps += r;
    r <<= 1;
    if (steps > limit) return 0;
  }
  if (g == n) {
    do {
      f(ys);
      diff = x - ys;
      g = gcd(abs(diff), n);
    } while (g == 1);
  }
  return g == n ? mpz_class(0) : g;
}

constexpr int kRhoAttempts = 16;

mpz_class find_divisor(const mpz_class& n, const FactorOptions& options) {
  auto rng = rng_seeded_from(n);
  for (int attempt = 0; attempt < kRhoAttempts; ++attempt) {
    if (fits_u64(n)) {
      const u64 nn = to_u64(n);
      const u64 c = 1 + rng() % (nn - 1);
      const u64 y = rng() % nn;
      if (u64 d = brent_u64(nn, c, y, options.rho_iterations); d != 0) return from_u64(d);
    } else {
      const mpz_class c = from_u64(1 + rng() % 0xffffffffu);
      const mpz_class y = from_u64(rng()) % n;
      if (mpz_class d = brent_mpz(n, c, y, options.rho_iterations); d != 0) return d;
    }
  }
  throw Error(ErrorKind::FactorizationIncomplete,
              "Pollard rho exhausted its iteration budget on " + n.get_str());
}

void split_composite(const mpz_class& n, const FactorOptions& options,
                     std::map<mpz_class, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  // Perfect powers: take the root and recurse.
  if (mpz_perfect_power_p(n.get_mpz_t()) != 0) {
    for (unsigned long k = mpz_sizeinbase(n.get_mpz_t(), 2); k >= 2; --k) {
      mpz_class root;
      if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
        std::map<mpz_class, unsigned> sub;
        split_composite(root, options, sub);
        for (const auto& [p, e] : sub) out[p] += static_cast<unsigned>(e * k);
        return;
      }
    }
  }
  const mpz_class d = find_divisor(n, options);
  split_composite(d, options, out);
  split_composite(n / d, options, out);
}

}  // namespace

Factorization::Factorization(std::vector<PrimePower> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end(),
            [](const PrimePower& x, const PrimePower& y) { return x.prime < y.prime; });
}

mpz_class Factorization::value() const {
  mpz_class v = 1;
  for (const auto& [p, e] : factors_) {
    mpz_class pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
    v *= pe;
  }
  return v;
}

unsigned Factorization::exponent_of(const mpz_class& prime) const {
  for (const auto& f : factors_)
    if (f.prime == prime) return f.exponent;
  return 0;
}

void Factorization::add(const mpz_class& prime, unsigned exponent) {
  if (exponent == 0) return;
  auto it = std::lower_bound(factors_.begin(), factors_.end(), prime,
                             [](const PrimePower& f, const mpz_class& p) { return f.prime < p; });
  if (it != factors_.end() && it->prime == prime)
    it->exponent += exponent;
  else
    factors_.insert(it, PrimePower{prime, exponent});
}

void Factorization::merge(const Factorization& other) {
  for (const auto& [p, e] : other) add(p, e);
}

u64 mulmod_u64(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod_u64(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mulmod_u64(result, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return result;
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  static constexpr std::array<u64, 12> bases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 p : bases) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  for (u64 a : bases)
    if (!strong_probable_prime_u64(n, a)) return false;
  return true;
}

bool is_prime(const mpz_class& n) {
  if (n < 2) return false;
  if (fits_u64(n)) return is_prime_u64(to_u64(n));
  const auto& primes = small_primes();
  for (std::size_t i = 0; i < 64; ++i)
    if (mpz_divisible_ui_p(n.get_mpz_t(), primes[i]) != 0) return false;
  for (std::size_t i = 0; i < 64; ++i)
    if (!strong_probable_prime(n, primes[i])) return false;
  return true;
}

Factorization factorize(const mpz_class& n, const FactorOptions& options) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "factorize requires n >= 1");
  if (mpz_sizeinbase(n.get_mpz_t(), 2) > options.size_cap_bits)
    throw Error(ErrorKind::SizeCapExceeded,
                "integer exceeds the factorization cap of 2^" + std::to_string(options.size_cap_bits));

  Factorization result;
  mpz_class rest = n;
  for (std::uint32_t p : small_primes()) {
    if (p > options.trial_bound) break;
    if (mpz_cmp_ui(rest.get_mpz_t(), static_cast<unsigned long>(p) * p) < 0) break;
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p) == 0) continue;
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    result.add(p, e);
  }
  if (rest == 1) return result;

  std::map<mpz_class, unsigned> large;
  split_composite(rest, options, large);
  for (const auto& [p, e] : large) result.add(p, e);
  return result;
}

mpz_class euler_phi(const Factorization& n_factors) {
  mpz_class phi = 1;
  for (const auto& [p, e] : n_factors) {
    mpz_class pe;
    mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e - 1);
    phi *= pe * (p - 1);
  }
  return phi;
}

mpz_class multiplicative_order_mod(const mpz_class& g, const mpz_class& n,
                                   const FactorOptions& options) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "modulus must be at least 2");
  mpz_class base = g % n;
  if (base < 0) base += n;
  if (gcd(base, n) != 1)
    throw Error(ErrorKind::NotCoprime, g.get_str() + " is not a unit modulo " + n.get_str());

  const Factorization n_factors = factorize(n, options);
  // phi(n) = prod p^(e-1) (p-1); factor it from its pieces instead of from scratch.
  Factorization phi_factors;
  for (const auto& [p, e] : n_factors) {
    if (e > 1) phi_factors.add(p, e - 1);
    phi_factors.merge(factorize(p - 1, options));
  }
  return reduce_order(euler_phi(n_factors), phi_factors, [&](const mpz_class& exponent) {
    mpz_class r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), n.get_mpz_t());
    return r == 1;
  });
}

unsigned valuation(u64 n, u64 p) {
  unsigned v = 0;
  while (n != 0 && n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

std::vector<u64> prime_divisors(u64 n) {
  std::vector<u64> out;
  for (u64 p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::vector<u64> divisors(u64 n) {
  std::vector<u64> small, large;
  for (u64 d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d != n / d) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace binorder
