#pragma once

// Exact number theory on unbounded integers: primality, factorization and
// multiplicative orders modulo n.

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace binorder {

/// One prime power p^k of a factorization.
struct PrimePower {
  mpz_class prime;
  unsigned exponent = 0;

  bool operator==(const PrimePower&) const = default;
};

/// Prime factorization sorted ascending by prime. The empty factorization is 1.
class Factorization {
 public:
  Factorization() = default;
  explicit Factorization(std::vector<PrimePower> factors);

  const std::vector<PrimePower>& factors() const { return factors_; }
  std::size_t size() const { return factors_.size(); }
  bool empty() const { return factors_.empty(); }
  auto begin() const { return factors_.begin(); }
  auto end() const { return factors_.end(); }

  mpz_class value() const;
  unsigned exponent_of(const mpz_class& prime) const;

  /// Merges another factorization into this one (multiplies the values).
  void merge(const Factorization& other);
  void add(const mpz_class& prime, unsigned exponent = 1);

  bool operator==(const Factorization&) const = default;

 private:
  std::vector<PrimePower> factors_;
};

struct FactorOptions {
  /// Inputs at or above 2^size_cap_bits are rejected with SizeCapExceeded.
  unsigned size_cap_bits = 128;
  /// Trial division bound before switching to Pollard rho.
  std::uint32_t trial_bound = 1'000'000;
  /// Per-attempt iteration limit for rho; exceeding every attempt raises FactorizationIncomplete.
  std::uint64_t rho_iterations = std::uint64_t{1} << 26;
};

/// Deterministic below 2^64 (Miller-Rabin with the first 12 prime bases).
/// Above 2^64, 64 strong-probable-prime rounds with the first 64 primes as bases.
bool is_prime(const mpz_class& n);
bool is_prime_u64(std::uint64_t n);

Factorization factorize(const mpz_class& n, const FactorOptions& options = {});

/// Smallest d >= 1 with g^d = 1 (mod n). Throws NotCoprime when gcd(g, n) != 1.
mpz_class multiplicative_order_mod(const mpz_class& g, const mpz_class& n,
                                   const FactorOptions& options = {});

/// Euler's totient from a factorization of n.
mpz_class euler_phi(const Factorization& n_factors);

/// Reduces `candidate` (a known multiple of the order) to the exact order, given its
/// factorization and a predicate telling whether an exponent annihilates the element.
template <typename IsIdentityAt>
mpz_class reduce_order(mpz_class candidate, const Factorization& candidate_factors,
                       IsIdentityAt&& is_identity_at) {
  for (const auto& [p, e] : candidate_factors) {
    for (unsigned i = 0; i < e; ++i) {
      mpz_class reduced = candidate / p;
      if (!is_identity_at(reduced)) break;
      candidate = std::move(reduced);
    }
  }
  return candidate;
}

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// p-adic valuation of n (n != 0).
unsigned valuation(std::uint64_t n, std::uint64_t p);

/// Distinct prime divisors of a small integer by trial division.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);

}  // namespace binorder
