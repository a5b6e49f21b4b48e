#pragma once

// Instance setup for F_q[x]/(x^m - a): existence and irreducibility of the
// binomial, the canonical choice of a, the decomposition m = k*l with
// l = ord_m(q), the integer t with q^l = 1 + t*m, and the table of exponents
// alpha_i, r_i with q^{alpha_i} = (i*k + 1) + r_i*m.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "binorder/extension_field.hpp"
#include "binorder/prime_field.hpp"
#include "json.hpp"

namespace binorder {

struct ExponentEntry {
  std::uint64_t alpha = 0;
  mpz_class r;
};

struct Decomposition {
  std::uint64_t k = 0;
  std::uint64_t l = 0;

  bool operator==(const Decomposition&) const = default;
};

/// Warning flags attached to specs outside the standing assumptions of the construction.
inline constexpr const char* kFlagMDividesQMinus1 = "m_divides_q_minus_1";
inline constexpr const char* kFlagLBelow2 = "l_below_2";
inline constexpr const char* kFlagKBelow3 = "k_below_3";
inline constexpr const char* kFlagMBelow8 = "m_below_8";

/// One fully-derived instance. Built only through build_spec, which checks every invariant.
struct ExtensionSpec {
  std::uint64_t q = 0;
  std::uint64_t m = 0;
  PrimeFieldElement a{1, 5};
  PrimeFieldElement b{1, 5};
  std::uint64_t e = 0;  ///< order of a in F_q^*
  std::uint64_t k = 0;
  std::uint64_t l = 0;
  mpz_class t;             ///< (q^l - 1) / m, exact
  std::uint64_t t_mod = 0; ///< t mod (q - 1); a^t = a^{t_mod}
  std::vector<ExponentEntry> exponent_table;  ///< indexed by i in [0, l)
  std::vector<std::string> warnings;

  BinomialRing ring() const { return {q, m, a.value()}; }
  ExtElement theta() const { return ExtElement::theta(ring()); }
  ExtElement theta_plus_b() const { return ExtElement::binomial(ring(), 1, 1, b.value()); }
  /// a^t as an element of F_q.
  PrimeFieldElement a_to_t() const { return a.pow(t_mod); }
  bool has_warning(const std::string& flag) const;
};

/// Some a makes x^m - a irreducible over F_q: every prime factor of m divides q - 1,
/// and 4 | m implies 4 | q - 1.
bool binomial_exists(std::uint64_t q, std::uint64_t m);

/// Per-a criterion: every prime p | m divides e = ord(a) but not (q - 1)/e, and 4 | m implies 4 | q - 1.
bool check_binomial_irreducible(std::uint64_t q, std::uint64_t m, const PrimeFieldElement& a);

/// a = alpha^{(q-1)/e} for the smallest primitive alpha, e the {p | m}-part of q - 1.
PrimeFieldElement construct_a(std::uint64_t q, std::uint64_t m);

/// k and l, with l computed both as ord_m(q) and by the product formula over prime powers of m.
Decomposition decompose(std::uint64_t q, std::uint64_t m);

/// l by the product formula: prod over p^s || m of p^{max(0, s - v_p(q-1))}.
std::uint64_t order_by_formula(std::uint64_t q, std::uint64_t m);

ExtensionSpec build_spec(std::uint64_t q, std::uint64_t m, std::uint64_t b,
                         std::optional<std::uint64_t> a_override = std::nullopt);

/// ord(a^t) == k in F_q^*.
bool verify_lemma3(const ExtensionSpec& spec);

/// { q^i mod m : i < l } == { (i*k + 1) mod m : i < l }.
bool verify_subgroup_identity(const ExtensionSpec& spec);

/// Canonical JSON: q, m, a, b, e, k, l, t, alpha, r in that order; unbounded integers as strings.
nlohmann::ordered_json to_json(const ExtensionSpec& spec);

}  // namespace binorder
