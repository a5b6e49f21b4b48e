#pragma once

// The k*l conjugate binomials a^{j t + r_i} theta^{i k + 1} + b generated by
// theta + b under Frobenius, and the products over selection vectors whose
// pairwise distinctness bounds the order of theta + b from below.

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "binorder/counting.hpp"
#include "binorder/extension_field.hpp"
#include "binorder/parameters.hpp"

namespace binorder {

struct ConjugateBinomial {
  std::uint64_t i = 0;       ///< row, degree index in [0, l)
  std::uint64_t j = 0;       ///< column, linear-binomial index in [0, k)
  std::uint64_t degree = 0;  ///< i*k + 1
  std::uint64_t exponent = 0;  ///< (j t + r_i) mod (q - 1)
  PrimeFieldElement coefficient{1, 5};  ///< a^exponent
  PrimeFieldElement constant{1, 5};     ///< b

  ExtElement to_element(const BinomialRing& ring) const {
    return ExtElement::binomial(ring, coefficient.value(), degree, constant.value());
  }
};

/// The k linear binomials a^{jt} theta + b, each obtained from the previous one by raising to
/// q^l. Throws FormulaMismatch if an iterate is not the predicted linear binomial.
std::vector<ConjugateBinomial> linear_binomials(const ExtensionSpec& spec);

/// All k*l binomials, ordered by (i, j), coefficients from the exponent table.
std::vector<ConjugateBinomial> binomial_family(const ExtensionSpec& spec);

/// { (theta + b)^{q^s} : 0 <= s < m } by iterated Frobenius.
std::vector<ExtElement> frobenius_orbit(const ExtensionSpec& spec);

/// Every pair of family members differs as field elements.
bool family_pairwise_distinct(const ExtensionSpec& spec, const std::vector<ConjugateBinomial>& family);

/// The family equals the Frobenius orbit as a multiset, and member (i, j) is (theta + b)^{q^{j l + alpha_i}}.
bool family_matches_orbit(const ExtensionSpec& spec, const std::vector<ConjugateBinomial>& family);

/// u0 d0 = v0 d0 + u1 d1 + ... + ur dr with d0 < d1 < ... < dr from {i k + 1}.
struct Lemma6Counterexample {
  std::uint64_t d0 = 0;
  std::uint64_t u0 = 0;
  std::uint64_t v0 = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> larger;  ///< (d, u) with u >= 1
};

inline constexpr std::uint64_t kLemma6Budget = 10'000'000;

/// Exhaustive search for a solution of the relation above with 1 <= u0 <= min(u_cap, k),
/// 0 <= v0 < u0 and r >= 1. Returns nullopt when none exists. Throws BoundsTooLarge when more
/// than `budget` tuples would be visited.
std::optional<Lemma6Counterexample> check_lemma6(std::uint64_t k, std::uint64_t l, std::uint64_t u_cap,
                                                 std::uint64_t budget = kLemma6Budget);

/// Product of the family members selected by `selection`; the empty selection gives 1.
ExtElement product_for_vector(const ExtensionSpec& spec, const SelectionVector& selection);

/// Number of distinct products over all selections in S, using exact coefficient keys.
/// Throws BudgetExceeded when |S| exceeds `budget`.
std::uint64_t theorem7_distinct_count(const ExtensionSpec& spec,
                                      std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace binorder
