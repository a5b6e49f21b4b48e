#pragma once

// Counting the set S of 0/1 selection matrices e[i][j] (i < l, j < k) with
// sum (i*k + 1) e[i][j] < m, and the order bounds derived from it.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace binorder {

/// 0/1 matrix indexed (i in [0, l), j in [0, k)), stored row-major: position i*k + j.
class SelectionVector {
 public:
  SelectionVector(std::uint64_t k, std::uint64_t l);
  /// From a bit string of length k*l, row-major.
  static SelectionVector from_string(std::uint64_t k, std::uint64_t l, const std::string& bits);

  std::uint64_t k() const { return k_; }
  std::uint64_t l() const { return l_; }
  std::size_t size() const { return bits_.size(); }

  bool get(std::uint64_t i, std::uint64_t j) const { return bits_.at(i * k_ + j) != 0; }
  void set(std::uint64_t i, std::uint64_t j, bool v) { bits_.at(i * k_ + j) = v ? 1 : 0; }
  bool bit(std::size_t position) const { return bits_.at(position) != 0; }
  void set_bit(std::size_t position, bool v) { bits_.at(position) = v ? 1 : 0; }

  /// sum (i*k + 1) e[i][j]; at most m^2, so it fits while m < 2^32.
  std::uint64_t weighted_sum() const;
  bool in_S(std::uint64_t bound) const { return weighted_sum() < bound; }
  std::string to_string() const;

  bool operator==(const SelectionVector&) const = default;

 private:
  std::uint64_t k_;
  std::uint64_t l_;
  std::vector<std::uint8_t> bits_;
};

inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 22;

/// |S| by dynamic programming over partial sums, choosing c of the k entries in row i
/// (C(k, c) ways, weight c*(i*k + 1)).
mpz_class count_S_dp(std::uint64_t k, std::uint64_t l, std::uint64_t bound);

/// Visits every member of S exactly once in lexicographic bit order (zero vector first).
/// Throws BudgetExceeded if |S| exceeds `budget`.
void for_each_in_S(std::uint64_t k, std::uint64_t l, std::uint64_t bound,
                   const std::function<void(const SelectionVector&)>& visit,
                   std::uint64_t budget = kDefaultEnumerationBudget);

std::vector<SelectionVector> enumerate_S(std::uint64_t k, std::uint64_t l, std::uint64_t bound,
                                         std::uint64_t budget = kDefaultEnumerationBudget);

struct Lemma8Result {
  std::uint64_t w = 0;
  mpz_class count;  ///< 2^{(w+1) k}
  /// The real-valued choice sqrt(2l/k) - 1 the integer w replaces (diagnostic only).
  double real_w = 0.0;
  bool within_hypothesis = false;  ///< l > k
};

/// Largest w with (w*k + 2)(w + 1)/2 < l and the 2^{(w+1)k} selections it guarantees.
/// Throws NoSolution when l <= 1.
Lemma8Result lemma8_constructive(std::uint64_t k, std::uint64_t l);

/// ceil(2^sqrt(n)), certified: MPFR interval endpoints are widened until their ceilings agree.
mpz_class ceil_two_pow_sqrt(std::uint64_t n);

/// (29/5)^k exactly.
mpq_class lemma5_bound(std::uint64_t k);

/// The case-1 inequality (29/5)^k > 2^{2 sqrt m}, established as k^2 >= m and (29/5)^k > 4^k.
bool case1_bound_dominates(std::uint64_t k, std::uint64_t m);

inline constexpr const char* kFlagSCountBelowBound = "s_count_below_theorem1_bound";
inline constexpr const char* kFlagLemma8BelowBound = "lemma8_constructive_below_theorem1_bound";
inline constexpr const char* kFlagLemma8OutsideHypothesis = "lemma8_outside_hypothesis";

struct BoundReport {
  int case_id = 0;  ///< 1 iff k >= l
  std::uint64_t k = 0;
  std::uint64_t l = 0;
  std::uint64_t m = 0;
  mpq_class lemma5_bound;
  mpz_class lemma5_floor;
  mpz_class theorem1_bound;  ///< ceil(2^sqrt(2m))
  mpz_class s_count;
  std::optional<Lemma8Result> lemma8;
  std::vector<std::string> flags;

  bool has_flag(const std::string& flag) const;
};

BoundReport theorem1_bound(std::uint64_t k, std::uint64_t l, std::uint64_t m);

}  // namespace binorder
