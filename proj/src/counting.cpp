#include "binorder/counting.hpp"

#include <algorithm>
#include <cmath>

#include <mpfr.h>

#include "binorder/error.hpp"

namespace binorder {

namespace {

using u64 = std::uint64_t;

mpz_class binomial_coefficient(u64 n, u64 r) {
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), n, r);
  return c;
}

void check_shape(u64 k, u64 l) {
  if (k < 1 || l < 1) throw Error(ErrorKind::InvalidArgument, "k and l must be positive");
}

// Certified [lower, upper] enclosure of 2^sqrt(n) at the given precision, as ceilings.
std::pair<mpz_class, mpz_class> ceil_enclosure(u64 n, mpfr_prec_t precision) {
  mpfr_t lo, hi;
  mpfr_init2(lo, precision);
  mpfr_init2(hi, precision);
  mpfr_set_ui(lo, n, MPFR_RNDD);
  mpfr_set_ui(hi, n, MPFR_RNDU);
  mpfr_sqrt(lo, lo, MPFR_RNDD);
  mpfr_sqrt(hi, hi, MPFR_RNDU);
  mpfr_exp2(lo, lo, MPFR_RNDD);
  mpfr_exp2(hi, hi, MPFR_RNDU);
  mpz_class clo, chi;
  mpfr_get_z(clo.get_mpz_t(), lo, MPFR_RNDU);
  mpfr_get_z(chi.get_mpz_t(), hi, MPFR_RNDU);
  mpfr_clear(lo);
  mpfr_clear(hi);
  return {clo, chi};
}

}  // namespace

SelectionVector::SelectionVector(u64 k, u64 l) : k_(k), l_(l), bits_(k * l, 0) { check_shape(k, l); }

SelectionVector SelectionVector::from_string(u64 k, u64 l, const std::string& bits) {
  SelectionVector v(k, l);
  if (bits.size() != v.size())
    throw Error(ErrorKind::LengthMismatch, "selection string must have k*l = " +
                                               std::to_string(v.size()) + " bits");
  for (std::size_t p = 0; p < bits.size(); ++p) {
    if (bits[p] != '0' && bits[p] != '1')
      throw Error(ErrorKind::InvalidArgument, "selection string must contain only 0 and 1");
    v.bits_[p] = bits[p] == '1' ? 1 : 0;
  }
  return v;
}

u64 SelectionVector::weighted_sum() const {
  u64 sum = 0;
  for (u64 i = 0; i < l_; ++i)
    for (u64 j = 0; j < k_; ++j)
      if (bits_[i * k_ + j] != 0) sum += i * k_ + 1;
  return sum;
}

std::string SelectionVector::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t p = 0; p < bits_.size(); ++p)
    if (bits_[p] != 0) s[p] = '1';
  return s;
}

mpz_class count_S_dp(u64 k, u64 l, u64 bound) {
  check_shape(k, l);
  if (bound == 0) return 0;
  std::vector<mpz_class> choose(k + 1);
  for (u64 c = 0; c <= k; ++c) choose[c] = binomial_coefficient(k, c);

  // ways[s]: matrices over the rows processed so far with weighted sum s < bound.
  std::vector<mpz_class> ways(bound, 0), next(bound);
  ways[0] = 1;
  for (u64 i = 0; i < l; ++i) {
    const u64 weight = i * k + 1;
    std::fill(next.begin(), next.end(), 0);
    for (u64 s = 0; s < bound; ++s) {
      if (ways[s] == 0) continue;
      for (u64 c = 0; c <= k && s + c * weight < bound; ++c) next[s + c * weight] += ways[s] * choose[c];
    }
    ways.swap(next);
  }
  mpz_class total = 0;
  for (const auto& w : ways) total += w;
  return total;
}

void for_each_in_S(u64 k, u64 l, u64 bound, const std::function<void(const SelectionVector&)>& visit,
                   u64 budget) {
  const mpz_class size = count_S_dp(k, l, bound);
  if (size > mpz_class(static_cast<unsigned long>(budget)))
    throw Error(ErrorKind::BudgetExceeded, "|S| = " + size.get_str() +
                                               " exceeds the enumeration budget of " +
                                               std::to_string(budget));
  if (bound == 0) return;
  SelectionVector current(k, l);
  const u64 n = k * l;
  // Depth-first, 0 before 1 at each position: lexicographic order. Weights are
  // non-decreasing in position, so a 1 that overflows the bound prunes the subtree.
  auto recurse = [&](auto&& self, u64 position, u64 sum) -> void {
    if (position == n) {
      visit(current);
      return;
    }
    self(self, position + 1, sum);
    const u64 weight = (position / k) * k + 1;
    if (sum + weight < bound) {
      current.set_bit(position, true);
      self(self, position + 1, sum + weight);
      current.set_bit(position, false);
    }
  };
  recurse(recurse, 0, 0);
}

std::vector<SelectionVector> enumerate_S(u64 k, u64 l, u64 bound, u64 budget) {
  std::vector<SelectionVector> out;
  for_each_in_S(k, l, bound, [&](const SelectionVector& v) { out.push_back(v); }, budget);
  return out;
}

Lemma8Result lemma8_constructive(u64 k, u64 l) {
  check_shape(k, l);
  if (l <= 1)
    throw Error(ErrorKind::NoSolution, "no w satisfies 1 + ... < l when l <= 1");
  u64 w = 0;
  while (((w + 1) * k + 2) * (w + 2) / 2 < l) ++w;
  Lemma8Result r;
  r.w = w;
  mpz_ui_pow_ui(r.count.get_mpz_t(), 2, (w + 1) * k);
  r.real_w = std::sqrt(2.0 * static_cast<double>(l) / static_cast<double>(k)) - 1.0;
  r.within_hypothesis = l > k;
  return r;
}

mpz_class ceil_two_pow_sqrt(u64 n) {
  const u64 root = static_cast<u64>(std::llround(std::sqrt(static_cast<double>(n))));
  for (u64 s = root > 0 ? root - 1 : 0; s <= root + 1; ++s) {
    if (s * s == n) {
      mpz_class exact;
      mpz_ui_pow_ui(exact.get_mpz_t(), 2, s);
      return exact;
    }
  }
  // Irrational exponent: 2^sqrt(n) is not an integer, so some precision separates the ceilings.
  for (mpfr_prec_t precision = 128;; precision *= 2) {
    auto [lo, hi] = ceil_enclosure(n, precision);
    if (lo == hi) return lo;
  }
}

mpq_class lemma5_bound(u64 k) {
  mpz_class num, den;
  mpz_ui_pow_ui(num.get_mpz_t(), 29, k);
  mpz_ui_pow_ui(den.get_mpz_t(), 5, k);
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

bool case1_bound_dominates(u64 k, u64 m) {
  mpz_class four_k;
  mpz_ui_pow_ui(four_k.get_mpz_t(), 4, k);
  return k * k >= m && lemma5_bound(k) > mpq_class(four_k);
}

bool BoundReport::has_flag(const std::string& flag) const {
  return std::find(flags.begin(), flags.end(), flag) != flags.end();
}

BoundReport theorem1_bound(u64 k, u64 l, u64 m) {
  if (k * l != m) throw Error(ErrorKind::InvalidArgument, "theorem1_bound requires m = k*l");
  BoundReport r;
  r.case_id = k >= l ? 1 : 2;
  r.k = k;
  r.l = l;
  r.m = m;
  r.lemma5_bound = lemma5_bound(k);
  mpz_fdiv_q(r.lemma5_floor.get_mpz_t(), r.lemma5_bound.get_num_mpz_t(), r.lemma5_bound.get_den_mpz_t());
  r.theorem1_bound = ceil_two_pow_sqrt(2 * m);
  r.s_count = count_S_dp(k, l, m);
  if (l >= 2) r.lemma8 = lemma8_constructive(k, l);

  if (r.s_count < r.theorem1_bound) r.flags.emplace_back(kFlagSCountBelowBound);
  if (r.lemma8 && !r.lemma8->within_hypothesis) r.flags.emplace_back(kFlagLemma8OutsideHypothesis);
  if (r.case_id == 2 && r.lemma8 && r.lemma8->count < r.theorem1_bound)
    r.flags.emplace_back(kFlagLemma8BelowBound);
  return r;
}

}  // namespace binorder
