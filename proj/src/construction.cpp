#include "binorder/construction.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <unordered_set>

#include "binorder/error.hpp"
#include "binorder/integers.hpp"

namespace binorder {

namespace {

using u64 = std::uint64_t;

u64 family_exponent(const ExtensionSpec& spec, u64 i, u64 j) {
  const u64 order = spec.q - 1;
  const u64 r_mod = mpz_fdiv_ui(spec.exponent_table.at(i).r.get_mpz_t(), order);
  return (mulmod_u64(j, spec.t_mod, order) + r_mod) % order;
}

bool is_linear_binomial(const ExtElement& x, u64 c, u64 b) {
  const auto coeffs = x.coefficients();
  if (coeffs[0] != b || coeffs[1] != c) return false;
  return std::all_of(coeffs.begin() + 2, coeffs.end(), [](u64 v) { return v == 0; });
}

// Set of field elements keyed by their packed coefficient vectors. Keys live in one
// arena; the open-addressing table stores arena slots.
class PackedElementSet {
 public:
  PackedElementSet(u64 q, u64 m, u64 expected)
      : bits_(static_cast<unsigned>(std::bit_width(q - 1))),
        per_word_(64 / bits_),
        words_((m + per_word_ - 1) / per_word_),
        table_(std::bit_ceil(2 * expected + 2), kEmpty),
        key_(words_) {}

  void insert(const ExtElement& x) {
    pack(x, key_);
    const u64 mask = table_.size() - 1;
    for (u64 slot = hash(key_) & mask;; slot = (slot + 1) & mask) {
      const std::uint32_t index = table_[slot];
      if (index == kEmpty) {
        table_[slot] = static_cast<std::uint32_t>(size_);
        arena_.insert(arena_.end(), key_.begin(), key_.end());
        ++size_;
        if (2 * size_ >= table_.size()) grow();
        return;
      }
      if (std::equal(key_.begin(), key_.end(), arena_.begin() + static_cast<std::ptrdiff_t>(index * words_)))
        return;
    }
  }

  u64 size() const { return size_; }

 private:
  static constexpr std::uint32_t kEmpty = std::numeric_limits<std::uint32_t>::max();

  void pack(const ExtElement& x, std::vector<u64>& out) const {
    std::fill(out.begin(), out.end(), 0);
    const auto c = x.coefficients();
    for (std::size_t d = 0; d < c.size(); ++d) out[d / per_word_] |= c[d] << ((d % per_word_) * bits_);
  }

  static u64 hash(const std::vector<u64>& key) {
    u64 h = 0x9e3779b97f4a7c15ull;
    for (u64 w : key) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 0xbf58476d1ce4e5b9ull;
      h ^= h >> 31;
    }
    return h;
  }

  void grow() {
    std::vector<std::uint32_t> bigger(table_.size() * 2, kEmpty);
    const u64 mask = bigger.size() - 1;
    std::vector<u64> key(words_);
    for (u64 index = 0; index < size_; ++index) {
      std::copy_n(arena_.begin() + static_cast<std::ptrdiff_t>(index * words_), words_, key.begin());
      u64 slot = hash(key) & mask;
      while (bigger[slot] != kEmpty) slot = (slot + 1) & mask;
      bigger[slot] = static_cast<std::uint32_t>(index);
    }
    table_.swap(bigger);
  }

  unsigned bits_;
  u64 per_word_;
  u64 words_;
  std::vector<std::uint32_t> table_;
  std::vector<u64> arena_;
  std::vector<u64> key_;
  u64 size_ = 0;
};

}  // namespace

std::vector<ConjugateBinomial> linear_binomials(const ExtensionSpec& spec) {
  std::vector<ConjugateBinomial> out;
  out.reserve(spec.k);
  ExtElement current = spec.theta_plus_b();
  for (u64 j = 0; j < spec.k; ++j) {
    const u64 exponent = mulmod_u64(j, spec.t_mod, spec.q - 1);
    const PrimeFieldElement coefficient = spec.a.pow(exponent);
    if (!is_linear_binomial(current, coefficient.value(), spec.b.value()))
      throw Error(ErrorKind::FormulaMismatch, "(theta + b)^{q^{l j}} is not a^{jt} theta + b for j = " +
                                                  std::to_string(j));
    out.push_back({0, j, 1, exponent, coefficient, spec.b});
    current = frobenius(current, spec.l);
  }
  return out;
}

std::vector<ConjugateBinomial> binomial_family(const ExtensionSpec& spec) {
  std::vector<ConjugateBinomial> out;
  out.reserve(spec.k * spec.l);
  for (u64 i = 0; i < spec.l; ++i) {
    for (u64 j = 0; j < spec.k; ++j) {
      const u64 exponent = family_exponent(spec, i, j);
      out.push_back({i, j, i * spec.k + 1, exponent, spec.a.pow(exponent), spec.b});
    }
  }
  return out;
}

std::vector<ExtElement> frobenius_orbit(const ExtensionSpec& spec) {
  std::vector<ExtElement> orbit;
  orbit.reserve(spec.m);
  ExtElement x = spec.theta_plus_b();
  for (u64 s = 0; s < spec.m; ++s) {
    orbit.push_back(x);
    x = frobenius(x);
  }
  return orbit;
}

bool family_pairwise_distinct(const ExtensionSpec& spec, const std::vector<ConjugateBinomial>& family) {
  std::unordered_set<ExtElement> seen;
  for (const auto& member : family) seen.insert(member.to_element(spec.ring()));
  return seen.size() == family.size();
}

bool family_matches_orbit(const ExtensionSpec& spec, const std::vector<ConjugateBinomial>& family) {
  const std::vector<ExtElement> orbit = frobenius_orbit(spec);
  if (family.size() != orbit.size()) return false;
  std::vector<bool> hit(orbit.size(), false);
  for (const auto& member : family) {
    const u64 s = member.j * spec.l + spec.exponent_table.at(member.i).alpha;
    if (s >= orbit.size() || hit[s] || !(orbit[s] == member.to_element(spec.ring()))) return false;
    hit[s] = true;
  }
  return std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
}

std::optional<Lemma6Counterexample> check_lemma6(u64 k, u64 l, u64 u_cap, u64 budget) {
  if (k < 2) throw Error(ErrorKind::InvalidArgument, "check_lemma6 requires k >= 2");
  if (u_cap < k) throw Error(ErrorKind::InvalidArgument, "check_lemma6 requires u_cap >= k");
  u64 visited = 0;
  std::optional<Lemma6Counterexample> found;
  std::vector<std::pair<u64, u64>> chosen;

  // Multiplicities for degrees (index..l-1)*k + 1 that sum to `remaining`.
  auto search = [&](auto&& self, u64 index, u64 remaining) -> bool {
    if (index == l) {
      if (++visited > budget)
        throw Error(ErrorKind::BoundsTooLarge, "Lemma 6 search exceeds " + std::to_string(budget) + " tuples");
      return remaining == 0 && !chosen.empty();
    }
    const u64 d = index * k + 1;
    for (u64 u = 0; u * d <= remaining; ++u) {
      if (u > 0) chosen.emplace_back(d, u);
      const bool hit = self(self, index + 1, remaining - u * d);
      if (u > 0 && !hit) chosen.pop_back();
      if (hit) return true;
    }
    return false;
  };

  const u64 u_max = std::min(u_cap, k);
  for (u64 i0 = 0; i0 + 1 < l && !found; ++i0) {
    const u64 d0 = i0 * k + 1;
    for (u64 u0 = 1; u0 <= u_max && !found; ++u0) {
      for (u64 v0 = 0; v0 < u0 && !found; ++v0) {
        chosen.clear();
        if (search(search, i0 + 1, (u0 - v0) * d0)) found = Lemma6Counterexample{d0, u0, v0, chosen};
      }
    }
  }
  return found;
}

ExtElement product_for_vector(const ExtensionSpec& spec, const SelectionVector& selection) {
  if (selection.k() != spec.k || selection.l() != spec.l)
    throw Error(ErrorKind::LengthMismatch, "selection shape does not match k x l of the spec");
  ExtElement product = ExtElement::one(spec.ring());
  for (const auto& member : binomial_family(spec))
    if (selection.get(member.i, member.j))
      product = mul_binomial(product, member.coefficient.value(), member.degree, member.constant.value());
  return product;
}

std::uint64_t theorem7_distinct_count(const ExtensionSpec& spec, u64 budget) {
  const mpz_class size = count_S_dp(spec.k, spec.l, spec.m);
  if (budget >= std::numeric_limits<std::uint32_t>::max())
    throw Error(ErrorKind::InvalidArgument, "enumeration budget must stay below 2^32");
  if (size > mpz_class(static_cast<unsigned long>(budget)))
    throw Error(ErrorKind::BudgetExceeded, "|S| = " + size.get_str() +
                                               " exceeds the enumeration budget of " +
                                               std::to_string(budget));

  const std::vector<ConjugateBinomial> family = binomial_family(spec);
  PackedElementSet products(spec.q, spec.m, mpz_get_ui(size.get_mpz_t()));
  const u64 n = family.size();
  const u64 b = spec.b.value();

  // Each member of S is reached once: as the path that adds its set bits in increasing
  // position. Positions are ordered by weight, so the first overflow ends the loop.
  auto visit = [&](auto&& self, u64 start, u64 sum, const ExtElement& product) -> void {
    products.insert(product);
    for (u64 p = start; p < n; ++p) {
      const auto& member = family[p];
      if (sum + member.degree >= spec.m) break;
      self(self, p + 1, sum + member.degree,
           mul_binomial(product, member.coefficient.value(), member.degree, b));
    }
  };
  visit(visit, 0, 0, ExtElement::one(spec.ring()));
  return products.size();
}

}  // namespace binorder
