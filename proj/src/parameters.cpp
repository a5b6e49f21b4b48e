#include "binorder/parameters.hpp"

#include <algorithm>
#include <set>

#include "binorder/error.hpp"
#include "binorder/integers.hpp"

namespace binorder {

namespace {

using u64 = std::uint64_t;

mpz_class to_mpz(u64 v) { return mpz_class(static_cast<unsigned long>(v)); }

u64 ipow(u64 base, unsigned exp) {
  u64 r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

PrimeField require_supported_field(u64 q) {
  try {
    return PrimeField(q);
  } catch (const Error& err) {
    throw Error(ErrorKind::UnsupportedField, err.what());
  }
}

}  // namespace

bool ExtensionSpec::has_warning(const std::string& flag) const {
  return std::find(warnings.begin(), warnings.end(), flag) != warnings.end();
}

bool binomial_exists(u64 q, u64 m) {
  if (m < 1) return false;
  for (u64 p : prime_divisors(m))
    if ((q - 1) % p != 0) return false;
  return m % 4 != 0 || (q - 1) % 4 == 0;
}

bool check_binomial_irreducible(u64 q, u64 m, const PrimeFieldElement& a) {
  if (a.is_zero()) throw Error(ErrorKind::ZeroElement, "x^m - 0 is never irreducible for m >= 2");
  if (a.modulus() != q) throw Error(ErrorKind::ModulusMismatch, "a is not an element of F_q");
  const u64 e = element_order(a);
  const u64 cofactor = (q - 1) / e;
  for (u64 p : prime_divisors(m))
    if (e % p != 0 || cofactor % p == 0) return false;
  return m % 4 != 0 || (q - 1) % 4 == 0;
}

PrimeFieldElement construct_a(u64 q, u64 m) {
  require_supported_field(q);
  if (!binomial_exists(q, m))
    throw Error(ErrorKind::NoBinomialExists, "no irreducible binomial exists for q=" + std::to_string(q) +
                                                 ", m=" + std::to_string(m));
  u64 e = 1;
  for (u64 p : prime_divisors(m)) e *= ipow(p, valuation(q - 1, p));
  const PrimeFieldElement alpha = find_primitive_element(q);
  return alpha.pow((q - 1) / e);
}

u64 order_by_formula(u64 q, u64 m) {
  u64 l = 1;
  for (u64 p : prime_divisors(m)) {
    const unsigned s = valuation(m, p);
    const unsigned t = valuation(q - 1, p);
    if (s > t) l *= ipow(p, s - t);
  }
  return l;
}

Decomposition decompose(u64 q, u64 m) {
  if (!binomial_exists(q, m))
    throw Error(ErrorKind::NoBinomialExists, "no irreducible binomial exists for q=" + std::to_string(q) +
                                                 ", m=" + std::to_string(m));
  const u64 l_direct =
      m == 1 ? 1 : mpz_get_ui(multiplicative_order_mod(to_mpz(q), to_mpz(m)).get_mpz_t());
  const u64 l_formula = order_by_formula(q, m);
  if (l_direct != l_formula)
    throw Error(ErrorKind::FormulaMismatch, "ord_m(q) = " + std::to_string(l_direct) +
                                                " but the prime-power formula gives " +
                                                std::to_string(l_formula));
  u64 k = 1;
  for (u64 p : prime_divisors(m)) k *= ipow(p, std::min(valuation(m, p), valuation(q - 1, p)));
  if (k * l_direct != m)
    throw Error(ErrorKind::FormulaMismatch, "k * l != m for q=" + std::to_string(q) +
                                                " m=" + std::to_string(m));
  return {k, l_direct};
}

ExtensionSpec build_spec(u64 q, u64 m, u64 b, std::optional<u64> a_override) {
  if (q % 2 == 0 || q == 3)
    throw Error(ErrorKind::UnsupportedField, "only odd prime fields with q >= 5 are supported");
  const PrimeField field = require_supported_field(q);
  if (m < 2) throw Error(ErrorKind::InvalidArgument, "extension degree m must be at least 2");
  if (b % q == 0) throw Error(ErrorKind::InvalidArgument, "b must be a nonzero element of F_q");
  if (!binomial_exists(q, m))
    throw Error(ErrorKind::NoBinomialExists, "no irreducible binomial exists for q=" + std::to_string(q) +
                                                 ", m=" + std::to_string(m));

  ExtensionSpec spec;
  spec.q = q;
  spec.m = m;
  spec.b = field.element(b);
  if (a_override) {
    const PrimeFieldElement a = field.element(*a_override);
    if (a.is_zero() || !check_binomial_irreducible(q, m, a))
      throw Error(ErrorKind::IrreducibilityFailure,
                  "x^" + std::to_string(m) + " - " + std::to_string(a.value()) +
                      " is reducible over F_" + std::to_string(q));
    spec.a = a;
  } else {
    spec.a = construct_a(q, m);
  }
  spec.e = element_order(spec.a);

  const Decomposition dec = decompose(q, m);
  spec.k = dec.k;
  spec.l = dec.l;

  mpz_class q_to_l;
  mpz_pow_ui(q_to_l.get_mpz_t(), to_mpz(q).get_mpz_t(), spec.l);
  if ((q_to_l - 1) % m != 0) throw Error(ErrorKind::FormulaMismatch, "m does not divide q^l - 1");
  spec.t = (q_to_l - 1) / m;
  spec.t_mod = mpz_get_ui(mpz_class(spec.t % to_mpz(q - 1)).get_mpz_t());

  // alpha_i: the exponent s in [0, l) with q^s = i*k + 1 (mod m).
  std::vector<u64> alpha_of_residue(m, spec.l);
  u64 power = 1;
  for (u64 s = 0; s < spec.l; ++s) {
    alpha_of_residue[power] = s;
    power = mulmod_u64(power, q % m, m);
  }
  for (u64 i = 0; i < spec.l; ++i) {
    const u64 degree = i * spec.k + 1;
    const u64 alpha = alpha_of_residue[degree % m];
    if (alpha >= spec.l)
      throw Error(ErrorKind::FormulaMismatch,
                  std::to_string(degree) + " is not a power of q modulo " + std::to_string(m));
    mpz_class q_alpha;
    mpz_pow_ui(q_alpha.get_mpz_t(), to_mpz(q).get_mpz_t(), alpha);
    spec.exponent_table.push_back({alpha, (q_alpha - degree) / m});
  }

  if ((q - 1) % m == 0) spec.warnings.emplace_back(kFlagMDividesQMinus1);
  if (spec.l < 2) spec.warnings.emplace_back(kFlagLBelow2);
  if (spec.k < 3) spec.warnings.emplace_back(kFlagKBelow3);
  if (spec.m < 8) spec.warnings.emplace_back(kFlagMBelow8);

  if (!verify_lemma3(spec))
    throw Error(ErrorKind::FormulaMismatch, "ord(a^t) != k");
  return spec;
}

bool verify_lemma3(const ExtensionSpec& spec) { return element_order(spec.a_to_t()) == spec.k; }

bool verify_subgroup_identity(const ExtensionSpec& spec) {
  std::set<u64> powers, progression;
  u64 power = 1 % spec.m;
  for (u64 i = 0; i < spec.l; ++i) {
    powers.insert(power);
    progression.insert((i * spec.k + 1) % spec.m);
    power = mulmod_u64(power, spec.q % spec.m, spec.m);
  }
  return powers == progression && powers.size() == spec.l;
}

nlohmann::ordered_json to_json(const ExtensionSpec& spec) {
  nlohmann::ordered_json j;
  j["q"] = spec.q;
  j["m"] = spec.m;
  j["a"] = spec.a.value();
  j["b"] = spec.b.value();
  j["e"] = spec.e;
  j["k"] = spec.k;
  j["l"] = spec.l;
  j["t"] = spec.t.get_str();
  auto alpha = nlohmann::ordered_json::array();
  auto r = nlohmann::ordered_json::array();
  for (const auto& entry : spec.exponent_table) {
    alpha.push_back(entry.alpha);
    r.push_back(entry.r.get_str());
  }
  j["alpha"] = std::move(alpha);
  j["r"] = std::move(r);
  return j;
}

}  // namespace binorder
