#include "binorder/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <mutex>
#include <numeric>
#include <thread>

#include "binorder/construction.hpp"

namespace binorder {

namespace {

using u64 = std::uint64_t;

int moebius(u64 n) {
  int sign = 1;
  for (u64 p : prime_divisors(n)) {
    if (valuation(n, p) > 1) return 0;
    sign = -sign;
  }
  return sign;
}

// Right-to-left binary exponentiation, kept separate from pow() for the certificate.
ExtElement power_right_to_left(ExtElement base, mpz_class e) {
  ExtElement acc = ExtElement::one(base.ring());
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t()) != 0) acc = acc * base;
    base = base * base;
    mpz_fdiv_q_2exp(e.get_mpz_t(), e.get_mpz_t(), 1);
  }
  return acc;
}

template <typename Fn>
CheckResult timed_check(const char* name, Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult r{name, CheckStatus::Fail, "", 0.0};
  try {
    fn(r);
  } catch (const Error& err) {
    if (is_budget_error(err.kind())) {
      r.status = CheckStatus::Skipped;
      r.note = "budget";
    } else {
      r.status = CheckStatus::Fail;
      r.note = err.what();
    }
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

CheckStatus pass_if(bool ok) { return ok ? CheckStatus::Pass : CheckStatus::Fail; }

}  // namespace

mpz_class cyclotomic_value(u64 q, u64 d) {
  mpz_class numerator = 1, denominator = 1;
  for (u64 e : divisors(d)) {
    const int mu = moebius(d / e);
    if (mu == 0) continue;
    mpz_class term;
    mpz_ui_pow_ui(term.get_mpz_t(), q, e);
    term -= 1;
    (mu > 0 ? numerator : denominator) *= term;
  }
  return numerator / denominator;
}

Factorization group_order_factorization(u64 q, u64 m, const FactorOptions& options) {
  Factorization total;
  for (u64 d : divisors(m)) total.merge(factorize(cyclotomic_value(q, d), options));
  return total;
}

mpz_class exact_element_order(const ExtElement& x, const FactorOptions& options) {
  if (x.is_zero()) throw Error(ErrorKind::ZeroElement, "zero has no multiplicative order");
  const BinomialRing& ring = x.ring();
  const Factorization factors = group_order_factorization(ring.q, ring.m, options);
  const mpz_class group_order = factors.value();
  if (!pow(x, group_order).is_one())
    throw Error(ErrorKind::InvalidArgument, "x^(q^m - 1) != 1: the ring is not a field or x is not a unit");
  return reduce_order(group_order, factors, [&](const mpz_class& e) { return pow(x, e).is_one(); });
}

bool verify_order_certificate(const ExtElement& x, const mpz_class& d, unsigned cap_bits) {
  if (d < 1) return false;
  if (!power_right_to_left(x, d).is_one()) return false;
  FactorOptions options;
  options.size_cap_bits = cap_bits;
  for (const auto& [p, e] : factorize(d, options))
    if (power_right_to_left(x, d / p).is_one()) return false;
  return true;
}

const CheckResult* VerificationReport::check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

bool VerificationReport::all_checks_pass() const {
  if (error_kind) return false;
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

VerificationReport verify_instance(u64 q, u64 m, u64 b, const OracleOptions& options,
                                   std::optional<u64> a_override) {
  VerificationReport report;
  report.q = q;
  report.m = m;
  report.b = b;
  report.spec = build_spec(q, m, b, a_override);
  const ExtensionSpec& spec = *report.spec;
  report.bounds = theorem1_bound(spec.k, spec.l, spec.m);
  const BoundReport& bounds = *report.bounds;
  auto& checks = report.checks;

  checks.push_back(timed_check(kCheckLemma2Subgroup, [&](CheckResult& r) {
    const u64 cofactor = (q - 1) / spec.k;
    const bool ok = verify_subgroup_identity(spec) && (q - 1) % spec.k == 0 && spec.e % spec.k == 0 &&
                    std::gcd(cofactor, spec.l) == 1 && spec.k * spec.l == m;
    r.status = pass_if(ok);
  }));

  checks.push_back(timed_check(kCheckLemma3Order, [&](CheckResult& r) { r.status = pass_if(verify_lemma3(spec)); }));

  const std::vector<ConjugateBinomial> family = binomial_family(spec);
  checks.push_back(timed_check(kCheckTheorem4Distinct, [&](CheckResult& r) {
    const std::vector<ConjugateBinomial> linear = linear_binomials(spec);
    bool ok = family.size() == spec.k * spec.l && family_pairwise_distinct(spec, family);
    for (u64 j = 0; ok && j < spec.k; ++j) {
      // Row 0 of the family has r_0 = 0, so it must reproduce the iterated linear binomials.
      ok = family[j].coefficient == linear[j].coefficient && !family[j].coefficient.is_zero();
    }
    r.status = pass_if(ok);
  }));

  checks.push_back(timed_check(kCheckTheorem4Orbit, [&](CheckResult& r) {
    r.status = pass_if(family_matches_orbit(spec, family));
  }));

  checks.push_back(timed_check(kCheckLemma6, [&](CheckResult& r) {
    if (spec.l < 2) {
      r.status = CheckStatus::Pass;
      r.note = "vacuous for l = 1";
      return;
    }
    const auto counterexample = check_lemma6(spec.k, spec.l, spec.k, options.lemma6_budget);
    r.status = pass_if(!counterexample);
    if (counterexample) r.note = "counterexample at d0 = " + std::to_string(counterexample->d0);
  }));

  checks.push_back(timed_check(kCheckTheorem7Distinct, [&](CheckResult& r) {
    report.theorem7_count = theorem7_distinct_count(spec, options.enumeration_budget);
    r.status = pass_if(mpz_class(static_cast<unsigned long>(*report.theorem7_count)) == bounds.s_count);
  }));

  const ExtElement x = spec.theta_plus_b();
  report.group_order = group_order_factorization(q, m, options.factor).value();
  report.exact_order = exact_element_order(x, options.factor);

  checks.push_back(timed_check(kCheckOrderCertificate, [&](CheckResult& r) {
    r.status = pass_if(report.group_order % report.exact_order == 0 &&
                       verify_order_certificate(x, report.exact_order));
  }));

  checks.push_back(timed_check(kCheckLemma5Holds, [&](CheckResult& r) {
    r.status = pass_if(mpq_class(report.exact_order) >= bounds.lemma5_bound);
  }));

  checks.push_back(timed_check(kCheckTheorem7Order, [&](CheckResult& r) {
    if (!report.theorem7_count) {
      r.status = CheckStatus::Skipped;
      r.note = "budget";
      return;
    }
    r.status = pass_if(report.exact_order >= mpz_class(static_cast<unsigned long>(*report.theorem7_count)));
  }));

  checks.push_back(timed_check(kCheckCase1Dominates, [&](CheckResult& r) {
    if (bounds.case_id != 1) {
      r.status = CheckStatus::Skipped;
      r.note = "case 2";
      return;
    }
    r.status = pass_if(case1_bound_dominates(spec.k, spec.m));
  }));

  checks.push_back(timed_check(kCheckTheorem1Holds, [&](CheckResult& r) {
    r.status = pass_if(report.exact_order >= bounds.theorem1_bound);
  }));

  return report;
}

std::vector<ScanInstance> scan_instances(const ScanOptions& options) {
  std::vector<ScanInstance> out;
  for (u64 q : options.q_set) {
    if (q < 5 || q % 2 == 0 || !is_prime_u64(q) || q >= (u64{1} << 32))
      throw Error(ErrorKind::InvalidArgument, "scan requires odd primes q >= 5, got " + std::to_string(q));
    for (u64 m = 2; m <= options.m_max; ++m) {
      if (!binomial_exists(q, m)) continue;
      if (!options.include_degenerate && (q - 1) % m == 0) continue;
      if (options.b_rule == BRule::One) {
        out.push_back({q, m, 1});
      } else {
        for (u64 b = 1; b < q; ++b) out.push_back({q, m, b});
      }
    }
  }
  return out;
}

void scan(const ScanOptions& options, const std::function<void(const VerificationReport&)>& emit) {
  const std::vector<ScanInstance> instances = scan_instances(options);
  std::vector<std::optional<VerificationReport>> results(instances.size());
  std::mutex mutex;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t index = next++; index < instances.size(); index = next++) {
      const ScanInstance& inst = instances[index];
      VerificationReport report;
      try {
        report = verify_instance(inst.q, inst.m, inst.b, options.oracle);
      } catch (const Error& err) {
        report = VerificationReport{};
        report.q = inst.q;
        report.m = inst.m;
        report.b = inst.b;
        report.error_kind = err.kind();
        report.error_message = err.what();
      }
      {
        std::lock_guard lock(mutex);
        results[index] = std::move(report);
      }
      ready.notify_one();
    }
  };

  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(instances.size())));
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);

  // Emit in instance order as soon as each prefix is complete.
  for (std::size_t emitted = 0; emitted < instances.size(); ++emitted) {
    VerificationReport report;
    {
      std::unique_lock lock(mutex);
      ready.wait(lock, [&] { return results[emitted].has_value(); });
      report = std::move(*results[emitted]);
      results[emitted].reset();
    }
    emit(report);
  }
}

nlohmann::ordered_json to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["q"] = report.q;
  j["m"] = report.m;
  if (report.spec) j["a"] = report.spec->a.value();
  j["b"] = report.b;
  if (report.error_kind) {
    j["error"] = {{"kind", std::string(to_string(*report.error_kind))}, {"message", report.error_message}};
    j["all_checks_pass"] = false;
    return j;
  }
  const ExtensionSpec& spec = *report.spec;
  const BoundReport& bounds = *report.bounds;
  j["e"] = spec.e;
  j["k"] = spec.k;
  j["l"] = spec.l;
  j["t"] = spec.t.get_str();
  j["case"] = bounds.case_id;
  j["exact_order"] = report.exact_order.get_str();
  j["group_order"] = report.group_order.get_str();
  j["theorem1_bound"] = bounds.theorem1_bound.get_str();
  j["lemma5_floor"] = bounds.lemma5_floor.get_str();
  j["s_count"] = bounds.s_count.get_str();
  if (report.theorem7_count)
    j["theorem7_distinct_count"] = std::to_string(*report.theorem7_count);
  else
    j["theorem7_distinct_count"] = "budget";
  if (bounds.lemma8) {
    j["lemma8_w"] = bounds.lemma8->w;
    j["lemma8_count"] = bounds.lemma8->count.get_str();
  } else {
    j["lemma8_w"] = nullptr;
    j["lemma8_count"] = nullptr;
  }
  j["flags"] = bounds.flags;
  j["warnings"] = spec.warnings;
  nlohmann::ordered_json checks;
  for (const auto& c : report.checks) {
    if (c.status == CheckStatus::Skipped)
      checks[c.name] = c.note;
    else
      checks[c.name] = c.status == CheckStatus::Pass;
  }
  j["checks"] = std::move(checks);
  j["all_checks_pass"] = report.all_checks_pass();
  return j;
}

std::string csv_header() { return "q,m,a,b,k,l,case,s_count,theorem1_bound,exact_order,all_checks_pass"; }

std::string to_csv_row(const VerificationReport& report) {
  std::string row = std::to_string(report.q) + "," + std::to_string(report.m) + ",";
  if (!report.spec || !report.bounds || report.error_kind) {
    row += "," + std::to_string(report.b) + ",,,,,,,false";
    return row;
  }
  const ExtensionSpec& spec = *report.spec;
  const BoundReport& bounds = *report.bounds;
  row += std::to_string(spec.a.value()) + "," + std::to_string(report.b) + "," + std::to_string(spec.k) + "," +
         std::to_string(spec.l) + "," + std::to_string(bounds.case_id) + "," + bounds.s_count.get_str() + "," +
         bounds.theorem1_bound.get_str() + "," + report.exact_order.get_str() + "," +
         (report.all_checks_pass() ? "true" : "false");
  return row;
}

}  // namespace binorder
