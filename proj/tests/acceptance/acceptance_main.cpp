// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "binorder/construction.hpp"
#include "binorder/counting.hpp"
#include "binorder/error.hpp"
#include "binorder/oracle.hpp"
#include "binorder/parameters.hpp"
#include "oracles.hpp"

using namespace binorder;

namespace {

// Wall-clock limits, seconds.
constexpr double kLimitAC1 = 1.0;
constexpr double kLimitAC2 = 30.0;
constexpr double kLimitAC3 = 60.0;
constexpr double kLimitAC4 = 600.0;

// Property suite sizes.
constexpr int kPairsPerSpec = 10'000;
constexpr int kPowerSamplesPerSpec = 50;
constexpr int kOrderSamplesPerSpec = 8;
constexpr std::uint64_t kOrderSampleMaxM = 32;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "failed: ";
      else detail << "; ";
      detail << what;
      pass = false;
    }
  }
};

/// Every exact order computed anywhere in the suite, for criterion 6.
struct ComputedOrder {
  ExtElement x;
  mpz_class d;
  std::string label;
};
std::vector<ComputedOrder> g_orders;

mpz_class record_order(const ExtElement& x, const std::string& label) {
  mpz_class d = exact_element_order(x);
  g_orders.push_back({x, d, label});
  return d;
}

ScanOptions scan_options() {
  ScanOptions o;
  o.q_set = {5, 7, 11, 13};
  o.m_max = 64;
  o.b_rule = BRule::One;
  o.include_degenerate = false;
  return o;
}

std::string ring_label(const BinomialRing& r) {
  return "(q=" + std::to_string(r.q) + ", m=" + std::to_string(r.m) + ")";
}

void ac1(Outcome& out) {
  const ExtensionSpec s = build_spec(5, 8, 1);
  out.require(s.a.value() == 2 && s.e == 4 && s.k == 4 && s.l == 2 && s.t == 3, "instance parameters");

  const auto family = binomial_family(s);
  std::set<std::string> got, expected;
  for (const auto& c : family) got.insert(to_string(c.to_element(s.ring())));
  for (std::uint64_t c = 1; c <= 4; ++c)
    for (std::uint64_t d : {1, 5}) expected.insert(to_string(ExtElement::binomial(s.ring(), c, d, 1)));
  out.require(family.size() == 8 && got == expected, "family elements");
  out.require(family_pairwise_distinct(s, family), "family distinctness");
  out.require(family_matches_orbit(s, family), "family equals Frobenius orbit");

  const mpz_class count = count_S_dp(s.k, s.l, s.m);
  out.require(count == 60, "count_S_dp = 60");
  out.require(theorem7_distinct_count(s) == 60, "theorem7_distinct_count = 60");

  const mpz_class d = record_order(s.theta_plus_b(), "AC1 theta+1");
  out.require(390624 % d == 0, "order divides 390624");
  const mpz_class floor_bound = theorem1_bound(s.k, s.l, s.m).lemma5_floor;
  out.require(floor_bound == 1131 && d >= floor_bound, "order >= 1131");
  out.detail << "a=2 e=4 k=4 l=2 t=3, |S|=60, distinct=60, ord(theta+1)=" << d.get_str();
}

void ac2(Outcome& out) {
  const ExtensionSpec s = build_spec(5, 32, 1);
  const BoundReport br = theorem1_bound(s.k, s.l, s.m);
  out.require(s.k == 4 && s.l == 8 && br.case_id == 2, "k=4 l=8 case 2");
  out.require(ceil_two_pow_sqrt(64) == 256 && br.theorem1_bound == 256, "ceil(2^sqrt(64)) = 256");
  const Lemma8Result l8 = lemma8_constructive(s.k, s.l);
  out.require(l8.w == 1 && l8.count == 256, "lemma8 (w=1, 256)");
  const mpz_class d = record_order(s.theta_plus_b(), "AC2 theta+1");
  out.require(d >= 256, "order >= 256");
  out.detail << "k=4 l=8 case 2, bound 256, lemma8 (1, 256), ord(theta+1)=" << d.get_str();
}

void ac3(Outcome& out) {
  const VerificationReport r = verify_instance(7, 27, 1);
  out.require(r.spec && r.bounds, "report complete");
  if (!r.spec || !r.bounds) return;
  out.require(r.spec->k == 3 && r.spec->l == 9 && r.bounds->case_id == 2, "k=3 l=9 case 2");
  out.require(r.bounds->theorem1_bound == 163 && ceil_two_pow_sqrt(54) == 163, "bound 163");
  const mpz_class d = record_order(r.spec->theta_plus_b(), "AC3 theta+1");
  out.require(d == r.exact_order && d >= 163, "order >= 163");
  out.require(r.bounds->lemma8 && r.bounds->lemma8->count == 64 && r.bounds->has_flag(kFlagLemma8BelowBound),
              "lemma8 = 64 < 163 flagged");
  out.require(r.all_checks_pass(), "all checks pass");
  out.detail << "k=3 l=9 case 2, bound 163, lemma8 64 flagged, ord(theta+1)=" << d.get_str();
}

std::vector<VerificationReport> g_scan;

void ac4(Outcome& out) {
  scan(scan_options(), [](const VerificationReport& r) { g_scan.push_back(r); });
  out.require(g_scan.size() == scan_instances(scan_options()).size() && !g_scan.empty(), "instance count");
  std::size_t t7_enumerated = 0;
  for (const auto& r : g_scan) {
    const std::string id = "(" + std::to_string(r.q) + "," + std::to_string(r.m) + ")";
    if (r.error_kind) {
      out.require(false, id + " error: " + r.error_message);
      continue;
    }
    g_orders.push_back({r.spec->theta_plus_b(), r.exact_order, "scan " + id});
    out.require(r.exact_order >= r.bounds->theorem1_bound, id + " order >= bound");
    for (const auto& c : r.checks) {
      bool ok = c.status == CheckStatus::Pass;
      if (c.status == CheckStatus::Skipped) {
        // Allowed: theorem 7 beyond the enumeration budget; the case-1 inequality in case 2.
        ok = (c.name == kCheckTheorem7Distinct && c.note == "budget") ||
             (c.name == kCheckCase1Dominates && r.bounds->case_id == 2);
      }
      out.require(ok, id + " " + c.name);
    }
    if (r.theorem7_count) ++t7_enumerated;
  }
  out.detail << g_scan.size() << " instances, all checks true, theorem 7 enumerated on " << t7_enumerated;
}

void ac5(Outcome& out) {
  std::mt19937_64 rng(20261016);
  std::size_t pairs = 0;
  for (const auto& r : g_scan) {
    if (!r.spec) continue;
    const BinomialRing ring = r.spec->ring();
    const auto rand = [&] { return ExtElement(ring, testing::random_coefficients(rng, ring.q, ring.m)); };
    const ExtElement zero = ExtElement::zero(ring), one = ExtElement::one(ring);
    bool ok = true;
    for (int n = 0; n < kPairsPerSpec && ok; ++n, ++pairs) {
      const ExtElement x = rand(), y = rand(), z = rand();
      const ExtElement xy = x * y;
      ok = x + y == y + x && xy == y * x && (x + y) + z == x + (y + z) && xy * z == x * (y * z) &&
           x * (y + z) == xy + x * z && x + zero == x && x * one == x && x + (-x) == zero &&
           frobenius(x + y) == frobenius(x) + frobenius(y) && frobenius(xy) == frobenius(x) * frobenius(y);
    }
    out.require(ok, "field axioms / Frobenius " + ring_label(ring));
    mpz_class inv_exp;
    mpz_ui_pow_ui(inv_exp.get_mpz_t(), ring.q, ring.m);
    inv_exp -= 2;
    for (int n = 0; n < kPowerSamplesPerSpec && ok; ++n) {
      const ExtElement x = rand();
      ok = frobenius(x) == pow(x, ring.q) && (x.is_zero() || (x * pow(x, inv_exp)).is_one());
    }
    out.require(ok, "Frobenius = q-th power / inverses " + ring_label(ring));
  }

  std::size_t irreducibility_cases = 0;
  for (std::uint64_t q : {5, 7, 11, 13}) {
    const testing::NaivePoly poly(q);
    for (std::uint64_t m = 2; m <= 12; ++m)
      for (std::uint64_t a = 1; a < q; ++a, ++irreducibility_cases)
        out.require(check_binomial_irreducible(q, m, {a, q}) == poly.irreducible(testing::binomial_poly(q, m, a)),
                    "irreducibility q=" + std::to_string(q) + " m=" + std::to_string(m) + " a=" + std::to_string(a));
  }

  std::size_t shapes = 0;
  for (std::uint64_t k = 1; k <= 20; ++k)
    for (std::uint64_t l = 1; k * l <= 20; ++l, ++shapes) {
      const std::uint64_t m = k * l;
      const std::uint64_t brute = testing::count_S_brute(k, l, m);
      std::uint64_t visited = 0;
      for_each_in_S(k, l, m, [&](const SelectionVector&) { ++visited; });
      out.require(count_S_dp(k, l, m) == brute && visited == brute,
                  "|S| k=" + std::to_string(k) + " l=" + std::to_string(l));
    }
  out.detail << pairs << " random triples over " << g_scan.size() << " specs, " << irreducibility_cases
             << " binomials, " << shapes << " (k, l) shapes";
}

void ac6(Outcome& out) {
  std::mt19937_64 rng(6);
  for (const auto& r : g_scan) {
    if (!r.spec || r.m > kOrderSampleMaxM) continue;
    const BinomialRing ring = r.spec->ring();
    for (int n = 0; n < kOrderSamplesPerSpec; ++n) {
      const ExtElement x(ring, testing::random_coefficients(rng, ring.q, ring.m));
      if (!x.is_zero()) record_order(x, "random " + ring_label(ring));
    }
  }
  for (const auto& o : g_orders) out.require(verify_order_certificate(o.x, o.d), o.label);
  out.detail << g_orders.size() << " exact orders certified";
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    double limit;  // 0 = no limit
    void (*run)(Outcome&);
  };
  const Criterion criteria[] = {
      {"AC1", kLimitAC1, ac1}, {"AC2", kLimitAC2, ac2}, {"AC3", kLimitAC3, ac3},
      {"AC4", kLimitAC4, ac4}, {"AC5", 0.0, ac5},       {"AC6", 0.0, ac6},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(out);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit > 0 && secs >= c.limit) out.require(false, "runtime limit " + std::to_string(c.limit) + " s");
    std::printf("%s %s (%.2f s) %s\n", c.id, out.pass ? "PASS" : "FAIL", secs, out.detail.str().c_str());
    std::fflush(stdout);
    if (!out.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
