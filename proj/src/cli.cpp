#include "binorder/cli.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <thread>

#include "CLI11.hpp"
#include "binorder/construction.hpp"
#include "binorder/counting.hpp"
#include "binorder/error.hpp"
#include "binorder/oracle.hpp"
#include "binorder/parameters.hpp"

namespace binorder::cli {

namespace {

using u64 = std::uint64_t;
using json = nlohmann::ordered_json;

struct InstanceArgs {
  u64 q = 0;
  u64 m = 0;
  u64 b = 1;
  u64 a = 0;
  CLI::Option* a_option = nullptr;
  std::string format = "json";

  std::optional<u64> a_override() const {
    return a_option != nullptr && a_option->count() > 0 ? std::optional<u64>(a) : std::nullopt;
  }
};

struct BudgetArgs {
  u64 enumeration_budget = kDefaultEnumerationBudget;
  unsigned factor_cap_bits = 128;

  OracleOptions oracle() const {
    OracleOptions o;
    o.enumeration_budget = enumeration_budget;
    o.factor.size_cap_bits = factor_cap_bits;
    return o;
  }
};

void add_instance_options(CLI::App* cmd, InstanceArgs& args, std::vector<std::string> formats) {
  cmd->add_option("--q", args.q, "prime size of the base field (q >= 5)")->required();
  cmd->add_option("--m", args.m, "extension degree")->required();
  cmd->add_option("--b", args.b, "nonzero constant b of theta + b")->capture_default_str();
  args.a_option = cmd->add_option("--a", args.a, "use this a instead of the canonical one (must give an irreducible x^m - a)");
  cmd->add_option("--format", args.format, "output format")
      ->capture_default_str()
      ->check(CLI::IsMember(std::move(formats)));
}

void add_budget_options(CLI::App* cmd, BudgetArgs& args) {
  cmd->add_option("--enum-budget", args.enumeration_budget, "maximum |S| enumerated for distinctness")
      ->capture_default_str();
  cmd->add_option("--factor-cap-bits", args.factor_cap_bits, "bit-size cap per cyclotomic factor")
      ->capture_default_str();
}

json bounds_json(const BoundReport& bounds) {
  json j;
  j["k"] = bounds.k;
  j["l"] = bounds.l;
  j["s_count"] = bounds.s_count.get_str();
  j["theorem1_bound"] = bounds.theorem1_bound.get_str();
  if (bounds.lemma8) {
    j["lemma8_w"] = bounds.lemma8->w;
    j["lemma8_count"] = bounds.lemma8->count.get_str();
  } else {
    j["lemma8_w"] = nullptr;
    j["lemma8_count"] = nullptr;
  }
  j["case"] = bounds.case_id;
  j["flags"] = bounds.flags;
  return j;
}

std::string join(const std::vector<std::string>& items) {
  if (items.empty()) return "none";
  std::string out;
  for (const auto& s : items) out += (out.empty() ? "" : ", ") + s;
  return out;
}

std::string status_text(const CheckResult& c) {
  switch (c.status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skipped: return "skipped (" + c.note + ")";
  }
  return "?";
}

void print_report_text(std::ostream& out, const VerificationReport& r) {
  out << "instance q=" << r.q << " m=" << r.m << " b=" << r.b << '\n';
  if (r.error_kind) {
    out << "  error: " << to_string(*r.error_kind) << ": " << r.error_message << '\n';
    return;
  }
  const ExtensionSpec& spec = *r.spec;
  const BoundReport& bounds = *r.bounds;
  out << "  a=" << spec.a << " e=" << spec.e << " k=" << spec.k << " l=" << spec.l << " t=" << spec.t
      << " case=" << bounds.case_id << '\n';
  out << "  exact order of theta+b: " << r.exact_order << '\n';
  out << "  group order q^m-1:      " << r.group_order << '\n';
  out << "  ceil(2^sqrt(2m)):       " << bounds.theorem1_bound << '\n';
  out << "  floor((29/5)^k):        " << bounds.lemma5_floor << '\n';
  out << "  |S|:                    " << bounds.s_count << '\n';
  if (bounds.lemma8)
    out << "  lemma 8: w=" << bounds.lemma8->w << " count=" << bounds.lemma8->count
        << " (real-valued w=" << std::fixed << std::setprecision(4) << bounds.lemma8->real_w
        << std::defaultfloat << ")\n";
  out << "  flags: " << join(bounds.flags) << '\n';
  out << "  warnings: " << join(spec.warnings) << '\n';
  for (const auto& c : r.checks)
    out << "  " << std::left << std::setw(26) << c.name << std::right << status_text(c) << "  " << std::fixed
        << std::setprecision(3) << c.seconds << " s" << std::defaultfloat << '\n';
  out << "  all checks pass: " << (r.all_checks_pass() ? "yes" : "NO") << '\n';
}

int report_exit_code(const VerificationReport& r) {
  if (r.error_kind) return is_budget_error(*r.error_kind) ? kBudget : kCheckFailed;
  return r.all_checks_pass() ? kOk : kCheckFailed;
}

int cmd_params(const InstanceArgs& args, std::ostream& out, std::ostream& err) {
  const ExtensionSpec spec = build_spec(args.q, args.m, args.b, args.a_override());
  for (const auto& w : spec.warnings) err << "warning: " << w << '\n';
  if (args.format == "json") {
    out << to_json(spec).dump() << '\n';
    return kOk;
  }
  out << "q = " << spec.q << "\nm = " << spec.m << "\na = " << spec.a << "\nb = " << spec.b << "\ne = " << spec.e
      << "\nk = " << spec.k << "\nl = " << spec.l << "\nt = " << spec.t << '\n';
  for (u64 i = 0; i < spec.l; ++i)
    out << "i=" << i << " degree=" << i * spec.k + 1 << " alpha=" << spec.exponent_table[i].alpha
        << " r=" << spec.exponent_table[i].r << '\n';
  out << "warnings: " << join(spec.warnings) << '\n';
  return kOk;
}

int cmd_binomials(const InstanceArgs& args, std::ostream& out) {
  const ExtensionSpec spec = build_spec(args.q, args.m, args.b, args.a_override());
  const auto family = binomial_family(spec);
  if (args.format == "json") {
    json arr = json::array();
    for (const auto& member : family) {
      json j;
      j["i"] = member.i;
      j["j"] = member.j;
      j["degree"] = member.degree;
      j["coefficient"] = member.coefficient.value();
      j["elem"] = to_string(member.to_element(spec.ring()));
      arr.push_back(std::move(j));
    }
    out << arr.dump() << '\n';
  } else {
    for (const auto& member : family)
      out << "i=" << member.i << " j=" << member.j << " elem=" << to_string(member.to_element(spec.ring())) << '\n';
  }
  return kOk;
}

int cmd_count_s(const InstanceArgs& args, const BudgetArgs& budget, bool exhaustive, std::ostream& out) {
  const ExtensionSpec spec = build_spec(args.q, args.m, args.b, args.a_override());
  BoundReport bounds = theorem1_bound(spec.k, spec.l, spec.m);
  json j = bounds_json(bounds);
  int code = kOk;
  if (exhaustive) {
    u64 enumerated = 0;
    for_each_in_S(spec.k, spec.l, spec.m, [&](const SelectionVector&) { ++enumerated; },
                  budget.enumeration_budget);
    const u64 distinct = theorem7_distinct_count(spec, budget.enumeration_budget);
    j["exhaustive_count"] = std::to_string(enumerated);
    j["theorem7_distinct_count"] = std::to_string(distinct);
    const mpz_class s = bounds.s_count;
    if (mpz_class(static_cast<unsigned long>(enumerated)) != s || mpz_class(static_cast<unsigned long>(distinct)) != s) {
      j["flags"].push_back("exhaustive_mismatch");
      code = kCheckFailed;
    }
  }
  if (args.format == "json") {
    out << j.dump() << '\n';
  } else {
    for (const auto& [key, value] : j.items())
      out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
  return code;
}

int cmd_order(const InstanceArgs& args, const BudgetArgs& budget, std::ostream& out) {
  const ExtensionSpec spec = build_spec(args.q, args.m, args.b, args.a_override());
  const ExtElement x = spec.theta_plus_b();
  const FactorOptions factor = budget.oracle().factor;
  const mpz_class group_order = group_order_factorization(spec.q, spec.m, factor).value();
  const mpz_class order = exact_element_order(x, factor);
  const bool certified = verify_order_certificate(x, order);
  if (args.format == "json") {
    json j;
    j["q"] = spec.q;
    j["m"] = spec.m;
    j["a"] = spec.a.value();
    j["b"] = spec.b.value();
    j["order"] = order.get_str();
    j["group_order"] = group_order.get_str();
    j["certified"] = certified;
    out << j.dump() << '\n';
  } else {
    out << "order of theta+" << spec.b << " in F_" << spec.q << "[x]/(x^" << spec.m << " - " << spec.a
        << "): " << order << '\n'
        << "group order: " << group_order << '\n'
        << "certificate: " << (certified ? "verified" : "FAILED") << '\n';
  }
  return certified ? kOk : kCheckFailed;
}

int cmd_verify(const InstanceArgs& args, const BudgetArgs& budget, std::ostream& out) {
  const VerificationReport report = verify_instance(args.q, args.m, args.b, budget.oracle(), args.a_override());
  if (args.format == "json")
    out << to_json(report).dump() << '\n';
  else if (args.format == "csv")
    out << csv_header() << '\n' << to_csv_row(report) << '\n';
  else
    print_report_text(out, report);
  return report_exit_code(report);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Constructs and verifies high multiplicative order elements theta + b in F_q[x]/(x^m - a)",
               "binorder"};
  app.require_subcommand(1);

  InstanceArgs params_args, binomials_args, count_args, order_args, verify_args;
  BudgetArgs count_budget, order_budget, verify_budget, scan_budget;
  bool exhaustive = false;

  auto* params = app.add_subcommand("params", "print the derived parameters of an instance");
  add_instance_options(params, params_args, {"json", "text"});

  auto* binomials = app.add_subcommand("binomials", "print the k*l conjugate binomials of theta + b");
  binomials_args.format = "text";
  add_instance_options(binomials, binomials_args, {"json", "text"});

  auto* count_s = app.add_subcommand("count-s", "count the selection set S and report the order bounds");
  add_instance_options(count_s, count_args, {"json", "text"});
  add_budget_options(count_s, count_budget);
  count_s->add_flag("--exhaustive", exhaustive, "also enumerate S and count distinct products");

  auto* order = app.add_subcommand("order", "exact multiplicative order of theta + b");
  add_instance_options(order, order_args, {"json", "text"});
  add_budget_options(order, order_budget);

  auto* verify = app.add_subcommand("verify", "run every check on one instance");
  add_instance_options(verify, verify_args, {"json", "csv", "text"});
  add_budget_options(verify, verify_budget);

  std::vector<u64> q_set;
  u64 m_max = 0;
  std::string b_rule = "one";
  bool include_degenerate = false;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::string scan_format = "json";
  auto* scan_cmd = app.add_subcommand("scan", "verify every valid instance over a grid of q and m");
  scan_cmd->add_option("--q", q_set, "primes q, comma separated")->required()->delimiter(',');
  scan_cmd->add_option("--m-max", m_max, "largest extension degree")->required();
  scan_cmd->add_option("--b-rule", b_rule, "b = 1 only, or every nonzero b")
      ->capture_default_str()
      ->check(CLI::IsMember({"one", "all"}));
  scan_cmd->add_flag("--include-degenerate", include_degenerate, "also scan m dividing q - 1");
  scan_cmd->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  scan_cmd->add_option("--format", scan_format, "output format")
      ->capture_default_str()
      ->check(CLI::IsMember({"json", "csv", "text"}));
  add_budget_options(scan_cmd, scan_budget);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*params) return cmd_params(params_args, out, err);
    if (*binomials) return cmd_binomials(binomials_args, out);
    if (*count_s) return cmd_count_s(count_args, count_budget, exhaustive, out);
    if (*order) return cmd_order(order_args, order_budget, out);
    if (*verify) return cmd_verify(verify_args, verify_budget, out);

    ScanOptions options;
    options.q_set = q_set;
    options.m_max = m_max;
    options.b_rule = b_rule == "all" ? BRule::All : BRule::One;
    options.include_degenerate = include_degenerate;
    options.threads = threads;
    options.oracle = scan_budget.oracle();
    if (scan_format == "csv") out << csv_header() << '\n';
    bool any_failed = false, any_budget = false;
    scan(options, [&](const VerificationReport& report) {
      if (scan_format == "json")
        out << to_json(report).dump() << '\n';
      else if (scan_format == "csv")
        out << to_csv_row(report) << '\n';
      else
        print_report_text(out, report);
      out.flush();
      const int code = report_exit_code(report);
      any_failed = any_failed || code == kCheckFailed;
      any_budget = any_budget || code == kBudget;
    });
    return any_failed ? kCheckFailed : any_budget ? kBudget : kOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (is_budget_error(e.kind())) return kBudget;
    if (e.kind() == ErrorKind::FormulaMismatch) return kCheckFailed;
    return kUsage;
  }
}

}  // namespace binorder::cli
