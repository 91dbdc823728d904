// pgh: construct p-groups, compute multipliers and capability, and run the
// verification suites.
//
// Exit codes: 0 success, 1 a verification check failed, 2 bad input,
// 3 an internal consistency assertion failed.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "pgh/errors.hpp"
#include "pgh/suites.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace pgh;

struct Source {
  std::string family;
  std::string file;
  int p = 0;
  int m = 0;
  int n = 0;
  int d = 0;
  std::vector<int> exponents;
  int order_exp = 0;
  int index = 0;
};

void add_source(CLI::App* cmd, Source& s) {
  cmd->add_option("--family", s.family, "G1..G6, E1, Q8, MIN_NONAB_A, MIN_NONAB_B, HOMOCYCLIC, ABELIAN, SMALL");
  cmd->add_option("--file", s.file, "presentation JSON file");
  cmd->add_option("--p", s.p, "prime");
  cmd->add_option("--m", s.m);
  cmd->add_option("--n", s.n);
  cmd->add_option("--d", s.d);
  cmd->add_option("--exponents", s.exponents, "ABELIAN exponents")->delimiter(',');
  cmd->add_option("--order-exp", s.order_exp, "SMALL: table of order p^e");
  cmd->add_option("--index", s.index, "SMALL: 1-based table entry");
}

struct Loaded {
  std::string name;
  PcPresentation group;
};

Loaded load(const Source& s) {
  if (s.family.empty() == s.file.empty()) throw InputError("give exactly one of --family or --file");
  if (!s.file.empty()) {
    std::ifstream in(s.file);
    if (!in) throw InputError("cannot read '" + s.file + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return {s.file, parse(ss.str())};
  }
  FamilySpec f;
  f.family = parse_family(s.family);
  f.p = s.p;
  f.m = s.m;
  f.n = s.n;
  f.d = s.d;
  f.exponents = s.exponents;
  f.order_exp = s.order_exp;
  f.index = s.index;
  if (f.p == 0) throw InputError("--family needs --p");
  return {tag(f), make(f)};
}

json quotient_json(const AbelianType& a) { return a.divisors(); }

int cmd_group(const Source& src, const std::string& format) {
  const Loaded g = load(src);
  const StructureStats st = structure_stats(g.group);
  if (format == "json") {
    json j;
    j["group"] = g.name;
    j["presentation"] = json::parse(serialize(g.group));
    j["order"] = g.group.order();
    j["n"] = st.n;
    j["k"] = st.k;
    j["d"] = st.d;
    j["class"] = st.nilpotency_class;
    j["quotient_type"] = quotient_json(st.quotient_type);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << serialize(g.group) << "order " << g.group.prime() << "^" << st.n << " = " << g.group.order() << "\n"
              << "n=" << st.n << " k=" << st.k << " d=" << st.d << " class=" << st.nilpotency_class << "\n"
              << "G/G' " << st.quotient_type.to_string() << "\n";
  }
  return 0;
}

int cmd_multiplier(const Source& src, const std::string& format) {
  const Loaded g = load(src);
  const AbelianType M = schur_multiplier(g.group);
  if (format == "json")
    std::cout << json{{"group", g.name}, {"multiplier", M.divisors()}, {"log_order", M.log_order()}}.dump(2)
              << "\n";
  else
    std::cout << M.to_string() << "\n";
  return 0;
}

int cmd_capable(const Source& src, const std::string& format) {
  const Loaded g = load(src);
  const auto x = epicenter_crosscheck(g.group);
  if (!x.agree) throw ComputationError("epicenter differs between the two stem covers");
  const bool capable = x.canonical.is_trivial();
  if (format == "json")
    std::cout << json{{"group", g.name}, {"capable", capable}, {"epicenter_order", x.canonical.order(g.group.prime())}}
                     .dump(2)
              << "\n";
  else
    std::cout << (capable ? "true" : "false") << "  |Z*(G)| = " << x.canonical.order(g.group.prime()) << "\n";
  return 0;
}

int cmd_bounds(const Source& src, int n, int k, int d, const std::string& format) {
  std::string name;
  if (!src.family.empty() || !src.file.empty()) {
    const Loaded g = load(src);
    const StructureStats st = structure_stats(g.group);
    name = g.name;
    n = st.n;
    k = st.k;
    d = st.d;
  }
  const Bounds b = bounds(n, k, d);
  if (format == "json") {
    json j;
    if (!name.empty()) j["group"] = name;
    j["n"] = n;
    j["k"] = k;
    j["d"] = d;
    j["green"] = half_json(b.green2);
    j["niroomand"] = half_json(b.niroomand2);
    j["rai"] = half_json(b.rai2);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "green " << half_string(b.green2) << "\n"
              << "niroomand " << half_string(b.niroomand2) << "\n"
              << "rai " << half_string(b.rai2) << "\n";
  }
  return 0;
}

int cmd_report(const Source& src, const std::string& format) {
  const Loaded g = load(src);
  const GroupReport r = report(g.group, g.name);
  if (format == "json") {
    std::cout << report_json(r).dump(2) << "\n";
  } else {
    std::cout << std::boolalpha << r.name << ": n=" << r.n << " k=" << r.k << " d=" << r.d << " class=" << r.nilpotency_class
              << "\nG/G' " << r.quotient_type.to_string() << "  M(G) " << r.multiplier.to_string()
              << "\nbounds green " << half_string(r.bounds.green2) << ", niroomand "
              << half_string(r.bounds.niroomand2) << ", rai " << half_string(r.bounds.rai2)
              << "\nattains rai " << r.attains_rai << ", niroomand " << r.attains_niroomand << "; capable "
              << r.capable << "; family " << (r.family ? tag(*r.family) : "none") << "\n";
    for (const auto& c : r.checks) std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << "\n";
  }
  return r.all_pass() ? 0 : 1;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

int cmd_verify(const std::string& suite, const SuiteOptions& opt, const std::string& format) {
  const auto rows = run_suite(suite, opt);
  std::size_t failed = 0;
  for (const auto& r : rows) failed += !r.pass;
  if (format == "json") {
    json j;
    j["suite"] = suite;
    j["checks"] = rows.size();
    j["failed"] = failed;
    j["rows"] = json::array();
    for (const auto& r : rows)
      j["rows"].push_back(
          {{"suite", r.suite}, {"group", r.group}, {"check", r.check}, {"pass", r.pass}, {"detail", r.detail}});
    std::cout << j.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "suite,group,check,pass,detail\n";
    for (const auto& r : rows)
      std::cout << r.suite << ',' << csv_field(r.group) << ',' << csv_field(r.check) << ','
                << (r.pass ? "true" : "false") << ',' << csv_field(r.detail) << "\n";
  } else {
    for (const auto& r : rows)
      std::cout << (r.pass ? "PASS  " : "FAIL  ") << r.suite << "  " << r.group << "  " << r.check
                << (r.detail.empty() ? "" : "  " + r.detail) << "\n";
    std::cout << rows.size() << " checks, " << failed << " failed\n";
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"p-group Schur multipliers, capability and bound verification"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "text, json or csv")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();

  Source src;
  auto* group = app.add_subcommand("group", "print a presentation and its structure");
  auto* mult = app.add_subcommand("multiplier", "Schur multiplier");
  auto* cap = app.add_subcommand("capable", "capability via the epicenter");
  auto* rep = app.add_subcommand("report", "bounds, attainment, family match and checks");
  for (auto* c : {group, mult, cap, rep}) add_source(c, src);

  auto* bnd = app.add_subcommand("bounds", "bound exponents from (n, k, d) or a group");
  int bn = 0, bk = 0, bd = 0, bp = 0;
  bnd->add_option("--family", src.family);
  bnd->add_option("--file", src.file);
  bnd->add_option("--p", bp);
  bnd->add_option("--m", src.m);
  bnd->add_option("--n", bn);
  bnd->add_option("--k", bk);
  bnd->add_option("--d", bd);

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all";
  SuiteOptions opt;
  int vp = 0;
  ver->add_option("--suite", suite, "all, paper, sweep, homology, capability")->capture_default_str();
  ver->add_option("--p", vp, "prime (default: 2, 3 and 5)");
  ver->add_option("--max-exponent", opt.max_exponent, "largest table order exponent (3 or 4)")
      ->capture_default_str();
  ver->add_option("--jobs", opt.jobs, "worker threads")->capture_default_str();
  ver->add_flag("--deep", opt.deep, "include G6");

  for (auto* c : {group, mult, cap, rep, bnd, ver})
    c->add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    if (*group) return cmd_group(src, format);
    if (*mult) return cmd_multiplier(src, format);
    if (*cap) return cmd_capable(src, format);
    if (*rep) return cmd_report(src, format);
    if (*bnd) {
      if (src.family.empty() && src.file.empty()) {
        if (bn == 0) throw InputError("bounds needs --n, --k, --d or a group");
      } else {
        src.p = bp;
        src.n = bn;
        src.d = bd;
      }
      return cmd_bounds(src, bn, bk, bd, format);
    }
    if (*ver) {
      if (vp != 0) opt.primes = {vp};
      return cmd_verify(suite, opt, format);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ComputationError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
