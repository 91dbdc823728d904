#include "pgh/suites.hpp"

#include <atomic>
#include <exception>
#include <functional>
#include <thread>

#include "pgh/errors.hpp"

namespace pgh {

using json = nlohmann::ordered_json;

json half_json(int twice) {
  if (twice % 2 == 0) return twice / 2;
  return twice / 2.0;
}

json report_json(const GroupReport& r) {
  json j;
  j["group"] = r.name;
  j["p"] = r.p;
  j["n"] = r.n;
  j["k"] = r.k;
  j["d"] = r.d;
  j["class"] = r.nilpotency_class;
  j["quotient_type"] = r.quotient_type.divisors();
  j["multiplier"] = r.multiplier.divisors();
  j["t"] = r.t;
  j["bounds"] = {{"green", half_json(r.bounds.green2)},
                 {"niroomand", half_json(r.bounds.niroomand2)},
                 {"rai", half_json(r.bounds.rai2)}};
  j["attains"] = {{"niroomand", r.attains_niroomand}, {"rai", r.attains_rai}};
  j["capable"] = r.capable;
  j["family"] = r.family ? json(tag(*r.family)) : json(nullptr);
  j["checks"] = json::array();
  for (const auto& c : r.checks) j["checks"].push_back({{"name", c.name}, {"pass", c.pass}});
  return j;
}

namespace {

// Runs f(i) for i < n on `jobs` threads; each call fills its own slot.
void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& f) {
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto work = [&] {
    for (std::size_t i; (i = next++) < n;) {
      try {
        f(i);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int j = 1; j < std::max(1, jobs); ++j) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

using Rows = std::vector<CheckRow>;

// Per-group rows computed in parallel and concatenated in universe order.
Rows per_group(const std::vector<CatalogEntry>& universe, int jobs,
               const std::function<Rows(const CatalogEntry&)>& f) {
  std::vector<Rows> parts(universe.size());
  parallel_for(universe.size(), jobs, [&](std::size_t i) { parts[i] = f(universe[i]); });
  Rows out;
  for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

std::string pow_string(int p, int e) { return std::to_string(p) + "^" + std::to_string(e); }

FamilySpec fs(Family f, int p, int m = 0, int n = 0) {
  FamilySpec s;
  s.family = f;
  s.p = p;
  s.m = m;
  s.n = n;
  return s;
}

void abelian_types(int len, int maxe, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  out.push_back(cur);
  if (static_cast<int>(cur.size()) == len) return;
  for (int e = 1; e <= (cur.empty() ? maxe : cur.back()); ++e) {
    cur.push_back(e);
    abelian_types(len, maxe, cur, out);
    cur.pop_back();
  }
}

Rows homology_suite(int p, const SuiteOptions& opt) {
  const std::string S = "homology";
  Rows out;
  std::vector<int> cur;
  std::vector<std::vector<int>> types;
  abelian_types(4, 3, cur, types);
  std::vector<CatalogEntry> abelian;
  for (const auto& e : types) {
    FamilySpec s = fs(Family::ABELIAN, p);
    s.exponents = e;
    abelian.push_back({"Z" + AbelianType(p, e).to_string(), make(s)});
  }
  auto rows = per_group(abelian, opt.jobs, [&](const CatalogEntry& e) {
    const AbelianType A = structure_stats(e.group).quotient_type;
    const AbelianType tails = schur_multiplier(e.group), formula = abelian_multiplier(A);
    return Rows{{S, e.name, "abelian_oracle", tails == formula,
                 "tails=" + tails.to_string() + " formula=" + formula.to_string()}};
  });
  out.insert(out.end(), rows.begin(), rows.end());

  for (int m : {2, 3}) {
    const auto s = fs(Family::G2, p, m);
    const AbelianType M = schur_multiplier(make(s));
    out.push_back({S, tag(s), "g2_multiplier", M == AbelianType(p, {m - 1, 1, 1}), "M=" + M.to_string()});
  }

  rows = per_group(sweep_universe(p, opt.max_exponent, opt.deep), opt.jobs, [&](const CatalogEntry& e) {
    Rows r;
    const PcPresentation& P = e.group;
    const Series s = series(P);
    if (s.derived.is_trivial()) return r;
    const StemCover C = stem_cover(P);
    bool ext = true;
    std::string detail;
    try {
      detail = "|G^G|=" + pow_string(p, exterior_square_log(P, C));
    } catch (const ComputationError& ex) {
      ext = false;
      detail = ex.what();
    }
    r.push_back({S, e.name, "exterior_square", ext, detail});
    if (s.nilpotency_class == 2) {
      const BeSequence be = be_sequence(P, C);
      r.push_back({S, e.name, "thm_lkk_order_identity", be.order_identity,
                   "|T|=" + pow_string(p, be.tensor_log) + " |ker g|=" + pow_string(p, be.kernel_log) +
                       " |M|=" + pow_string(p, be.multiplier_log)});
      r.push_back({S, e.name, "thm_lkk_kernel_generators", be.generators_in_kernel,
                   "generated=" + pow_string(p, be.generated_log) + " ker=" + pow_string(p, be.kernel_log)});
    }
    if (s.nilpotency_class <= 3) {
      const Thm25Check t = thm25_check(P);
      r.push_back({S, e.name, "thm25", t.holds,
                   "lhs=" + pow_string(p, t.lhs_log) + " middle=" + pow_string(p, t.middle_log) +
                       " rhs=" + pow_string(p, t.rhs_log) + " margin=" + std::to_string(t.margin())});
    }
    return r;
  });
  out.insert(out.end(), rows.begin(), rows.end());
  return out;
}

Rows capability_suite(int p, const SuiteOptions& opt) {
  const std::string S = "capability";
  Rows out = per_group(sweep_universe(p, opt.max_exponent, opt.deep), opt.jobs, [&](const CatalogEntry& e) {
    const EpicenterCrosscheck x = epicenter_crosscheck(e.group);
    return Rows{{S, e.name, "epicenter_cover_independent", x.agree,
                 "|Z*|=" + pow_string(p, x.canonical.log_order()) +
                     (x.covers_differ ? " covers differ" : " covers equal")}};
  });
  for (int m : {2, 3}) {
    if (p == 2 && m < 3) continue;
    const auto s = fs(Family::MIN_NONAB_A, p, m, m - 1);
    const PcPresentation P = make(s);
    for (const auto& c : min_nonabelian_identities(P)) out.push_back({S, tag(s), "prop_min: " + c.name, c.pass, ""});
    out.back().detail = "Z*(G)=G' of order " + pow_string(p, derived_subgroup(P).log_order());
  }
  return out;
}

Rows paper_suite(int p, const SuiteOptions& opt) {
  const std::string S = "paper";
  return per_group(sweep_universe(p, opt.max_exponent, opt.deep), opt.jobs, [&](const CatalogEntry& e) {
    Rows r;
    const GroupReport g = report(e.group, e.name);
    for (const auto& c : g.checks) r.push_back({S, e.name, c.name, c.pass, ""});
    if (g.attains_rai && g.k >= 2)
      for (const auto& q : check_quotient_attainment(e.group))
        r.push_back({S, e.name, "quotient_attainment", q.pass,
                     q.label + " M=" + pow_string(p, q.actual) + " bound=" + pow_string(p, q.expected)});
    return r;
  });
}

Rows sweep_suite(int p, const SuiteOptions& opt) {
  const std::string S = "sweep";
  const SweepReport s = sweep_classification(p, opt.max_exponent, opt.deep, opt.jobs);
  Rows out;
  for (const auto& e : s.entries) {
    const auto& r = e.report;
    out.push_back({S, e.name, "attainment_matches_family", r.attains_rai == r.family.has_value(),
                   std::string("attains=") + (r.attains_rai ? "true" : "false") +
                       " family=" + (r.family ? tag(*r.family) : "none")});
  }
  std::string list;
  for (const auto& a : s.attainers) list += (list.empty() ? "" : " ") + a;
  out.push_back({S, "p=" + std::to_string(p), "rai_attainers", s.mismatches.empty(), "{" + list + "}"});
  out.push_back({S, "p=" + std::to_string(p), "niroomand_class2_attainers", s.niroomand_mismatches.empty(),
                 std::to_string(s.niroomand_mismatches.size()) + " mismatches"});
  return out;
}

}  // namespace

std::vector<CheckRow> run_suite(const std::string& suite, const SuiteOptions& opt) {
  const bool all = suite == "all";
  if (!all && suite != "paper" && suite != "sweep" && suite != "homology" && suite != "capability")
    throw InputError("unknown suite '" + suite + "' (all, paper, sweep, homology, capability)");
  Rows out;
  for (int p : opt.primes) {
    if (p != 2 && p != 3 && p != 5) throw InputError("suites support p in {2, 3, 5}");
    auto add = [&](Rows r) { out.insert(out.end(), r.begin(), r.end()); };
    if (all || suite == "homology") add(homology_suite(p, opt));
    if (all || suite == "capability") add(capability_suite(p, opt));
    if (all || suite == "paper") add(paper_suite(p, opt));
    if (all || suite == "sweep") add(sweep_suite(p, opt));
  }
  return out;
}

}  // namespace pgh
