#include "pgh/verify.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <set>
#include <thread>

#include "pgh/errors.hpp"

namespace pgh {

Bounds bounds(int n, int k, int d) {
  if (n < 1 || k < 0 || k >= n || d < 1 || d > n - k)
    throw InputError("bounds need n >= 1, 0 <= k < n, 1 <= d <= n - k (got n=" + std::to_string(n) +
                     ", k=" + std::to_string(k) + ", d=" + std::to_string(d) + ")");
  Bounds b;
  b.green2 = n * (n - 1);
  b.niroomand2 = (n - k - 1) * (n + k - 2) + 2;
  b.rai2 = (d - 1) * (n + k - 2) + 2;
  return b;
}

std::string half_string(int twice) {
  const std::string whole = std::to_string(twice / 2);
  return twice % 2 == 0 ? whole : whole + ".5";
}

bool GroupReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.pass; });
}

namespace {

std::string format_element(const PcPresentation& P, const Element& x) {
  std::string out;
  for (int i = 0; i < P.ngens(); ++i) {
    if (x.exponents[i] == 0) continue;
    const auto it = P.labels().find(i);
    if (!out.empty()) out += '*';
    out += it != P.labels().end() ? it->second : "g" + std::to_string(i + 1);
    if (x.exponents[i] > 1) out += "^" + std::to_string(x.exponents[i]);
  }
  return out.empty() ? "1" : out;
}

struct Fingerprint {
  int n, k, d, cls;
  AbelianType quotient, multiplier, centre;
  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const PcPresentation& P, const AbelianType& multiplier) {
  const StructureStats st = structure_stats(P);
  return {st.n, st.k, st.d, st.nilpotency_class, st.quotient_type, multiplier,
          abelian_invariants(P, center(P), Subgroup::trivial())};
}

FamilySpec family_spec(Family f, int p, int m = 0, int n = 0) {
  FamilySpec s;
  s.family = f;
  s.p = p;
  s.m = m;
  s.n = n;
  return s;
}

// Instances of G1..G6 of order p^n that the constructors accept.
std::vector<FamilySpec> candidates(int p, int n) {
  std::vector<FamilySpec> raw;
  if (n >= 3) raw.push_back(family_spec(Family::G1, p, 0, n));
  if (n % 2 == 1 && n >= 5) raw.push_back(family_spec(Family::G2, p, (n - 1) / 2));
  if (n == 5) raw.push_back(family_spec(Family::G3, p));
  if (n % 3 == 0 && n >= 6) raw.push_back(family_spec(Family::G4, p, n / 3));
  if (n == 6) raw.push_back(family_spec(Family::G5, p));
  if (n == 7) raw.push_back(family_spec(Family::G6, p));
  std::vector<FamilySpec> out;
  for (const auto& s : raw) {
    try {
      make(s);
      out.push_back(s);
    } catch (const InputError&) {
    }
  }
  return out;
}

std::optional<FamilySpec> match_with(const PcPresentation& P, const AbelianType& multiplier) {
  const StructureStats st = structure_stats(P);
  if (st.k == 0) return std::nullopt;
  const auto cands = candidates(P.prime(), st.n);
  if (cands.empty()) return std::nullopt;
  const Fingerprint f = fingerprint(P, multiplier);
  for (const auto& s : cands) {
    const PcPresentation Q = make(s);
    if (fingerprint(Q, schur_multiplier(Q)) == f) return s;
  }
  return std::nullopt;
}

}  // namespace

std::optional<FamilySpec> match_family(const PcPresentation& P) {
  return match_with(P, schur_multiplier(P));
}

std::vector<NamedCheck> check_attainer_conditions(const PcPresentation& P, const GroupReport& r) {
  std::vector<NamedCheck> out;
  auto add = [&](const char* name, bool pass) { out.push_back({name, pass}); };
  const int m = r.multiplier.log_order();
  const bool nonabelian = r.k > 0;
  const int p = P.prime();

  add("green_corank", r.t >= 0);
  if (nonabelian) {
    add("niroomand_bound", 2 * m <= r.bounds.niroomand2);
    add("rai_bound", 2 * m <= r.bounds.rai2);
    add("bound_monotone", r.bounds.rai2 <= r.bounds.niroomand2);
    bool ext = true;
    try {
      exterior_square_log(P);
    } catch (const ComputationError&) {
      ext = false;
    }
    add("exterior_square", ext);
    add("epicenter_cover_independent", epicenter_crosscheck(P).agree);
  }
  if (r.attains_rai) {
    add("lemma_m1_homocyclic", r.quotient_type.is_homocyclic());
    if (r.k >= 2) add("lemma_m1_generators", r.d >= 2 && r.d <= 3);
    add("lemma_ff_capable", r.capable);
    if (r.d == 2 && r.k >= 2) add("prop_two", r.nilpotency_class <= 2);
    if (r.nilpotency_class >= 3)
      add("main_class3", r.d == 3 && r.quotient_type.is_elementary());
  }
  if (r.nilpotency_class == 2) {
    const Subgroup Z = center(P);
    const Subgroup D = derived_subgroup(P);
    const AbelianType gz = abelian_invariants(P, Subgroup::whole(P), Z);
    const AbelianType dt = abelian_invariants(P, D, Subgroup::trivial());
    add("lemma_kk", gz.exponent_log() == dt.exponent_log());
    add("lemma_ll", 2 * dt.rank() <= gz.rank() * (gz.rank() - 1));
    const BeSequence be = be_sequence(P);
    add("thm_lkk_order_identity", be.order_identity);
    add("thm_lkk_kernel_generators", be.generators_in_kernel);
  }
  if (nonabelian && r.nilpotency_class <= 3) add("thm25", thm25_check(P).holds);
  if (r.family && (r.family->family == Family::G2 || r.family->family == Family::G4)) {
    const Subgroup Z = center(P);
    const Subgroup D = derived_subgroup(P);
    bool ok;
    if (r.family->family == Family::G4) {
      ok = Z == D;
    } else {
      const int mm = r.family->m;
      ok = D.is_subgroup_of(P, Z) &&
           abelian_invariants(P, Z, Subgroup::trivial()) == AbelianType(p, {mm - 1, mm - 1, 1});
      const auto a = P.find_label("a"), b = P.find_label("b");
      if (ok && a && b) {
        std::vector<Element> gens{P.power(P.generator(*a), p), P.power(P.generator(*b), p)};
        gens.insert(gens.end(), D.basis().begin(), D.basis().end());
        ok = Z == closure(P, gens);
      }
    }
    add("lemma_jj", ok);
  }
  return out;
}

GroupReport report(const PcPresentation& P, const std::string& name) {
  const StructureStats st = structure_stats(P);
  if (st.n == 0) throw InputError("the trivial group has no bounds to report");
  GroupReport r;
  r.name = name;
  r.p = P.prime();
  r.n = st.n;
  r.k = st.k;
  r.d = st.d;
  r.nilpotency_class = st.nilpotency_class;
  r.quotient_type = st.quotient_type;
  const TailsSystem T = tails_system(P);
  r.multiplier = T.multiplier;
  r.bounds = bounds(st.n, st.k, st.d);
  const int m = r.multiplier.log_order();
  r.t = st.n * (st.n - 1) / 2 - m;
  if (st.k > 0) {
    r.attains_rai = Bounds::attained(m, r.bounds.rai2);
    r.attains_niroomand = Bounds::attained(m, r.bounds.niroomand2);
  }
  r.capable = is_capable(stem_cover(T, P, ComplementChoice::Canonical));
  r.family = match_with(P, r.multiplier);
  r.checks = check_attainer_conditions(P, r);
  return r;
}

std::vector<Subgroup> order_p_subgroups(const PcPresentation& P, const Subgroup& A) {
  const int p = P.prime();
  std::set<std::vector<Element>> seen;
  std::vector<Subgroup> out;
  std::vector<int> coords(A.log_order(), 0);
  for (;;) {
    int i = static_cast<int>(coords.size()) - 1;
    while (i >= 0 && ++coords[i] == p) coords[i--] = 0;
    if (i < 0) break;
    const Element x = A.element_at(P, coords);
    if (P.order_log(x) != 1) continue;
    Subgroup K = closure(P, {x});
    if (seen.insert(K.basis()).second) out.push_back(std::move(K));
  }
  return out;
}

std::vector<QuotientCheck> check_quotient_attainment(const PcPresentation& P) {
  const StructureStats st = structure_stats(P);
  const int m = schur_multiplier(P).log_order();
  if (st.k < 2 || !Bounds::attained(m, bounds(st.n, st.k, st.d).rai2))
    throw InputError("quotient attainment needs an attaining group with |G'| >= p^2");
  std::vector<QuotientCheck> out;
  auto check = [&](std::string label, const Subgroup& N, int expected2) {
    const PcPresentation Q = Quotient(P, N).group();
    const StructureStats qs = structure_stats(Q);
    QuotientCheck c;
    c.label = std::move(label);
    c.expected = expected2 / 2;
    c.actual = schur_multiplier(Q).log_order();
    c.pass = expected2 == bounds(qs.n, qs.k, qs.d).rai2 && Bounds::attained(c.actual, expected2);
    out.push_back(std::move(c));
  };
  const Series s = series(P);
  const Subgroup ZD = intersection(P, center(P), s.derived);
  for (const auto& K : order_p_subgroups(P, ZD))
    check("K=<" + format_element(P, K.basis().front()) + ">", K,
          bounds(st.n - 1, st.k - 1, st.d).rai2);
  for (int i = 3; i <= s.nilpotency_class; ++i) {
    const Subgroup& g = s.gamma(i);
    const StructureStats qs = structure_stats(Quotient(P, g).group());
    check("G/gamma_" + std::to_string(i), g, bounds(qs.n, qs.k, qs.d).rai2);
  }
  return out;
}

std::vector<CatalogEntry> sweep_universe(int p, int max_exponent, bool deep) {
  if (max_exponent < 3 || max_exponent > 4)
    throw InputError("exhaustive tables cover orders p^3 and p^4 only");
  std::vector<CatalogEntry> out;
  for (int e = 3; e <= max_exponent; ++e) {
    auto t = small_group_table(p, e);
    out.insert(out.end(), std::make_move_iterator(t.begin()), std::make_move_iterator(t.end()));
  }
  std::vector<FamilySpec> fams;
  for (int n = 3; n <= 5; ++n) fams.push_back(family_spec(Family::G1, p, 0, n));
  for (int m : {2, 3}) fams.push_back(family_spec(Family::G2, p, m));
  fams.push_back(family_spec(Family::G3, p));
  fams.push_back(family_spec(Family::G4, p, 2));
  fams.push_back(family_spec(Family::G5, p));
  if (deep) fams.push_back(family_spec(Family::G6, p));
  // Negatives: the minimal non-abelian family with homocyclic quotient, and
  // a type (b) group with non-homocyclic quotient.
  fams.push_back(family_spec(Family::MIN_NONAB_A, p, 3, 2));
  fams.push_back(family_spec(Family::MIN_NONAB_B, p, 2, 1));
  fams.push_back(family_spec(Family::MIN_NONAB_B, p, 3, 2));
  for (const auto& s : fams) {
    try {
      out.push_back({tag(s), make(s)});
    } catch (const InputError&) {
    }
  }
  return out;
}

SweepReport sweep_classification(int p, int max_exponent, bool deep, int jobs) {
  if (p != 2 && p != 3 && p != 5) throw InputError("sweeps support p in {2, 3, 5}");
  const auto universe = sweep_universe(p, max_exponent, deep);
  SweepReport out;
  out.p = p;
  out.entries.resize(universe.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto work = [&] {
    for (std::size_t i; (i = next++) < universe.size();) {
      try {
        out.entries[i] = {universe[i].name, report(universe[i].group, universe[i].name)};
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

  for (const auto& e : out.entries) {
    const auto& r = e.report;
    if (r.attains_rai) out.attainers.push_back(e.name);
    if (r.attains_rai != r.family.has_value()) out.mismatches.push_back(e.name);
    if (r.nilpotency_class == 2) {
      const bool thm16 = r.family && (r.family->family == Family::G1 || r.family->family == Family::G3 ||
                                      r.family->family == Family::G5);
      if (r.attains_niroomand != thm16) out.niroomand_mismatches.push_back(e.name);
    }
  }
  return out;
}

}  // namespace pgh
