#pragma once

// Bound formulas, per-group reports with attainment and family matching,
// the lemma-level checks, quotient attainment and the classification sweep.

#include <optional>
#include <string>
#include <vector>

#include "pgh/capability.hpp"
#include "pgh/catalog.hpp"
#include "pgh/homology.hpp"

namespace pgh {

/// Exponents of the three bounds. Rai's exponent (d-1)(n+k-2)/2 + 1 is
/// half-integral for some parameters, so all three are kept doubled.
struct Bounds {
  int green2 = 0;
  int niroomand2 = 0;
  int rai2 = 0;

  static bool attained(int log_order, int twice) { return twice % 2 == 0 && 2 * log_order == twice; }
};

/// Throws InputError unless n >= 1, 0 <= k < n and 1 <= d <= n - k.
Bounds bounds(int n, int k, int d);
/// "2", "2.5".
std::string half_string(int twice);

struct GroupReport {
  std::string name;
  int p = 0;
  int n = 0, k = 0, d = 0;
  int nilpotency_class = 0;
  AbelianType quotient_type;
  AbelianType multiplier;
  Bounds bounds;
  int t = 0;  // Green corank n(n-1)/2 - log |M(G)|
  bool attains_rai = false;
  bool attains_niroomand = false;  // both false for abelian G
  bool capable = false;
  std::optional<FamilySpec> family;
  std::vector<NamedCheck> checks;

  bool all_pass() const;
};

/// Fingerprint match against the instances of G1..G6 of the same order.
std::optional<FamilySpec> match_family(const PcPresentation& P);

/// Attainer conditions and class-2 lemmas that apply to P. Results, not errors.
std::vector<NamedCheck> check_attainer_conditions(const PcPresentation& P, const GroupReport& r);

/// Throws InputError for the trivial group.
GroupReport report(const PcPresentation& P, const std::string& name = "");

struct QuotientCheck {
  std::string label;   // "K=<...>" or "G/gamma_i"
  int expected = 0;    // log of the reduced bound
  int actual = 0;      // log |M(G/K)|
  bool pass = false;
};

/// For attainers with k >= 2: every order-p subgroup K of Z(G) n G' and
/// every gamma_i (3 <= i <= class) gives a quotient attaining its bound.
/// Throws InputError if P does not attain or k < 2.
std::vector<QuotientCheck> check_quotient_attainment(const PcPresentation& P);

/// Subgroups of order p of an abelian subgroup A, in canonical order.
std::vector<Subgroup> order_p_subgroups(const PcPresentation& P, const Subgroup& A);

struct SweepEntry {
  std::string name;
  GroupReport report;
};

struct SweepReport {
  int p = 0;
  std::vector<SweepEntry> entries;
  std::vector<std::string> attainers;     // Rai bound, in entry order
  std::vector<std::string> mismatches;    // attainment disagrees with family match
  std::vector<std::string> niroomand_mismatches;
  bool pass() const { return mismatches.empty() && niroomand_mismatches.empty(); }
};

/// Tables of order p^3..p^max_exponent (max_exponent <= 4) plus the feasible
/// named family instances at p; G6 only with deep.
std::vector<CatalogEntry> sweep_universe(int p, int max_exponent, bool deep);

/// Rai attainers must be exactly the family-matched groups; class-2 Niroomand
/// attainers must be exactly the matches of G1, G3, G5. Groups run on `jobs`
/// threads; the result does not depend on it.
SweepReport sweep_classification(int p, int max_exponent, bool deep = false, int jobs = 1);

}  // namespace pgh
