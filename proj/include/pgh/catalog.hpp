#pragma once

// Named p-group families, the small-order tables, and the JSON presentation
// format.

#include <string>
#include <string_view>
#include <vector>

#include "pgh/pc_presentation.hpp"

namespace pgh {

enum class Family {
  HOMOCYCLIC,   // Z_{p^m}^(d)
  ABELIAN,      // direct sum of cyclic groups of orders p^e for e in exponents
  MIN_NONAB_A,  // <a,b | a^{p^m}, b^{p^n}, [a,b] = a^{p^{m-1}}>, class 2
  MIN_NONAB_B,  // <a,b | a^{p^m}, b^{p^n}, c^p, [a,b] = c central>
  Q8,
  E1,           // extraspecial of order p^3 and exponent p
  G1,           // E1 x Z_p^(n-3)
  G2,           // MIN_NONAB_B with m = n
  G3,           // <x1,x2,x3> class 2 exponent p, [x1,x2] = c1, [x1,x3] = c2
  G4,           // <a,b | a^{p^m}, b^{p^m}, c^{p^m}, [a,b] = c central>
  G5,           // free class-2 exponent-p group on three generators
  G6,           // G5 extended by z with [y_i, x_i] = z, p = 3
  SMALL,        // entry `index` (1-based) of small_group_table(p, order_exp)
};

struct FamilySpec {
  Family family = Family::E1;
  int p = 3;
  int m = 0;
  int n = 0;
  int d = 0;
  std::vector<int> exponents;  // ABELIAN only
  int order_exp = 0;           // SMALL only
  int index = 0;               // SMALL only
};

std::string family_name(Family f);
/// Throws InputError on an unknown name.
Family parse_family(std::string_view name);
/// Short tag such as "G4(p=3,m=2)"; stable, used in reports.
std::string tag(const FamilySpec& spec);

/// Throws InputError naming the violated parameter constraint.
PcPresentation make(const FamilySpec& spec);

struct CatalogEntry {
  std::string name;
  PcPresentation group;
};

/// Every group of order p^3 (5 groups) or p^4 (15 for odd p, 14 for p = 2),
/// abelian ones first. Supported p: 2, 3, 5.
std::vector<CatalogEntry> small_group_table(int p, int order_exp);

/// JSON text with 1-based generator indices and only nontrivial rules.
std::string serialize(const PcPresentation& P);
/// Accepts the output of serialize or a family shorthand
/// {"family": "G4", "p": 3, "m": 2}. Validates consistency.
PcPresentation parse(std::string_view text);
/// Family shorthand only; throws InputError for explicit presentations.
FamilySpec parse_family_spec(std::string_view text);

}  // namespace pgh
