#pragma once

// Exterior pairing, epicenter and capability, all read off a stem cover.

#include <string>
#include <vector>

#include "pgh/homology.hpp"

namespace pgh {

/// g ^ h in G ^ G, represented by [g^, h^] in E' for the canonical lifts.
struct ExteriorElement {
  Element rep;
  bool is_identity() const { return rep.is_identity(); }
  friend bool operator==(const ExteriorElement&, const ExteriorElement&) = default;
};

ExteriorElement exterior_pair(const StemCover& C, const Element& a, const Element& b);
ExteriorElement exterior_power(const StemCover& C, const ExteriorElement& x, long long e);

/// Z*(G) = proj(Z(E)); a subgroup of Z(G).
Subgroup epicenter(const StemCover& C);
bool is_capable(const StemCover& C);
bool is_capable(const PcPresentation& P);

struct EpicenterCrosscheck {
  Subgroup canonical;
  Subgroup alternate;
  bool covers_differ = false;  // the two presentations of E are not identical
  bool agree = false;
};

/// Epicenters from the canonical and the alternate stem cover.
EpicenterCrosscheck epicenter_crosscheck(const PcPresentation& P);

struct NamedCheck {
  std::string name;
  bool pass = false;
};

/// Identities for <a, b | a^{p^m}, b^{p^n}, [a,b] = a^{p^{m-1}}> with n = m - 1:
/// a^{p^{m-1}} ^ b = b^{p^{m-1}} ^ a = a ^ [a,b] = (b ^ a)^{p^{m-1}} = 1,
/// b ^ a != 1, and Z*(G) = G'. Needs generators labelled "a" and "b".
/// Throws InputError outside p > 2, or p = 2 with m >= 3.
std::vector<NamedCheck> min_nonabelian_identities(const PcPresentation& P);

}  // namespace pgh
