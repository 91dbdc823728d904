#include "pgh/capability.hpp"

#include "pgh/errors.hpp"

namespace pgh {

ExteriorElement exterior_pair(const StemCover& C, const Element& a, const Element& b) {
  return {C.E.commutator(C.lift(a), C.lift(b))};
}

ExteriorElement exterior_power(const StemCover& C, const ExteriorElement& x, long long e) {
  return {C.E.power(x.rep, e)};
}

Subgroup epicenter(const StemCover& C) {
  std::vector<Element> gens;
  const Subgroup Z = center(C.E);
  for (const auto& z : Z.basis()) gens.push_back(C.project(z));
  return closure(C.base, gens);
}

bool is_capable(const StemCover& C) { return epicenter(C).is_trivial(); }

bool is_capable(const PcPresentation& P) { return is_capable(stem_cover(P)); }

EpicenterCrosscheck epicenter_crosscheck(const PcPresentation& P) {
  const TailsSystem T = tails_system(P);
  const StemCover a = stem_cover(T, P, ComplementChoice::Canonical);
  const StemCover b = stem_cover(T, P, ComplementChoice::Alternate);
  EpicenterCrosscheck r;
  r.canonical = epicenter(a);
  r.alternate = epicenter(b);
  r.covers_differ = !(a.E == b.E);
  r.agree = r.canonical == r.alternate;
  return r;
}

std::vector<NamedCheck> min_nonabelian_identities(const PcPresentation& P) {
  const auto la = P.find_label("a"), lb = P.find_label("b");
  if (!la || !lb) throw InputError("generators 'a' and 'b' are required");
  const int p = P.prime();
  const Element a = P.generator(*la), b = P.generator(*lb);
  const int m = P.order_log(a), n = P.order_log(b);
  if (m < 2 || (p == 2 && m < 3)) throw InputError("requires m >= 2 for odd p and m >= 3 for p = 2");
  const long long q = static_cast<long long>(ipow(p, m - 1));
  if (P.commutator(a, b) != P.power(a, q)) throw InputError("requires [a,b] = a^{p^{m-1}}");
  if (n != m - 1) throw InputError("requires G/G' homocyclic (n = m - 1)");

  const StemCover C = stem_cover(P);
  std::vector<NamedCheck> out;
  out.push_back({"a^{p^(m-1)} ^ b = 1", exterior_pair(C, P.power(a, q), b).is_identity()});
  out.push_back({"b^{p^(m-1)} ^ a = 1", exterior_pair(C, P.power(b, q), a).is_identity()});
  out.push_back({"a ^ [a,b] = 1", exterior_pair(C, a, P.commutator(a, b)).is_identity()});
  const ExteriorElement ba = exterior_pair(C, b, a);
  out.push_back({"(b ^ a)^{p^(m-1)} = 1", exterior_power(C, ba, q).is_identity()});
  out.push_back({"b ^ a != 1", !ba.is_identity()});
  out.push_back({"Z*(G) = G'", epicenter(C) == derived_subgroup(P)});
  out.push_back({"non-capable", !is_capable(C)});
  return out;
}

}  // namespace pgh
