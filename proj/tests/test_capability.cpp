#include <doctest.h>

#include <random>

#include "pgh/capability.hpp"
#include "pgh/errors.hpp"
#include "support.hpp"

using namespace pgh;
using testing::fam;
using testing::gen;

namespace {

Element random_element(const PcPresentation& P, std::mt19937& rng) {
  Element x = P.identity();
  for (auto& e : x.exponents) e = static_cast<int>(rng() % P.prime());
  return x;
}

// Z^(G) = {g : g ^ h = 1 for all h}, by enumerating Z(G) against generators.
Subgroup exterior_center_by_enumeration(const PcPresentation& P, const StemCover& C) {
  const Subgroup Z = center(P);
  std::vector<Element> members;
  std::vector<int> coords(Z.log_order(), 0);
  for (;;) {
    const Element g = Z.element_at(P, coords);
    bool all = true;
    for (int i = 0; i < P.ngens() && all; ++i)
      all = exterior_pair(C, g, P.generator(i)).is_identity();
    if (all) members.push_back(g);
    int i = static_cast<int>(coords.size()) - 1;
    while (i >= 0 && ++coords[i] == P.prime()) coords[i--] = 0;
    if (i < 0) break;
  }
  return closure(P, members);
}

}  // namespace

TEST_CASE("exterior pairing laws") {
  std::mt19937 rng(1);
  for (const auto& [name, P] : testing::oracle_universe()) {
    CAPTURE(name);
    const auto C = stem_cover(P);
    const Subgroup Ed = derived_subgroup(C.E);
    for (int t = 0; t < 10; ++t) {
      const Element a = random_element(P, rng), b = random_element(P, rng), c = random_element(P, rng);
      CHECK(exterior_pair(C, a, a).is_identity());
      const auto ab = exterior_pair(C, a, b);
      CHECK(Ed.contains(C.E, ab.rep));
      CHECK(C.project(ab.rep) == P.commutator(a, b));
      // [xy, z] = [x, z]^y [y, z] in E.
      const auto lhs = exterior_pair(C, P.multiply(a, b), c);
      const Element rhs = C.E.multiply(C.E.conjugate(exterior_pair(C, a, c).rep, C.lift(b)),
                                       exterior_pair(C, b, c).rep);
      CHECK(lhs.rep == rhs);
      // Independent of the lifts: shift both by random elements of M.
      if (!C.M.is_trivial()) {
        std::vector<int> u(C.M.log_order()), v(C.M.log_order());
        for (auto& x : u) x = static_cast<int>(rng() % P.prime());
        for (auto& x : v) x = static_cast<int>(rng() % P.prime());
        const Element la = C.E.multiply(C.lift(a), C.M.element_at(C.E, u));
        const Element lb = C.E.multiply(C.lift(b), C.M.element_at(C.E, v));
        CHECK(C.E.commutator(la, lb) == ab.rep);
      }
    }
  }
}

TEST_CASE("epicenter examples") {
  const auto e1 = stem_cover(fam(Family::E1, 3));
  CHECK(epicenter(e1).is_trivial());
  CHECK(is_capable(e1));

  const auto mina = fam(Family::MIN_NONAB_A, 3, 2, 1);
  const auto em = epicenter(stem_cover(mina));
  CHECK(em == derived_subgroup(mina));
  CHECK(em.log_order() == 1);

  const auto q8 = make(testing::spec(Family::Q8, 2));
  CHECK(epicenter(stem_cover(q8)) == center(q8));
  CHECK(center(q8).log_order() == 1);

  CHECK(is_capable(fam(Family::G4, 3, 2)));
  CHECK(is_capable(testing::abelian(3, {1, 1})));
  for (int m : {2, 3}) CHECK_FALSE(is_capable(fam(Family::MIN_NONAB_A, 3, m, m - 1)));
}

TEST_CASE("abelian capability matches Baer's criterion") {
  // A finite abelian group is capable iff its two largest invariants agree.
  for (int p : {2, 3})
    for (const std::vector<int>& e :
         std::vector<std::vector<int>>{{}, {1}, {2}, {1, 1}, {2, 1}, {2, 2}, {3, 1, 1}, {2, 2, 1}, {3, 2, 1}}) {
      CAPTURE(p);
      CAPTURE(AbelianType(p, e).to_string());
      const bool baer = e.empty() || (e.size() >= 2 && e[0] == e[1]);
      CHECK(is_capable(testing::abelian(p, e)) == baer);
    }
}

TEST_CASE("epicenter equals the exterior centre and lies in Z(G)") {
  for (const auto& [name, P] : testing::oracle_universe()) {
    CAPTURE(name);
    const auto C = stem_cover(P);
    const auto Zs = epicenter(C);
    CHECK(Zs.is_subgroup_of(P, center(P)));
    CHECK(Zs == exterior_center_by_enumeration(P, C));
    // G / Z*(G) is capable.
    if (!Zs.is_trivial()) CHECK(is_capable(Quotient(P, Zs).group()));
  }
}

TEST_CASE("epicenter does not depend on the complement") {
  for (const auto& P : {fam(Family::E1, 3), fam(Family::G2, 3, 2), make(testing::spec(Family::Q8, 2)),
                        fam(Family::MIN_NONAB_A, 3, 2, 1), fam(Family::G4, 3, 2), fam(Family::G5, 3)}) {
    const auto r = epicenter_crosscheck(P);
    CHECK(r.agree);
    if (!schur_multiplier(P).is_trivial()) CHECK(r.covers_differ);
  }
}

TEST_CASE("minimal non-abelian identities") {
  for (int m : {2, 3}) {
    CAPTURE(m);
    for (const auto& c : min_nonabelian_identities(fam(Family::MIN_NONAB_A, 3, m, m - 1))) {
      CAPTURE(c.name);
      CHECK(c.pass);
    }
  }
  for (const auto& c : min_nonabelian_identities(fam(Family::MIN_NONAB_A, 5, 2, 1))) CHECK(c.pass);
  for (const auto& c : min_nonabelian_identities(fam(Family::MIN_NONAB_A, 2, 3, 2))) CHECK(c.pass);
  CHECK_THROWS_AS(min_nonabelian_identities(fam(Family::MIN_NONAB_A, 2, 2, 1)), InputError);
  CHECK_THROWS_AS(min_nonabelian_identities(fam(Family::MIN_NONAB_A, 3, 2, 2)), InputError);
  CHECK_THROWS_AS(min_nonabelian_identities(fam(Family::E1, 3)), InputError);
}
