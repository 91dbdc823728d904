#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "pgh/errors.hpp"
#include "support.hpp"

using namespace pgh;
using testing::fam;
using testing::gen;

namespace {

Element E(std::vector<int> e) { return Element(std::move(e)); }

bool central_by_enumeration(const PcPresentation& P, const oracle::Enumerated& en, const Element& x) {
  for (int i = 0; i < P.ngens(); ++i) {
    const Element g = P.generator(i);
    if (en.product_point(x, g) != en.product_point(g, x)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("collect: empty word, refined cyclic, and E1") {
  const auto z9 = testing::homocyclic(3, 2, 1);
  CHECK(z9.collect({}) == E({0, 0}));
  const Letter g1{0, 1};
  const std::vector<Letter> w{g1, g1, g1, g1};
  CHECK(z9.collect(w) == E({1, 1}));

  const auto e1 = fam(Family::E1, 3);
  const int a = *e1.find_label("a"), b = *e1.find_label("b"), c = *e1.find_label("c");
  const std::vector<Letter> ba{{b, 1}, {a, 1}};
  Element got = e1.collect(ba);
  CHECK(got[a] == 1);
  CHECK(got[b] == 1);
  CHECK(got[c] == 2);
  const oracle::Enumerated en(e1);
  CHECK(en.point(got) == en.table.trace({2 * b, 2 * a}));
}

TEST_CASE("collect rejects out-of-range generators") {
  const auto e1 = fam(Family::E1, 3);
  const std::vector<Letter> w{{7, 1}};
  CHECK_THROWS_AS(e1.collect(w), InputError);
}

TEST_CASE("consistency: families pass, ill-weighted rules are rejected") {
  CHECK(is_consistent(fam(Family::G6, 3)));
  CHECK(is_consistent(fam(Family::G4, 5, 2)));
  PcPresentation::Builder b(3, 3);
  CHECK_THROWS_WITH_AS(b.comm(1, 0, detail::SparseWord{{0, 1}}),
                       doctest::Contains("weighting invariant"), InputError);
  // [g2,g1] = g3 together with g1^3 = g2 is inconsistent.
  PcPresentation::Builder bad(3, 3);
  bad.power(0, detail::SparseWord{{1, 1}});
  bad.comm(1, 0, detail::SparseWord{{2, 1}});
  CHECK_FALSE(is_consistent(bad.build_unchecked()));
  CHECK_THROWS_AS(bad.build(), InputError);
}

TEST_CASE("element arithmetic") {
  const auto A = fam(Family::MIN_NONAB_A, 3, 2, 1);
  const Element a = gen(A, "a"), b = gen(A, "b");
  CHECK(A.commutator(a, a).is_identity());
  CHECK(A.commutator(a, b) == A.power(a, 3));
  CHECK(A.power(a, 3) == A.generator(2));

  const auto G5 = fam(Family::G5, 3);
  CHECK(G5.commutator(gen(G5, "x1"), gen(G5, "x2")) == gen(G5, "y3"));
  CHECK(G5.commutator(gen(G5, "x2"), gen(G5, "x3")) == gen(G5, "y1"));
  CHECK(G5.commutator(gen(G5, "x3"), gen(G5, "x1")) == gen(G5, "y2"));

  std::mt19937 rng(7);
  const auto G4 = fam(Family::G4, 3, 2);
  auto random_element = [&] {
    Element x = G4.identity();
    for (int& e : x.exponents) e = static_cast<int>(rng() % 3);
    return x;
  };
  for (int t = 0; t < 200; ++t) {
    const Element x = random_element(), y = random_element(), z = random_element();
    CHECK(G4.multiply(G4.multiply(x, y), z) == G4.multiply(x, G4.multiply(y, z)));
    CHECK(G4.multiply(x, G4.inverse(x)).is_identity());
    CHECK(G4.commutator(x, y) ==
          G4.multiply(G4.multiply(G4.inverse(x), G4.inverse(y)), G4.multiply(x, y)));
    CHECK(G4.power(x, -2) == G4.inverse(G4.multiply(x, x)));
  }
}

TEST_CASE("subgroup closure") {
  const auto e1 = fam(Family::E1, 3);
  CHECK(closure(e1, {}).log_order() == 0);
  CHECK(closure(e1, {gen(e1, "c")}).order(3) == 3);
  CHECK(closure(e1, {gen(e1, "a"), gen(e1, "b")}).log_order() == 3);
  const auto G5 = fam(Family::G5, 3);
  std::vector<Element> comms;
  for (int j = 0; j < 6; ++j)
    for (int i = 0; i < j; ++i) comms.push_back(G5.commutator(G5.generator(i), G5.generator(j)));
  CHECK(closure(G5, comms, true).order(3) == 27);
}

TEST_CASE("centre") {
  CHECK(center(testing::abelian(3, {2, 1})).log_order() == 3);

  const auto G2 = fam(Family::G2, 3, 2);
  const Subgroup Z2 = center(G2);
  CHECK(Z2.order(3) == 27);
  const Element a = gen(G2, "a"), b = gen(G2, "b"), c = gen(G2, "c");
  CHECK(Z2 == closure(G2, {G2.power(a, 3), G2.power(b, 3), c}));

  const auto G4 = fam(Family::G4, 3, 2);
  CHECK(center(G4).order(3) == 9);
  CHECK(center(G4) == series(G4).derived);
}

TEST_CASE("series") {
  const auto A = testing::abelian(5, {1, 1});
  const Series sa = series(A);
  CHECK(sa.derived.is_trivial());
  CHECK(sa.nilpotency_class == 1);

  const auto G6 = fam(Family::G6, 3);
  const Series s6 = series(G6);
  CHECK(s6.nilpotency_class == 3);
  CHECK(s6.gamma(3) == closure(G6, {gen(G6, "z")}));
  CHECK(s6.derived.order(3) == 81);

  const auto e1 = fam(Family::E1, 3);
  const Series s1 = series(e1);
  CHECK(s1.nilpotency_class == 2);
  CHECK(s1.derived == closure(e1, {gen(e1, "c")}));
}

TEST_CASE("quotients") {
  const auto G5 = fam(Family::G5, 3);
  const Quotient q0(G5, Subgroup::trivial());
  CHECK(q0.group().ngens() == 6);
  CHECK(testing::fingerprint(q0.group()) == testing::fingerprint(G5));

  const auto G4 = fam(Family::G4, 3, 2);
  const Element c = gen(G4, "c");
  const Quotient q(G4, closure(G4, {G4.power(c, 3)}));
  CHECK(q.group().order() == 243);
  CHECK(structure_stats(q.group()).k == 1);
  CHECK(is_consistent(q.group()));

  const auto G6 = fam(Family::G6, 3);
  const Quotient q6(G6, series(G6).gamma(3));
  CHECK(is_consistent(q6.group()));
  CHECK(testing::fingerprint(q6.group()) == testing::fingerprint(G5));

  const auto e1 = fam(Family::E1, 3);
  CHECK_THROWS_AS(Quotient(e1, closure(e1, {gen(e1, "a")})), InputError);
}

TEST_CASE("abelian invariants and structure statistics") {
  const auto G2 = fam(Family::G2, 3, 2);
  CHECK(abelian_invariants(G2, Subgroup::whole(G2), series(G2).derived) == AbelianType(3, {2, 2}));
  const auto G5 = fam(Family::G5, 3);
  CHECK(abelian_invariants(G5, Subgroup::whole(G5), series(G5).derived) == AbelianType(3, {1, 1, 1}));
  CHECK(abelian_invariants(G5, Subgroup::trivial(), Subgroup::trivial()).is_trivial());
  CHECK_THROWS_AS(abelian_invariants(G5, Subgroup::whole(G5), Subgroup::trivial()), InputError);

  const auto s1 = structure_stats(fam(Family::E1, 3));
  CHECK(s1.n == 3);
  CHECK(s1.k == 1);
  CHECK(s1.d == 2);
  const auto s5 = structure_stats(G5);
  CHECK(s5.n == 6);
  CHECK(s5.k == 3);
  CHECK(s5.d == 3);
  CHECK(s5.homocyclic);
  const auto sa = structure_stats(fam(Family::MIN_NONAB_A, 3, 2, 2));
  CHECK(sa.quotient_type == AbelianType(3, {2, 1}));
  CHECK_FALSE(sa.homocyclic);
  CHECK(sa.quotient_exponent_log == 2);
}

TEST_CASE("abelian section coordinates are additive") {
  const auto G4 = fam(Family::G4, 3, 2);
  const AbelianSection S(G4, Subgroup::whole(G4), series(G4).derived);
  CHECK(S.moduli() == std::vector<long long>{9, 9});
  std::mt19937 rng(3);
  for (int t = 0; t < 100; ++t) {
    Element x = G4.identity(), y = G4.identity();
    for (int& e : x.exponents) e = static_cast<int>(rng() % 3);
    for (int& e : y.exponents) e = static_cast<int>(rng() % 3);
    const auto cx = S.coordinates(x), cy = S.coordinates(y), cxy = S.coordinates(G4.multiply(x, y));
    for (std::size_t i = 0; i < cx.size(); ++i) CHECK((cx[i] + cy[i]) % 9 == cxy[i]);
  }
}

TEST_CASE("direct products") {
  const auto e1 = fam(Family::E1, 3);
  const auto t = direct_product(e1, PcPresentation(3));
  CHECK(testing::fingerprint(t) == testing::fingerprint(e1));
  const auto s = structure_stats(direct_product(e1, testing::abelian(3, {1})));
  CHECK(s.n == 4);
  CHECK(s.k == 1);
  CHECK(s.d == 3);
  const auto z = direct_product(testing::abelian(3, {1}), testing::abelian(3, {1}));
  CHECK(structure_stats(z).quotient_type == AbelianType(3, {1, 1}));
  CHECK_THROWS_AS(direct_product(e1, testing::abelian(2, {1})), InputError);
}

TEST_CASE("trivial group is total") {
  const PcPresentation T(5);
  CHECK(T.order() == 1);
  CHECK(is_consistent(T));
  CHECK(center(T).is_trivial());
  CHECK(series(T).nilpotency_class == 0);
  CHECK(structure_stats(T).n == 0);
}

TEST_CASE("collection agrees with coset enumeration") {
  std::mt19937 rng(11);
  for (const auto& [name, P] : testing::oracle_universe()) {
    CAPTURE(name);
    const oracle::Enumerated en(P);
    REQUIRE(static_cast<std::uint64_t>(en.order()) == P.order());
    const auto elems = oracle::all_elements(P);
    std::vector<bool> hit(en.order(), false);
    for (const auto& x : elems) hit[en.point(x)] = true;
    CHECK(std::all_of(hit.begin(), hit.end(), [](bool h) { return h; }));

    const std::size_t pairs = elems.size() <= 81 ? elems.size() * elems.size() : 4000;
    for (std::size_t t = 0; t < pairs; ++t) {
      const auto& x = elems.size() <= 81 ? elems[t / elems.size()] : elems[rng() % elems.size()];
      const auto& y = elems.size() <= 81 ? elems[t % elems.size()] : elems[rng() % elems.size()];
      const Element xy = P.multiply(x, y);
      if (en.point(xy) != en.product_point(x, y)) {
        FAIL("product mismatch");
        break;
      }
      CHECK(P.multiply(xy, Element::identity(P.ngens())) == xy);  // idempotent normal form
    }
  }
}

TEST_CASE("centre agrees with enumeration; basic series laws") {
  for (const auto& [name, P] : testing::oracle_universe()) {
    CAPTURE(name);
    const oracle::Enumerated en(P);
    const Subgroup Z = center(P);
    int central = 0;
    for (const auto& x : oracle::all_elements(P)) {
      const bool c = central_by_enumeration(P, en, x);
      central += c;
      CHECK(c == Z.contains(P, x));
    }
    CHECK(static_cast<std::uint64_t>(central) == Z.order(P.prime()));
    CHECK(Quotient(P, Z).group().order() * Z.order(P.prime()) == P.order());

    const Series s = series(P);
    CHECK(s.gamma(2) == s.derived);
    for (int i = 1; i <= s.nilpotency_class; ++i)
      for (const auto& b : s.gamma(i).basis())
        for (int g = 0; g < P.ngens(); ++g)
          CHECK(s.gamma(i + 1).contains(P, P.commutator(b, P.generator(g))));
  }
}

TEST_CASE("closure agrees with breadth-first generation") {
  std::mt19937 rng(5);
  for (const auto& [name, P] : testing::oracle_universe()) {
    CAPTURE(name);
    const auto elems = oracle::all_elements(P);
    for (int t = 0; t < 5; ++t) {
      std::vector<Element> gens{elems[rng() % elems.size()], elems[rng() % elems.size()]};
      std::set<Element> seen{P.identity()};
      std::vector<Element> frontier{P.identity()};
      while (!frontier.empty()) {
        std::vector<Element> next;
        for (const auto& x : frontier)
          for (const auto& g : gens) {
            Element y = P.multiply(x, g);
            if (seen.insert(y).second) next.push_back(y);
          }
        frontier = std::move(next);
      }
      const Subgroup S = closure(P, gens);
      CHECK(S.order(P.prime()) == seen.size());
      for (const auto& x : seen) CHECK(S.contains(P, x));
    }
  }
}

TEST_CASE("class-2 catalog groups: exponent and rank laws") {
  for (const auto& [name, P] : testing::oracle_universe()) {
    const Series s = series(P);
    if (s.nilpotency_class != 2) continue;
    CAPTURE(name);
    const Subgroup Z = center(P);
    const AbelianType GZ = abelian_invariants(P, Subgroup::whole(P), Z);
    const AbelianType D = abelian_invariants(P, s.derived, Subgroup::trivial());
    CHECK(GZ.exponent_log() == D.exponent_log());
    CHECK(D.rank() <= GZ.rank() * (GZ.rank() - 1) / 2);
  }
}
