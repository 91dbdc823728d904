#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "pgh/errors.hpp"
#include "support.hpp"

using namespace pgh;
using testing::fam;
using testing::gen;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("family constructors") {
  const auto q8 = make(testing::spec(Family::Q8, 2));
  CHECK(q8.order() == 8);
  CHECK(structure_stats(q8).k == 1);
  CHECK(center(q8).order(2) == 2);

  const auto g2 = fam(Family::G2, 3, 2);
  CHECK(g2.order() == 243);
  CHECK(structure_stats(g2).quotient_type == AbelianType(3, {2, 2}));

  const auto g6 = fam(Family::G6, 3);
  CHECK(g6.order() == 2187);
  CHECK(series(g6).nilpotency_class == 3);
  CHECK(series(g6).derived.order(3) == 81);

  const auto g3 = fam(Family::G3, 3);
  const auto s3 = structure_stats(g3);
  CHECK(s3.n == 5);
  CHECK(s3.k == 2);
  CHECK(s3.d == 3);
  CHECK(s3.nilpotency_class == 2);
  for (const auto& x : oracle::all_elements(g3)) CHECK(g3.order_log(x) <= 1);

  const auto g4 = fam(Family::G4, 5, 3);
  CHECK(g4.order() == ipow(5, 9));
  CHECK(structure_stats(g4).k == 3);
}

TEST_CASE("family parameter constraints") {
  CHECK_THROWS_WITH_AS(fam(Family::G6, 5), "G6 requires p = 3", InputError);
  CHECK_THROWS_AS(fam(Family::G2, 3, 1), InputError);
  CHECK_THROWS_AS(fam(Family::G4, 2, 2), InputError);
  CHECK_THROWS_AS(fam(Family::G3, 2), InputError);
  CHECK_THROWS_AS(fam(Family::G5, 2), InputError);
  CHECK_THROWS_AS(fam(Family::Q8, 3), InputError);
  CHECK_THROWS_AS(fam(Family::MIN_NONAB_A, 3, 1, 1), InputError);
  CHECK_THROWS_AS(fam(Family::MIN_NONAB_B, 2, 1, 1), InputError);
  CHECK_THROWS_AS(fam(Family::G1, 3, 0, 2), InputError);
  CHECK_THROWS_AS(fam(Family::E1, 4), InputError);
  CHECK_NOTHROW(fam(Family::MIN_NONAB_B, 2, 2, 1));
  CHECK_NOTHROW(fam(Family::MIN_NONAB_A, 2, 3, 1));
}

TEST_CASE("minimal non-abelian families have |G'| = p and the stated centre") {
  for (int p : {2, 3, 5})
    for (int m = 1; m <= 3; ++m)
      for (int n = 1; n <= 3; ++n) {
        CAPTURE(p);
        CAPTURE(m);
        CAPTURE(n);
        if (m >= 2) {
          const auto A = fam(Family::MIN_NONAB_A, p, m, n);
          CHECK(series(A).derived.log_order() == 1);
          const auto a = gen(A, "a"), b = gen(A, "b");
          CHECK(center(A) == closure(A, {A.power(a, p), A.power(b, p)}));
        }
        if (p == 2 && m + n <= 2) continue;
        const auto B = fam(Family::MIN_NONAB_B, p, m, n);
        CHECK(series(B).derived.log_order() == 1);
        const auto a = gen(B, "a"), b = gen(B, "b"), c = gen(B, "c");
        CHECK(center(B) == closure(B, {B.power(a, p), B.power(b, p), c}));
        CHECK(B.commutator(a, b) == c);
      }
}

TEST_CASE("named attaining families satisfy the homocyclic and generator-rank conditions") {
  std::vector<PcPresentation> gs{fam(Family::G1, 3, 0, 3), fam(Family::G1, 5, 0, 5),
                                 fam(Family::G2, 3, 2),    fam(Family::G2, 2, 3),
                                 fam(Family::G3, 5),       fam(Family::G4, 3, 2),
                                 fam(Family::G5, 5),       fam(Family::G6, 3)};
  for (const auto& P : gs) {
    const auto st = structure_stats(P);
    CHECK(st.homocyclic);
    if (st.k >= 2) {
      CHECK(st.d >= 2);
      CHECK(st.d <= 3);
    }
  }
}

TEST_CASE("small group tables: counts and distinct fingerprints") {
  for (int p : {2, 3, 5}) {
    CAPTURE(p);
    const auto t3 = small_group_table(p, 3);
    CHECK(t3.size() == 5);
    const auto t4 = small_group_table(p, 4);
    CHECK(t4.size() == (p == 2 ? 14u : 15u));
    for (const auto* t : {&t3, &t4}) {
      std::vector<testing::Fingerprint> fps;
      int nonabelian = 0;
      for (const auto& e : *t) {
        CAPTURE(e.name);
        CHECK(is_consistent(e.group));
        CHECK(e.group.order() == ipow(p, t == &t3 ? 3 : 4));
        fps.push_back(testing::fingerprint(e.group));
        nonabelian += !series(e.group).derived.is_trivial();
      }
      // Fingerprints collide only for two-generated groups, which are then
      // separated by exhaustive search for an isomorphism.
      for (std::size_t i = 0; i < t->size(); ++i)
        for (std::size_t j = i + 1; j < t->size(); ++j) {
          if (!(fps[i] == fps[j])) continue;
          CAPTURE((*t)[i].name);
          CAPTURE((*t)[j].name);
          REQUIRE(fps[i].d == 2);
          CHECK_FALSE(testing::isomorphic_two_generated((*t)[i].group, (*t)[j].group));
        }
      if (t == &t3) CHECK(nonabelian == 2);
      if (t == &t4) CHECK(nonabelian == (p == 2 ? 9 : 10));
    }
  }
  const auto t = small_group_table(2, 3);
  std::set<std::string> names;
  for (const auto& e : t) names.insert(e.name);
  CHECK(names.count("D8") == 1);
  CHECK(names.count("Q8") == 1);
  CHECK_THROWS_AS(small_group_table(7, 3), InputError);
  CHECK_THROWS_AS(small_group_table(3, 5), InputError);
}

TEST_CASE("serialization round trip") {
  for (const auto& [name, P] : testing::oracle_universe()) {
    CAPTURE(name);
    CHECK(parse(serialize(P)) == P);
  }
  const auto e1 = fam(Family::E1, 3);
  const std::string text = serialize(e1);
  CHECK(serialize(parse(text)) == text);
}

TEST_CASE("parse diagnostics") {
  CHECK_THROWS_WITH_AS(parse(R"({"p":3,"ngens":3,"comm":{"2,1":[[1,1]]}})"),
                       doctest::Contains("weighting invariant"), InputError);
  CHECK_THROWS_WITH_AS(parse(R"({"p":3,"ngens":3,"comm":{"2,1":[[3,1]]},)"),
                       doctest::Contains("malformed JSON"), InputError);
  CHECK_THROWS_WITH_AS(parse(R"({"p":3,"ngens":2,"power":{"1":[[2,1]]},"comm":{"2,1":[[2,1]]}})"),
                       doctest::Contains("comm"), InputError);
  CHECK_THROWS_WITH_AS(parse(R"({"p":3,"ngens":3,"power":{"1":[[2,1]]},"comm":{"2,1":[[3,1]]}})"),
                       doctest::Contains("inconsistent"), InputError);
  CHECK_THROWS_WITH_AS(parse(R"({"p":4,"ngens":1})"), doctest::Contains("not prime"), InputError);
  CHECK_THROWS_WITH_AS(parse(R"({"p":3,"ngens":2,"extra":1})"), doctest::Contains("extra"),
                       InputError);
  CHECK_THROWS_WITH_AS(parse(R"({"p":3,"ngens":2,"power":{"5":[]}})"),
                       doctest::Contains("out of range"), InputError);
  CHECK_THROWS_WITH_AS(parse(R"({"ngens":2})"), doctest::Contains("'p'"), InputError);
}

TEST_CASE("family shorthand and sample file") {
  const auto g4 = parse(R"({"family":"G4","p":3,"m":2})");
  CHECK(g4 == fam(Family::G4, 3, 2));
  const auto fs = parse_family_spec(R"({"family":"G1","p":3,"n":4})");
  CHECK(tag(fs) == "G1(p=3,n=4)");
  CHECK_THROWS_AS(parse(R"({"family":"G7","p":3})"), InputError);

  const auto g5 = parse(read_file(PGH_DATA_DIR "/g5.json"));
  const auto st = structure_stats(g5);
  CHECK(st.n == 6);
  CHECK(st.k == 3);
  CHECK(st.d == 3);
  CHECK(g5 == fam(Family::G5, 3));
}
