#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "oracle/todd_coxeter.hpp"
#include "pgh/catalog.hpp"
#include "pgh/group.hpp"

namespace testing {

inline pgh::FamilySpec spec(pgh::Family f, int p, int m = 0, int n = 0) {
  pgh::FamilySpec s;
  s.family = f;
  s.p = p;
  s.m = m;
  s.n = n;
  return s;
}

inline pgh::PcPresentation fam(pgh::Family f, int p, int m = 0, int n = 0) {
  return pgh::make(spec(f, p, m, n));
}

inline pgh::PcPresentation homocyclic(int p, int m, int d) {
  pgh::FamilySpec s = spec(pgh::Family::HOMOCYCLIC, p, m);
  s.d = d;
  return pgh::make(s);
}

inline pgh::PcPresentation abelian(int p, std::vector<int> exps) {
  pgh::FamilySpec s = spec(pgh::Family::ABELIAN, p);
  s.exponents = std::move(exps);
  return pgh::make(s);
}

inline pgh::Element gen(const pgh::PcPresentation& P, const char* label) {
  return P.generator(*P.find_label(label));
}

/// Isomorphism invariants, including the full element-order census.
struct Fingerprint {
  int n, k, d, cls;
  pgh::AbelianType ab, center;
  std::map<int, int> order_census;
  auto operator<=>(const Fingerprint&) const = default;
};

inline Fingerprint fingerprint(const pgh::PcPresentation& P) {
  const auto st = pgh::structure_stats(P);
  Fingerprint f{st.n, st.k, st.d, st.nilpotency_class, st.quotient_type, {}, {}};
  const auto Z = pgh::center(P);
  f.center = pgh::abelian_invariants(P, Z, pgh::Subgroup::trivial());
  for (const auto& x : oracle::all_elements(P)) ++f.order_census[P.order_log(x)];
  return f;
}

/// Brute-force isomorphism test for groups generated by two elements, used
/// where fingerprints collide. Pc generators of P are written as words in the
/// two generators outside the Frattini subgroup; every candidate image pair
/// in Q is checked against all rules of P and for generating Q.
inline bool isomorphic_two_generated(const pgh::PcPresentation& P, const pgh::PcPresentation& Q) {
  using pgh::Element;
  if (P.order() != Q.order() || P.prime() != Q.prime()) return false;
  const auto phi = pgh::series(P).frattini;
  std::vector<int> tops;
  {
    std::vector<bool> lead(P.ngens(), false);
    for (int l : phi.leads()) lead[l] = true;
    for (int i = 0; i < P.ngens(); ++i)
      if (!lead[i]) tops.push_back(i);
  }
  if (tops.size() != 2) throw std::runtime_error("not two-generated");
  // Shortest words for every element of P, by breadth-first search.
  std::map<Element, std::vector<int>> word{{P.identity(), {}}};
  std::vector<Element> frontier{P.identity()};
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (const auto& x : frontier)
      for (int t = 0; t < 2; ++t) {
        Element y = P.multiply(x, P.generator(tops[t]));
        if (word.count(y)) continue;
        auto w = word[x];
        w.push_back(t);
        word.emplace(y, std::move(w));
        next.push_back(std::move(y));
      }
    frontier = std::move(next);
  }
  const int p = P.prime();
  const auto elems = oracle::all_elements(Q);
  for (const auto& x : elems)
    for (const auto& y : elems) {
      std::vector<Element> im;
      for (int i = 0; i < P.ngens(); ++i) {
        Element v = Q.identity();
        for (int t : word[P.generator(i)]) v = Q.multiply(v, t == 0 ? x : y);
        im.push_back(std::move(v));
      }
      auto eval = [&](const Element& w) {
        Element r = Q.identity();
        for (int i = 0; i < w.size(); ++i)
          if (w[i] != 0) r = Q.multiply(r, Q.power(im[i], w[i]));
        return r;
      };
      bool ok = true;
      for (int i = 0; i < P.ngens() && ok; ++i) {
        ok = Q.power(im[i], p) == eval(P.power_rule(i));
        for (int j = 0; j < i && ok; ++j) ok = Q.commutator(im[i], im[j]) == eval(P.comm_rule(i, j));
      }
      if (ok && pgh::closure(Q, {x, y}).log_order() == Q.ngens()) return true;
    }
  return false;
}

/// Named groups of order at most 3^6 used by the oracle comparisons.
inline std::vector<std::pair<std::string, pgh::PcPresentation>> oracle_universe() {
  using pgh::Family;
  std::vector<std::pair<std::string, pgh::PcPresentation>> out;
  for (int p : {2, 3})
    for (int e : {3, 4})
      for (auto& entry : pgh::small_group_table(p, e)) out.emplace_back(entry.name, entry.group);
  out.emplace_back("G2(3,2)", fam(Family::G2, 3, 2));
  out.emplace_back("G3(3)", fam(Family::G3, 3));
  out.emplace_back("G4(3,2)", fam(Family::G4, 3, 2));
  out.emplace_back("G5(3)", fam(Family::G5, 3));
  out.emplace_back("G1(3,5)", fam(Family::G1, 3, 0, 5));
  out.emplace_back("MinA(3,3,2)", fam(Family::MIN_NONAB_A, 3, 3, 2));
  out.emplace_back("G2(2,2)", fam(Family::G2, 2, 2));
  out.emplace_back("G2(2,3)", fam(Family::G2, 2, 3));
  return out;
}

}  // namespace testing
