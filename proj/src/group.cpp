#include "pgh/group.hpp"

#include <algorithm>
#include <deque>
#include <optional>

#include "pgh/errors.hpp"

namespace pgh {

// ---------------------------------------------------------------- Subgroup

Subgroup Subgroup::whole(const PcPresentation& P) {
  std::vector<Element> gens;
  for (int i = 0; i < P.ngens(); ++i) gens.push_back(P.generator(i));
  return closure(P, gens);
}

std::vector<int> Subgroup::leads() const {
  std::vector<int> l;
  for (const auto& b : basis_) l.push_back(b.lead());
  return l;
}

Element Subgroup::sift(const PcPresentation& P, const Element& x) const {
  Element r = x;
  for (const auto& b : basis_) {
    const int l = b.lead();
    if (r[l] != 0) r = P.multiply(r, P.power(b, P.prime() - r[l]));
  }
  return r;
}

bool Subgroup::contains(const PcPresentation& P, const Element& x) const {
  return sift(P, x).is_identity();
}

std::vector<int> Subgroup::coordinates(const PcPresentation& P, const Element& x) const {
  // x = b_1^c_1 * rest, rest in <b_2, ...>; peel from the left.
  std::vector<int> c;
  Element r = x;
  for (const auto& b : basis_) {
    const int l = b.lead();
    const int e = r[l];
    c.push_back(e);
    if (e != 0) r = P.multiply(P.power(b, -e), r);
  }
  if (!r.is_identity()) throw InputError("element is not a member of the subgroup");
  return c;
}

Element Subgroup::element_at(const PcPresentation& P, const std::vector<int>& coords) const {
  Element x = P.identity();
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (coords[i] != 0) x = P.multiply(x, P.power(basis_[i], coords[i]));
  return x;
}

bool Subgroup::is_subgroup_of(const PcPresentation& P, const Subgroup& other) const {
  return std::all_of(basis_.begin(), basis_.end(),
                     [&](const Element& b) { return other.contains(P, b); });
}

bool Subgroup::is_normal(const PcPresentation& P) const {
  for (const auto& b : basis_)
    for (int k = 0; k < P.ngens(); ++k)
      if (!contains(P, P.commutator(b, P.generator(k)))) return false;
  return true;
}

Subgroup closure(const PcPresentation& P, const std::vector<Element>& gens, bool normal) {
  const int n = P.ngens();
  const int p = P.prime();
  std::vector<std::optional<Element>> by_lead(n);

  auto sift = [&](Element r) {
    for (int l = r.lead(); l < n; l = r.lead()) {
      if (!by_lead[l]) break;
      r = P.multiply(r, P.power(*by_lead[l], p - r[l]));
    }
    return r;
  };

  std::deque<Element> queue(gens.begin(), gens.end());
  while (!queue.empty()) {
    Element r = sift(std::move(queue.front()));
    queue.pop_front();
    if (r.is_identity()) continue;
    const int l = r.lead();
    r = P.power(r, inverse_mod(r[l], p));
    queue.push_back(P.power(r, p));
    for (int m = 0; m < n; ++m)
      if (by_lead[m]) queue.push_back(P.commutator(r, *by_lead[m]));
    if (normal)
      for (int k = 0; k < n; ++k) queue.push_back(P.commutator(r, P.generator(k)));
    by_lead[l] = std::move(r);
  }

  // Canonical form: clear every other leading position, left to right.
  Subgroup S;
  for (int l = 0; l < n; ++l)
    if (by_lead[l]) S.basis_.push_back(*by_lead[l]);
  for (std::size_t i = 0; i < S.basis_.size(); ++i)
    for (std::size_t j = i + 1; j < S.basis_.size(); ++j) {
      const int lj = S.basis_[j].lead();
      const int e = S.basis_[i][lj];
      if (e != 0) S.basis_[i] = P.multiply(S.basis_[i], P.power(S.basis_[j], p - e));
    }
  return S;
}

Subgroup join(const PcPresentation& P, const Subgroup& A, const Subgroup& B) {
  std::vector<Element> gens = A.basis();
  gens.insert(gens.end(), B.basis().begin(), B.basis().end());
  return closure(P, gens, true);
}

Subgroup intersection(const PcPresentation& P, const Subgroup& A, const Subgroup& B) {
  const Subgroup& small = A.log_order() <= B.log_order() ? A : B;
  const Subgroup& big = A.log_order() <= B.log_order() ? B : A;
  const int r = small.log_order();
  if (ipow(P.prime(), r) > (1ULL << 22))
    throw ComputationError("intersection: subgroup too large to enumerate");
  std::vector<Element> members;
  std::vector<int> c(r, 0);
  for (;;) {
    Element x = small.element_at(P, c);
    if (big.contains(P, x)) members.push_back(std::move(x));
    int i = r - 1;
    while (i >= 0 && ++c[i] == P.prime()) c[i--] = 0;
    if (i < 0) break;
  }
  return closure(P, members);
}

// ---------------------------------------------------------------- centre

Subgroup center(const PcPresentation& P) {
  const int n = P.ngens();
  const int p = P.prime();
  // C holds {x : [x, g] in G_k for all g}; refine one layer at a time.
  Subgroup C = Subgroup::whole(P);
  for (int k = 0; k < n; ++k) {
    const auto& B = C.basis();
    const int r = static_cast<int>(B.size());
    // phi(b)_i = exponent of g_k in [b, g_i]; phi is additive on C.
    std::vector<std::vector<int>> phi_t(n, std::vector<int>(r, 0));
    bool any = false;
    for (int j = 0; j < r; ++j)
      for (int i = 0; i < n; ++i) {
        const Element c = P.commutator(B[j], P.generator(i));
        if (c.lead() < k) throw ComputationError("centre: commutator above current layer");
        phi_t[i][j] = c[k];
        any = any || c[k] != 0;
      }
    if (!any) continue;
    std::vector<Element> gens;
    for (const auto& v : nullspace_mod_p(phi_t, r, p)) gens.push_back(C.element_at(P, v));
    for (int j = 0; j < r; ++j) {
      gens.push_back(P.power(B[j], p));
      for (int m = j + 1; m < r; ++m) gens.push_back(P.commutator(B[j], B[m]));
    }
    C = closure(P, gens, true);
  }
  return C;
}

// ---------------------------------------------------------------- series

const Subgroup& Series::gamma(int i) const {
  static const Subgroup kTrivial;
  if (i < 1) throw InputError("gamma index starts at 1");
  if (i > static_cast<int>(lower_central.size())) return kTrivial;
  return lower_central[i - 1];
}

namespace {

std::vector<Element> generator_commutators(const PcPresentation& P) {
  std::vector<Element> comms;
  for (int j = 0; j < P.ngens(); ++j)
    for (int i = 0; i < j; ++i) comms.push_back(P.commutator(P.generator(j), P.generator(i)));
  return comms;
}

}  // namespace

Subgroup derived_subgroup(const PcPresentation& P) {
  return closure(P, generator_commutators(P), true);
}

Series series(const PcPresentation& P) {
  const int n = P.ngens();
  Series s;
  const std::vector<Element> comms = generator_commutators(P);
  s.derived = closure(P, comms, true);

  std::vector<Element> frat = comms;
  for (int i = 0; i < n; ++i) frat.push_back(P.power(P.generator(i), P.prime()));
  s.frattini = closure(P, frat, true);

  s.lower_central.push_back(Subgroup::whole(P));
  while (!s.lower_central.back().is_trivial()) {
    std::vector<Element> next;
    for (const auto& b : s.lower_central.back().basis())
      for (int i = 0; i < n; ++i) next.push_back(P.commutator(b, P.generator(i)));
    s.lower_central.push_back(closure(P, next, true));
  }
  s.nilpotency_class = static_cast<int>(s.lower_central.size()) - 1;
  return s;
}

// ---------------------------------------------------------------- quotients

Quotient::Quotient(const PcPresentation& P, const Subgroup& N)
    : source_(P), kernel_(N), group_(P.prime()) {
  if (!N.is_normal(P)) throw InputError("quotient: subgroup is not normal");
  std::vector<bool> is_lead(P.ngens(), false);
  for (int l : N.leads()) is_lead[l] = true;
  std::vector<int> new_index(P.ngens(), -1);
  for (int i = 0; i < P.ngens(); ++i)
    if (!is_lead[i]) {
      new_index[i] = static_cast<int>(kept_.size());
      kept_.push_back(i);
    }

  const int m = static_cast<int>(kept_.size());
  PcPresentation::Builder b(P.prime(), m);
  for (int a = 0; a < m; ++a) {
    const int i = kept_[a];
    b.power(a, project(P.power(P.generator(i), P.prime())));
    for (int c = 0; c < a; ++c)
      b.comm(a, c, project(P.commutator(P.generator(i), P.generator(kept_[c]))));
    if (auto it = P.labels().find(i); it != P.labels().end()) b.label(a, it->second);
  }
  // G/N satisfies these relations and has order p^m, so the presentation is consistent.
  group_ = b.build_unchecked();
}

Element Quotient::reduce(const Element& x) const {
  Element r = x;
  for (const auto& b : kernel_.basis()) {
    const int l = b.lead();
    if (r[l] != 0) r = source_.multiply(r, source_.power(b, source_.prime() - r[l]));
  }
  return r;
}

Element Quotient::project(const Element& x) const {
  const Element r = reduce(x);
  Element q = Element::identity(static_cast<int>(kept_.size()));
  for (std::size_t a = 0; a < kept_.size(); ++a) q.exponents[a] = r[kept_[a]];
  return q;
}

Element Quotient::lift(const Element& q) const {
  Element x = source_.identity();
  for (std::size_t a = 0; a < kept_.size(); ++a) x.exponents[kept_[a]] = q[static_cast<int>(a)];
  return x;
}

// ---------------------------------------------------------------- abelian sections

AbelianSection::AbelianSection(const PcPresentation& P, const Subgroup& N, const Subgroup& M)
    : quotient_(P, M) {
  if (!N.is_normal(P)) throw InputError("abelian section: N is not normal");
  if (!M.is_subgroup_of(P, N)) throw InputError("abelian section: M is not contained in N");
  const PcPresentation& Q = quotient_.group();
  std::vector<Element> gens;
  for (const auto& b : N.basis()) gens.push_back(quotient_.project(b));
  image_ = closure(Q, gens);
  const auto& S = image_.basis();
  const int t = static_cast<int>(S.size());
  for (int i = 0; i < t; ++i)
    for (int j = i + 1; j < t; ++j)
      if (!Q.commutator(S[i], S[j]).is_identity())
        throw InputError("abelian section: N/M is not abelian");

  // Relations of the section: p * e_i - coords(s_i^p).
  IntMatrix R(t, t);
  for (int i = 0; i < t; ++i) {
    const auto c = image_.coordinates(Q, Q.power(S[i], Q.prime()));
    for (int j = 0; j < t; ++j) R(i, j) = -c[j];
    R(i, i) += Q.prime();
  }
  const SmithForm snf = smith_normal_form(R);
  std::vector<mpz_class> invariants;
  for (int a = 0; a < snf.rank(); ++a) {
    if (snf.diagonal[a] == 1) continue;
    invariants.push_back(snf.diagonal[a]);
    moduli_.push_back(snf.diagonal[a].get_si());
    std::vector<long long> col(t);
    for (int i = 0; i < t; ++i) {
      mpz_class v = snf.V(i, a) % snf.diagonal[a];
      col[i] = v.get_si();
    }
    transform_.push_back(std::move(col));
  }
  if (snf.rank() != t) throw ComputationError("abelian section: relation matrix is singular");
  type_ = AbelianType::from_invariants(P.prime(), invariants);
}

std::vector<long long> AbelianSection::coordinates(const Element& x) const {
  const auto c = image_.coordinates(quotient_.group(), quotient_.project(x));
  std::vector<long long> y;
  for (std::size_t a = 0; a < moduli_.size(); ++a) {
    long long s = 0;
    for (std::size_t i = 0; i < c.size(); ++i) s = (s + c[i] * transform_[a][i]) % moduli_[a];
    y.push_back((s + moduli_[a]) % moduli_[a]);
  }
  return y;
}

AbelianType abelian_invariants(const PcPresentation& P, const Subgroup& N, const Subgroup& M) {
  if (!M.is_normal(P)) throw InputError("abelian section: M is not normal");
  return AbelianSection(P, N, M).type();
}

// ---------------------------------------------------------------- stats, products

StructureStats structure_stats(const PcPresentation& P) {
  const Series s = series(P);
  StructureStats st;
  st.n = P.ngens();
  st.k = s.derived.log_order();
  st.d = st.n - s.frattini.log_order();
  st.nilpotency_class = s.nilpotency_class;
  st.quotient_type = abelian_invariants(P, Subgroup::whole(P), s.derived);
  st.quotient_exponent_log = st.quotient_type.exponent_log();
  st.homocyclic = st.quotient_type.is_homocyclic();
  return st;
}

PcPresentation direct_product(const PcPresentation& A, const PcPresentation& B) {
  if (A.prime() != B.prime()) throw InputError("direct product: prime mismatch");
  const int na = A.ngens();
  const int n = na + B.ngens();
  PcPresentation::Builder b(A.prime(), n);
  auto shift = [&](const Element& w, int offset) {
    detail::SparseWord s;
    for (int i = 0; i < w.size(); ++i)
      if (w[i] != 0) s.emplace_back(i + offset, w[i]);
    return s;
  };
  for (int i = 0; i < na; ++i) {
    b.power(i, shift(A.power_rule(i), 0));
    for (int j = 0; j < i; ++j) b.comm(i, j, shift(A.comm_rule(i, j), 0));
  }
  for (int i = 0; i < B.ngens(); ++i) {
    b.power(na + i, shift(B.power_rule(i), na));
    for (int j = 0; j < i; ++j) b.comm(na + i, na + j, shift(B.comm_rule(i, j), na));
  }
  for (const auto& [i, s] : A.labels()) b.label(i, s);
  for (const auto& [i, s] : B.labels())
    if (!A.find_label(s)) b.label(na + i, s);
  return b.build_unchecked();
}

}  // namespace pgh
