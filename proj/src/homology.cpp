#include "pgh/homology.hpp"

#include <algorithm>
#include <numeric>

#include "pgh/errors.hpp"

namespace pgh {

using detail::Rules;
using detail::SparseWord;

// ---------------------------------------------------------------- tails

TailsSystem tails_system(const PcPresentation& P) {
  const int n = P.ngens();
  TailsSystem T;
  T.ngens = n;
  T.tail_count = n + n * (n - 1) / 2;
  T.rules = P.rules();
  T.rules.tails = T.tail_count;
  int next = 0;
  for (int i = 0; i < n; ++i) T.rules.power_tail[i] = next++;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < j; ++i) T.rules.comm_tail[j][i] = next++;

  T.relations = IntMatrix(0, T.tail_count);
  for (const auto& test : detail::consistency_tests(T.rules)) {
    if (test.lhs.e != test.rhs.e)
      throw ComputationError("tails: base presentation fails a consistency test");
    std::vector<long long> row(T.tail_count);
    for (int c = 0; c < T.tail_count; ++c) row[c] = test.lhs.t[c] - test.rhs.t[c];
    T.relations.append_row(row);
  }
  T.snf = smith_normal_form(T.relations);
  if (T.snf.rank() != T.tail_count - n)
    throw ComputationError("tails: torsion-free rank " + std::to_string(T.tail_count - T.snf.rank()) +
                           " differs from the generator count " + std::to_string(n));
  T.multiplier = AbelianType::from_invariants(P.prime(), T.snf.diagonal);
  return T;
}

AbelianType schur_multiplier(const PcPresentation& P) { return tails_system(P).multiplier; }

AbelianType abelian_multiplier(const AbelianType& A) {
  std::vector<int> e;
  for (std::size_t i = 0; i < A.exponents.size(); ++i)
    for (std::size_t j = i + 1; j < A.exponents.size(); ++j)
      e.push_back(std::min(A.exponents[i], A.exponents[j]));
  return AbelianType(A.p, e);
}

AbelianType tensor_abelian(const AbelianType& A, const AbelianType& B) {
  if (A.p != B.p && !A.is_trivial() && !B.is_trivial())
    throw InputError("tensor product of groups for different primes");
  std::vector<int> e;
  for (int a : A.exponents)
    for (int b : B.exponents) e.push_back(std::min(a, b));
  return AbelianType(A.p, e);
}

// ---------------------------------------------------------------- stem covers

Element StemCover::project(const Element& e) const {
  return Element(std::vector<int>(e.exponents.begin(), e.exponents.begin() + base.ngens()));
}

Element StemCover::lift(const Element& g) const {
  Element e = E.identity();
  std::copy(g.exponents.begin(), g.exponents.end(), e.exponents.begin());
  return e;
}

StemCover stem_cover(const PcPresentation& P, ComplementChoice choice) {
  return stem_cover(tails_system(P), P, choice);
}

StemCover stem_cover(const TailsSystem& T, const PcPresentation& P, ComplementChoice choice) {
  const int n = P.ngens();
  const int p = P.prime();
  const SmithForm& snf = T.snf;
  const int rank = snf.rank();

  // Torsion coordinates of the cokernel and the generator chains for them.
  struct Axis {
    int column;
    long long modulus;
    int first_gen;
    int length;
  };
  std::vector<Axis> axes;
  int next = n;
  for (int a = 0; a < rank; ++a) {
    if (snf.diagonal[a] == 1) continue;
    Axis ax{a, snf.diagonal[a].get_si(), next, 0};
    for (long long m = ax.modulus; m > 1; m /= p) ++ax.length;
    next += ax.length;
    axes.push_back(ax);
  }

  // Tail c is sum_a V(c, a) s_a; free coordinates are killed or sent to s of the first axis.
  auto tail_word = [&](int c) {
    SparseWord w;
    for (std::size_t k = 0; k < axes.size(); ++k) {
      const Axis& ax = axes[k];
      mpz_class v = snf.V(c, ax.column);
      if (k == 0 && choice == ComplementChoice::Alternate)
        for (int f = rank; f < T.tail_count; ++f) v += snf.V(c, f);
      const mpz_class mod(static_cast<long>(ax.modulus));
      v %= mod;
      if (v < 0) v += mod;
      long long x = v.get_si();
      for (int g = 0; g < ax.length; ++g, x /= p)
        if (x % p != 0) w.emplace_back(ax.first_gen + g, static_cast<int>(x % p));
    }
    return w;
  };
  auto with_tail = [&](const Element& base, int tail) {
    SparseWord w;
    for (int i = 0; i < n; ++i)
      if (base[i] != 0) w.emplace_back(i, base[i]);
    for (const auto& letter : tail_word(tail)) w.push_back(letter);
    return w;
  };

  PcPresentation::Builder B(p, next);
  for (int i = 0; i < n; ++i) {
    B.power(i, with_tail(P.power_rule(i), T.rules.power_tail[i]));
    for (int j = 0; j < i; ++j) B.comm(i, j, with_tail(P.comm_rule(i, j), T.rules.comm_tail[i][j]));
  }
  for (const auto& ax : axes)
    for (int g = 0; g + 1 < ax.length; ++g)
      B.power(ax.first_gen + g, SparseWord{{ax.first_gen + g + 1, 1}});
  for (const auto& [i, s] : P.labels()) B.label(i, s);

  StemCover C;
  C.base = P;
  C.E = B.build_unchecked();
  C.choice = choice;
  C.multiplier = T.multiplier;
  if (!is_consistent(C.E)) throw ComputationError("stem cover: extension presentation is inconsistent");

  std::vector<Element> mgens;
  for (int g = n; g < next; ++g) mgens.push_back(C.E.generator(g));
  C.M = closure(C.E, mgens);

  // Verification: order, centrality, M <= E', type of M, and the projection.
  if (C.M.log_order() != T.multiplier.log_order())
    throw ComputationError("stem cover: |E| != |G| |M(G)|");
  for (const auto& m : C.M.basis())
    for (int g = 0; g < C.E.ngens(); ++g)
      if (!C.E.commutator(m, C.E.generator(g)).is_identity())
        throw ComputationError("stem cover: M is not central");
  const Subgroup D = derived_subgroup(C.E);
  if (!C.M.is_subgroup_of(C.E, D)) throw ComputationError("stem cover: M is not contained in E'");
  if (abelian_invariants(C.E, C.M, Subgroup::trivial()) != T.multiplier)
    throw ComputationError("stem cover: M does not have the multiplier's type");
  for (int i = 0; i < n; ++i) {
    if (C.project(C.E.power_rule(i)) != P.power_rule(i))
      throw ComputationError("stem cover: projection does not respect a power rule");
    for (int j = 0; j < i; ++j)
      if (C.project(C.E.comm_rule(i, j)) != P.comm_rule(i, j))
        throw ComputationError("stem cover: projection does not respect a commutator rule");
  }
  return C;
}

int exterior_square_log(const PcPresentation& P, const StemCover& C) {
  const int expected = C.multiplier.log_order() + derived_subgroup(P).log_order();
  const int measured = derived_subgroup(C.E).log_order();
  if (expected != measured)
    throw ComputationError("exterior square: |M(G)| |G'| = p^" + std::to_string(expected) +
                           " but |E'| = p^" + std::to_string(measured));
  return expected;
}

int exterior_square_log(const PcPresentation& P) { return exterior_square_log(P, stem_cover(P)); }

// ---------------------------------------------------------------- abelian helpers

int generated_log_order(const std::vector<std::vector<long long>>& vectors,
                        const std::vector<long long>& moduli, int p) {
  const int r = static_cast<int>(moduli.size());
  if (r == 0) return 0;
  IntMatrix A(0, r);
  int total = 0;
  for (int i = 0; i < r; ++i) {
    std::vector<long long> row(r, 0);
    row[i] = moduli[i];
    A.append_row(row);
    for (long long m = moduli[i]; m > 1; m /= p) ++total;
  }
  for (const auto& v : vectors) A.append_row(v);
  const SmithForm snf = smith_normal_form(A);
  int index = 0;
  for (const auto& d : snf.diagonal) {
    mpz_class x = d;
    while (x % p == 0) {
      x /= p;
      ++index;
    }
  }
  return total - index;
}

namespace {

// Coordinates in A (x) B for abelian sections A, B: the pair (i, j) carries
// alpha_i * beta_j modulo gcd(a_i, b_j).
struct TensorSpace {
  const AbelianSection& left;
  const AbelianSection& right;
  std::vector<long long> moduli;

  TensorSpace(const AbelianSection& l, const AbelianSection& r) : left(l), right(r) {
    for (long long a : l.moduli())
      for (long long b : r.moduli()) moduli.push_back(std::gcd(a, b));
  }

  std::vector<long long> zero() const { return std::vector<long long>(moduli.size(), 0); }

  void add(std::vector<long long>& acc, const Element& x, const Element& z) const {
    const auto a = left.coordinates(x);
    const auto b = right.coordinates(z);
    std::size_t k = 0;
    for (long long ai : a)
      for (long long bj : b) {
        acc[k] = (acc[k] + (ai % moduli[k]) * (bj % moduli[k])) % moduli[k];
        ++k;
      }
  }

  static bool is_zero(const std::vector<long long>& v) {
    return std::all_of(v.begin(), v.end(), [](long long x) { return x == 0; });
  }
};

// Generators of G whose index is not a leading index of N; they generate G/N.
std::vector<Element> transversal_generators(const PcPresentation& P, const Subgroup& N) {
  std::vector<bool> lead(P.ngens(), false);
  for (int l : N.leads()) lead[l] = true;
  std::vector<Element> out;
  for (int i = 0; i < P.ngens(); ++i)
    if (!lead[i]) out.push_back(P.generator(i));
  return out;
}

std::vector<Element> kernel_test_elements(const PcPresentation& P) {
  std::vector<Element> out;
  if (P.order() <= 2187) {
    Element e = P.identity();
    for (;;) {
      out.push_back(e);
      int i = P.ngens() - 1;
      while (i >= 0 && ++e.exponents[i] == P.prime()) e.exponents[i--] = 0;
      if (i < 0) break;
    }
    return out;
  }
  for (int i = 0; i < P.ngens(); ++i) {
    out.push_back(P.generator(i));
    for (int j = i + 1; j < P.ngens(); ++j) out.push_back(P.multiply(P.generator(i), P.generator(j)));
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- Blackburn–Evens

BeSequence be_sequence(const PcPresentation& P) { return be_sequence(P, stem_cover(P)); }

BeSequence be_sequence(const PcPresentation& P, const StemCover& C) {
  const Series s = series(P);
  if (s.nilpotency_class != 2) throw InputError("Blackburn-Evens sequence requires class exactly 2");
  const int p = P.prime();
  const Subgroup& D = s.derived;
  const Subgroup W = Subgroup::whole(P);
  const AbelianSection secD(P, D, Subgroup::trivial());
  const AbelianSection secQ(P, W, D);
  const TensorSpace tensor(secD, secQ);
  const PcPresentation& E = C.E;

  BeSequence r;
  r.tensor_log = tensor_abelian(secD.type(), secQ.type()).log_order();
  r.multiplier_log = C.multiplier.log_order();
  r.quotient_multiplier_log = abelian_multiplier(secQ.type()).log_order();
  r.derived_log = D.log_order();

  auto g = [&](const Element& x, const Element& z) {
    const Element v = E.commutator(C.lift(x), C.lift(z));
    if (!C.M.contains(E, v)) throw ComputationError("Blackburn-Evens: g lands outside M");
    return v;
  };

  std::vector<Element> image;
  for (const auto& x : D.basis())
    for (int i = 0; i < P.ngens(); ++i) image.push_back(g(x, P.generator(i)));
  r.image_log = closure(E, image).log_order();
  r.kernel_log = r.tensor_log - r.image_log;
  r.order_identity = r.tensor_log + r.quotient_multiplier_log ==
                     r.kernel_log + r.multiplier_log + r.derived_log;

  // Listed kernel generators: Jacobi elements over generator triples and
  // w^{p^s} (x) wG' with p^s = exp(G/G').
  std::vector<std::vector<long long>> listed;
  bool all_trivial = true;
  for (int a = 0; a < P.ngens(); ++a)
    for (int b = 0; b < P.ngens(); ++b)
      for (int c = 0; c < P.ngens(); ++c) {
        const Element x = P.generator(a), y = P.generator(b), z = P.generator(c);
        const Element xy = P.commutator(x, y), zx = P.commutator(z, x), yz = P.commutator(y, z);
        auto v = tensor.zero();
        tensor.add(v, xy, z);
        tensor.add(v, zx, y);
        tensor.add(v, yz, x);
        const Element img = E.multiply(E.multiply(g(xy, z), g(zx, y)), g(yz, x));
        all_trivial = all_trivial && img.is_identity();
        listed.push_back(std::move(v));
      }
  const long long ps = static_cast<long long>(ipow(p, secQ.type().exponent_log()));
  for (const auto& w : kernel_test_elements(P)) {
    const Element u = P.power(w, ps);
    auto v = tensor.zero();
    tensor.add(v, u, w);
    all_trivial = all_trivial && g(u, w).is_identity();
    listed.push_back(std::move(v));
  }
  r.generators_in_kernel = all_trivial;
  r.generated_log = generated_log_order(listed, tensor.moduli, p);
  return r;
}

// ---------------------------------------------------------------- Psi maps

PsiImage psi2_image(const PcPresentation& P) {
  const Series s = series(P);
  PsiImage out;
  if (s.nilpotency_class < 2) return out;
  const Subgroup W = Subgroup::whole(P);
  const AbelianSection left(P, s.derived, s.gamma(3));
  const AbelianSection right(P, W, s.derived);
  const TensorSpace tensor(left, right);
  // Representatives of G/G'. The map does not factor through G/G'Z(G) when
  // Z(G) is not inside G' (x, y, z = a, b, central w in G1 gives [a,b] (x) w).
  const auto reps = transversal_generators(P, s.derived);

  std::vector<std::vector<long long>> images;
  for (std::size_t a = 0; a < reps.size(); ++a)
    for (std::size_t b = 0; b < reps.size(); ++b)
      for (std::size_t c = 0; c < reps.size(); ++c) {
        const Element &x = reps[a], &y = reps[b], &z = reps[c];
        auto v = tensor.zero();
        tensor.add(v, P.commutator(x, y), z);
        tensor.add(v, P.commutator(z, x), y);
        tensor.add(v, P.commutator(y, z), x);
        if ((a == b || b == c || a == c) && !TensorSpace::is_zero(v)) out.degenerate_trivial = false;
        images.push_back(std::move(v));
      }
  out.log_order = generated_log_order(images, tensor.moduli, P.prime());
  return out;
}

PsiImage psi3_image(const PcPresentation& P) {
  const Series s = series(P);
  PsiImage out;
  if (s.nilpotency_class < 3) return out;
  const Subgroup W = Subgroup::whole(P);
  const Subgroup GZ = join(P, s.derived, center(P));
  const AbelianSection left(P, s.gamma(3), s.gamma(4));
  const AbelianSection right(P, W, GZ);
  const TensorSpace tensor(left, right);
  const auto reps = transversal_generators(P, GZ);
  const std::size_t r = reps.size();

  std::vector<std::vector<long long>> images;
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b)
      for (std::size_t c = 0; c < r; ++c)
        for (std::size_t d = 0; d < r; ++d) {
          const Element &x = reps[a], &y = reps[b], &z = reps[c], &w = reps[d];
          const Element xy = P.commutator(x, y), zw = P.commutator(z, w);
          auto v = tensor.zero();
          tensor.add(v, P.commutator(xy, z), w);
          tensor.add(v, P.commutator(w, xy), z);
          tensor.add(v, P.commutator(zw, x), y);
          tensor.add(v, P.commutator(y, zw), x);
          if ((a == b || c == d) && !TensorSpace::is_zero(v)) out.degenerate_trivial = false;
          images.push_back(std::move(v));
        }
  out.log_order = generated_log_order(images, tensor.moduli, P.prime());
  return out;
}

Thm25Check thm25_check(const PcPresentation& P) {
  const Series s = series(P);
  if (s.nilpotency_class > 3) throw InputError("the inequality check supports class at most 3");
  const StructureStats st = structure_stats(P);
  Thm25Check t;
  t.multiplier_log = schur_multiplier(P).log_order();
  t.derived_log = st.k;
  t.psi2_log = psi2_image(P).log_order;
  t.psi3_log = psi3_image(P).log_order;
  const int qm = abelian_multiplier(st.quotient_type).log_order();
  t.lhs_log = t.multiplier_log + t.derived_log + t.psi2_log + t.psi3_log;
  t.middle_log = qm;
  for (int i = 2; i <= s.nilpotency_class; ++i)
    t.middle_log += tensor_abelian(abelian_invariants(P, s.gamma(i), s.gamma(i + 1)), st.quotient_type)
                        .log_order();
  t.rhs_log = qm + st.k * st.d;
  t.holds = t.lhs_log <= t.middle_log && t.middle_log <= t.rhs_log;
  return t;
}

}  // namespace pgh
