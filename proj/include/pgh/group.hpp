#pragma once

// Structural computations in a finite p-group given by a consistent pc
// presentation: subgroups as canonical induced sequences, centre, derived
// and lower central series, quotients and abelian sections.

#include <cstdint>
#include <vector>

#include "pgh/abelian_type.hpp"
#include "pgh/linear_algebra.hpp"
#include "pgh/pc_presentation.hpp"

namespace pgh {

/// Subgroup of a pc-presented group, stored as its canonical induced
/// sequence: one element per leading index, leading exponent 1, and zero
/// exponent at every other leading index. Equal subgroups have equal bases.
class Subgroup {
 public:
  Subgroup() = default;
  static Subgroup trivial() { return Subgroup(); }
  static Subgroup whole(const PcPresentation& P);

  const std::vector<Element>& basis() const { return basis_; }
  std::vector<int> leads() const;
  int log_order() const { return static_cast<int>(basis_.size()); }
  std::uint64_t order(int p) const { return ipow(p, log_order()); }
  bool is_trivial() const { return basis_.empty(); }

  /// Remainder of x after division by the basis; identity iff x is a member.
  Element sift(const PcPresentation& P, const Element& x) const;
  bool contains(const PcPresentation& P, const Element& x) const;
  /// Exponents c with x = b_1^c_1 ... b_r^c_r; throws InputError if x is not a member.
  std::vector<int> coordinates(const PcPresentation& P, const Element& x) const;
  /// b_1^c_1 ... b_r^c_r
  Element element_at(const PcPresentation& P, const std::vector<int>& coords) const;

  bool is_subgroup_of(const PcPresentation& P, const Subgroup& other) const;
  bool is_normal(const PcPresentation& P) const;

  friend bool operator==(const Subgroup&, const Subgroup&) = default;

 private:
  friend Subgroup closure(const PcPresentation&, const std::vector<Element>&, bool);
  std::vector<Element> basis_;
};

/// Subgroup generated by gens, or its normal closure in G when normal is set.
Subgroup closure(const PcPresentation& P, const std::vector<Element>& gens, bool normal = false);
/// Smallest normal subgroup containing both.
Subgroup join(const PcPresentation& P, const Subgroup& A, const Subgroup& B);
Subgroup intersection(const PcPresentation& P, const Subgroup& A, const Subgroup& B);

/// Z(G), computed down the chain of central prime layers G_k = <g_k, ..., g_N>
/// by solving one GF(p) linear system per layer; no element enumeration.
Subgroup center(const PcPresentation& P);

struct Series {
  Subgroup derived;
  /// gamma_1 = G, gamma_2 = G', ..., ending with the first trivial term.
  std::vector<Subgroup> lower_central;
  Subgroup frattini;
  int nilpotency_class = 0;

  /// gamma_i for i >= 1 (trivial beyond the computed range).
  const Subgroup& gamma(int i) const;
};

Series series(const PcPresentation& P);
/// G' alone, without the rest of the series.
Subgroup derived_subgroup(const PcPresentation& P);

/// G/N as a pc presentation on the generators of G whose index is not a
/// leading index of N, together with the projection.
class Quotient {
 public:
  Quotient(const PcPresentation& P, const Subgroup& N);

  const PcPresentation& group() const { return group_; }
  const Subgroup& kernel() const { return kernel_; }
  /// Indices in G of the generators kept in G/N, in order.
  const std::vector<int>& kept() const { return kept_; }

  Element project(const Element& x) const;
  /// Transversal element of G mapping to q.
  Element lift(const Element& q) const;

 private:
  Element reduce(const Element& x) const;

  PcPresentation source_;
  Subgroup kernel_;
  std::vector<int> kept_;
  PcPresentation group_;
};

/// Abelian section N/M of G with coordinates in its invariant-factor basis.
class AbelianSection {
 public:
  AbelianSection(const PcPresentation& P, const Subgroup& N, const Subgroup& M);

  const AbelianType& type() const { return type_; }
  /// Cyclic orders p^a_i of the coordinate axes (nontrivial factors only).
  const std::vector<long long>& moduli() const { return moduli_; }
  /// Coordinates of xM, x in N, reduced modulo moduli().
  std::vector<long long> coordinates(const Element& x) const;

 private:
  Quotient quotient_;
  Subgroup image_;
  std::vector<std::vector<long long>> transform_;  // columns of V for kept axes
  std::vector<long long> moduli_;
  AbelianType type_;
};

/// Elementary divisors of N/M; requires M <= N, both normal, N/M abelian.
AbelianType abelian_invariants(const PcPresentation& P, const Subgroup& N, const Subgroup& M);

struct StructureStats {
  int n = 0;  // log_p |G|
  int k = 0;  // log_p |G'|
  int d = 0;  // log_p |G / Phi(G)|
  int nilpotency_class = 0;
  AbelianType quotient_type;  // G/G'
  int quotient_exponent_log = 0;
  bool homocyclic = true;
};

StructureStats structure_stats(const PcPresentation& P);

PcPresentation direct_product(const PcPresentation& A, const PcPresentation& B);

}  // namespace pgh
