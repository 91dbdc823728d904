#pragma once

// Schur multipliers by the covering-group (tails) method, stem covers, and
// the abelian tensor machinery around them.

#include <vector>

#include "pgh/abelian_type.hpp"
#include "pgh/group.hpp"
#include "pgh/linear_algebra.hpp"
#include "pgh/pc_presentation.hpp"

namespace pgh {

/// One central tail of infinite order per defining relation, and the integer
/// relations among tails forced by the consistency tests. The cokernel of
/// the relation matrix is Z^N x M(G).
struct TailsSystem {
  int ngens = 0;       // N
  int tail_count = 0;  // N + N(N-1)/2; tail i for g_i^p, then [g_j, g_i] row-major in j
  detail::Rules rules;  // the base rules with tails attached
  IntMatrix relations;  // one row per consistency test, in test order
  SmithForm snf;
  AbelianType multiplier;
};

/// Throws ComputationError if the torsion-free rank of the cokernel is not N.
TailsSystem tails_system(const PcPresentation& P);
AbelianType schur_multiplier(const PcPresentation& P);

/// M(A) = sum over i < j of Z_{gcd(d_i, d_j)}.
AbelianType abelian_multiplier(const AbelianType& A);
/// A (x) B = sum over i, j of Z_{gcd(a_i, b_j)}.
AbelianType tensor_abelian(const AbelianType& A, const AbelianType& B);

/// Which complement of the torsion in R/[F,R] is factored out. Canonical
/// kills every free SNF coordinate; Alternate identifies each free
/// coordinate with the first torsion coordinate instead.
enum class ComplementChoice { Canonical, Alternate };

/// Central extension 1 -> M -> E -> G -> 1 with M = M(G) <= Z(E) n E'.
/// E has the generators of G first (same indices), then the generators of M.
struct StemCover {
  PcPresentation base;
  PcPresentation E;
  Subgroup M;
  AbelianType multiplier;
  ComplementChoice choice = ComplementChoice::Canonical;

  /// Image in G: the first N exponents.
  Element project(const Element& e) const;
  /// Canonical lift: g_i of G to g_i of E.
  Element lift(const Element& g) const;
};

/// All stem cover invariants are verified; a failure throws ComputationError.
StemCover stem_cover(const PcPresentation& P, ComplementChoice choice = ComplementChoice::Canonical);
StemCover stem_cover(const TailsSystem& T, const PcPresentation& P, ComplementChoice choice);

/// log_p |G ^ G| = log_p |M(G)| + log_p |G'|, checked against log_p |E'|.
int exterior_square_log(const PcPresentation& P, const StemCover& C);
int exterior_square_log(const PcPresentation& P);

/// Order of the subgroup of Z_{m_1} + ... + Z_{m_r} generated by vectors, as log_p.
int generated_log_order(const std::vector<std::vector<long long>>& vectors,
                        const std::vector<long long>& moduli, int p);

/// Blackburn–Evens sequence for a class-2 group
///   1 -> ker g -> G' (x) G/G' -> M(G) -> M(G/G') -> G' -> 1,
/// with g(x (x) zG') = [x^, z^] evaluated in a stem cover.
struct BeSequence {
  int tensor_log = 0;           // log |G' (x) G/G'|
  int image_log = 0;            // log |im g|
  int kernel_log = 0;           // log |ker g|
  int multiplier_log = 0;       // log |M(G)|
  int quotient_multiplier_log = 0;  // log |M(G/G')|
  int derived_log = 0;          // log |G'|
  bool order_identity = false;  // |T| |M(G/G')| = |ker g| |M(G)| |G'|
  bool generators_in_kernel = false;
  int generated_log = 0;        // log of the subgroup generated by the evaluated generators
};

/// Throws InputError unless G has class exactly 2.
BeSequence be_sequence(const PcPresentation& P, const StemCover& C);
BeSequence be_sequence(const PcPresentation& P);

struct PsiImage {
  int log_order = 0;
  bool degenerate_trivial = true;  // every tuple with a repeated entry maps to 1
};

/// Image of Psi_2: (G/G') (x3) -> (G'/gamma_3) (x) G/G'.
PsiImage psi2_image(const PcPresentation& P);
/// Image of Psi_3: (G/Z)^ab (x4) -> (gamma_3/gamma_4) (x) (G/Z)^ab; trivial for class <= 2.
PsiImage psi3_image(const PcPresentation& P);

struct Thm25Check {
  int multiplier_log = 0;
  int derived_log = 0;
  int psi2_log = 0;
  int psi3_log = 0;
  int lhs_log = 0;      // log |G ^ G| |Im Psi_2| |Im Psi_3|
  int middle_log = 0;   // log |M(G/G')| prod_i |gamma_i/gamma_{i+1} (x) G/G'|
  int rhs_log = 0;      // log |M(G/G')| p^{kd}
  bool holds = false;   // lhs <= middle <= rhs
  int margin() const { return rhs_log - lhs_log; }
};

/// Throws InputError for class > 3.
Thm25Check thm25_check(const PcPresentation& P);

}  // namespace pgh
