#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace pgh {

/// Finite abelian p-group Z_{p^a_1} + ... + Z_{p^a_k} with a_1 >= ... >= a_k >= 1.
/// The empty list is the trivial group.
struct AbelianType {
  int p = 2;
  std::vector<int> exponents;

  AbelianType() = default;
  /// Sorts and drops zero exponents.
  AbelianType(int prime, std::vector<int> exps);
  /// Invariant factors from a Smith form; each must be 1 or a power of p.
  static AbelianType from_invariants(int prime, const std::vector<mpz_class>& invariants);

  int rank() const { return static_cast<int>(exponents.size()); }
  int log_order() const;
  std::vector<std::uint64_t> divisors() const;
  /// log_p of the exponent (0 for the trivial group).
  int exponent_log() const { return exponents.empty() ? 0 : exponents.front(); }
  bool is_trivial() const { return exponents.empty(); }
  bool is_homocyclic() const;
  bool is_elementary() const;
  /// "[9,3,3]"; "[]" for the trivial group.
  std::string to_string() const;

  friend bool operator==(const AbelianType&, const AbelianType&) = default;
  friend auto operator<=>(const AbelianType&, const AbelianType&) = default;
};

}  // namespace pgh
