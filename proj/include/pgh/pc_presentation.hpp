#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pgh/collector.hpp"

namespace pgh {

/// Normal form g_1^{e_1} ... g_N^{e_N} of a group element, 0 <= e_i < p.
struct Element {
  std::vector<int> exponents;

  Element() = default;
  explicit Element(std::vector<int> e) : exponents(std::move(e)) {}
  static Element identity(int ngens) { return Element(std::vector<int>(ngens, 0)); }

  int size() const { return static_cast<int>(exponents.size()); }
  int operator[](int i) const { return exponents[i]; }
  bool is_identity() const;
  /// Index of the first nonzero exponent, or size() for the identity.
  int lead() const;

  friend auto operator<=>(const Element&, const Element&) = default;
};

/// One letter of a word over the generators and their inverses.
struct Letter {
  int gen;
  int exp;
};

/// Consistent polycyclic presentation of a finite p-group in which every
/// relative order is p and every rule is a word in strictly later generators.
/// Generators are indexed 0..N-1 internally; serialization uses 1-based labels.
class PcPresentation {
 public:
  class Builder;

  /// Trivial group (no generators).
  explicit PcPresentation(int p = 2);

  int prime() const { return rules_.p; }
  int ngens() const { return rules_.n; }
  /// |G| = p^ngens; throws InputError if it does not fit in 64 bits.
  std::uint64_t order() const;

  const Element& power_rule(int i) const { return power_[i]; }
  /// [g_j, g_i] for j > i.
  const Element& comm_rule(int j, int i) const { return comm_[j][i]; }

  const std::map<int, std::string>& labels() const { return labels_; }
  std::optional<int> find_label(std::string_view name) const;

  Element identity() const { return Element::identity(ngens()); }
  Element generator(int i) const;

  /// Normal form of an arbitrary word; negative exponents denote inverses.
  Element collect(std::span<const Letter> word) const;
  Element multiply(const Element& x, const Element& y) const;
  Element inverse(const Element& x) const;
  /// x^e for any integer e.
  Element power(const Element& x, long long e) const;
  /// [x, y] = x^-1 y^-1 x y.
  Element commutator(const Element& x, const Element& y) const;
  /// x^y = y^-1 x y.
  Element conjugate(const Element& x, const Element& y) const;
  /// log_p of the order of x.
  int order_log(const Element& x) const;

  const detail::Rules& rules() const { return rules_; }

  /// Field-for-field equality (prime, rules, labels).
  friend bool operator==(const PcPresentation& a, const PcPresentation& b);

 private:
  friend class Builder;

  detail::Rules rules_;
  std::vector<Element> power_;
  std::vector<std::vector<Element>> comm_;
  std::map<int, std::string> labels_;
  std::vector<Element> gen_inverse_;
};

/// Mutable staging area for a presentation. Setters enforce the weighting
/// invariant immediately; build() additionally runs the consistency check.
class PcPresentation::Builder {
 public:
  Builder(int p, int ngens);

  int prime() const { return p_; }
  int ngens() const { return n_; }

  Builder& power(int i, const Element& word);
  Builder& power(int i, const detail::SparseWord& word);
  Builder& comm(int j, int i, const Element& word);
  Builder& comm(int j, int i, const detail::SparseWord& word);
  Builder& label(int i, std::string name);

  /// Throws InputError if the presentation is inconsistent.
  PcPresentation build() const;
  /// Skips the consistency check. Only for presentations known to be
  /// consistent by construction, or for exercising is_consistent.
  PcPresentation build_unchecked() const;

 private:
  Element checked_word(int owner, const detail::SparseWord& word, const char* what) const;

  int p_;
  int n_;
  std::vector<Element> power_;
  std::vector<std::vector<Element>> comm_;
  std::map<int, std::string> labels_;
};

bool is_consistent(const PcPresentation& P);

/// Element of G given as sparse (generator, exponent) pairs, collected.
Element make_element(const PcPresentation& P, const detail::SparseWord& word);

bool is_prime(int p);
/// p^e as a 64-bit integer; throws InputError on overflow.
std::uint64_t ipow(std::uint64_t p, int e);

}  // namespace pgh
