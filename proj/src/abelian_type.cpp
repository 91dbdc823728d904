#include "pgh/abelian_type.hpp"

#include <algorithm>
#include <functional>

#include "pgh/errors.hpp"
#include "pgh/pc_presentation.hpp"

namespace pgh {

AbelianType::AbelianType(int prime, std::vector<int> exps) : p(prime) {
  for (int e : exps) {
    if (e < 0) throw InputError("negative exponent in abelian type");
    if (e > 0) exponents.push_back(e);
  }
  std::sort(exponents.begin(), exponents.end(), std::greater<>());
}

AbelianType AbelianType::from_invariants(int prime, const std::vector<mpz_class>& invariants) {
  std::vector<int> exps;
  for (mpz_class d : invariants) {
    if (d <= 0) throw ComputationError("nonpositive invariant factor");
    int e = 0;
    while (d % prime == 0) {
      d /= prime;
      ++e;
    }
    if (d != 1)
      throw ComputationError("invariant factor is not a power of " + std::to_string(prime));
    exps.push_back(e);
  }
  return AbelianType(prime, std::move(exps));
}

int AbelianType::log_order() const {
  int s = 0;
  for (int e : exponents) s += e;
  return s;
}

std::vector<std::uint64_t> AbelianType::divisors() const {
  std::vector<std::uint64_t> d;
  for (int e : exponents) d.push_back(ipow(p, e));
  return d;
}

bool AbelianType::is_homocyclic() const {
  return std::all_of(exponents.begin(), exponents.end(),
                     [&](int e) { return e == exponents.front(); });
}

bool AbelianType::is_elementary() const {
  return std::all_of(exponents.begin(), exponents.end(), [](int e) { return e == 1; });
}

std::string AbelianType::to_string() const {
  std::string s = "[";
  bool first = true;
  for (auto d : divisors()) {
    if (!first) s += ",";
    s += std::to_string(d);
    first = false;
  }
  return s + "]";
}

}  // namespace pgh
