#pragma once

// Collection from the left for weighted pc presentations with prime relative
// orders, optionally carrying a vector of central "tail" generators of
// infinite order. The base group arithmetic uses zero tails; the covering
// group computation in homology.cpp uses one tail per defining relation.

#include <utility>
#include <vector>

namespace pgh::detail {

/// Sparse normal-form word: (generator, exponent) pairs, increasing generator.
using SparseWord = std::vector<std::pair<int, int>>;

struct Rules {
  int p = 2;
  int n = 0;
  int tails = 0;
  std::vector<SparseWord> power;                 // g_i^p
  std::vector<int> power_tail;                   // -1 when untailed
  std::vector<std::vector<SparseWord>> comm;     // comm[j][i] = [g_j, g_i], i < j
  std::vector<std::vector<int>> comm_tail;

  static Rules trivial(int p, int n);
};

struct State {
  std::vector<int> e;
  std::vector<long long> t;

  static State identity(const Rules& r) {
    return State{std::vector<int>(r.n, 0), std::vector<long long>(r.tails, 0)};
  }
};

void mul_gen(const Rules& r, State& s, int i);
void mul_word(const Rules& r, State& s, const SparseWord& w);
/// Right-multiply by the element whose normal form (and tails) is y.
void mul_state(const Rules& r, State& s, const State& y);
State invert(const Rules& r, const State& x);

/// One consistency test: two collection routes of the same word.
struct ConsistencyTest {
  int k, j, i;  // generator indices; -1 where unused
  int kind;     // 0: (g_k g_j) g_i, 1: g_j^p g_i, 2: g_j g_i^p, 3: g_i^p g_i
  State lhs;
  State rhs;
};

/// Runs the full battery of associativity and power-overlap tests in a fixed
/// order (kind-major, then lexicographic in the indices).
std::vector<ConsistencyTest> consistency_tests(const Rules& r);

}  // namespace pgh::detail
