#include "pgh/collector.hpp"

namespace pgh::detail {

Rules Rules::trivial(int p, int n) {
  Rules r;
  r.p = p;
  r.n = n;
  r.power.assign(n, {});
  r.power_tail.assign(n, -1);
  r.comm.resize(n);
  r.comm_tail.resize(n);
  for (int j = 0; j < n; ++j) {
    r.comm[j].assign(j, {});
    r.comm_tail[j].assign(j, -1);
  }
  return r;
}

namespace {

inline void add_tail(State& s, int tail) {
  if (tail >= 0) s.t[tail] += 1;
}

}  // namespace

void mul_gen(const Rules& r, State& s, int i) {
  // x * g_i = prefix * g_i * suffix^{g_i}, where suffix holds the generators
  // of index > i; conjugation by g_i sends g_j to g_j [g_j, g_i].
  SparseWord suffix;
  for (int j = i + 1; j < r.n; ++j) {
    if (s.e[j] != 0) {
      suffix.emplace_back(j, s.e[j]);
      s.e[j] = 0;
    }
  }
  if (++s.e[i] == r.p) {
    s.e[i] = 0;
    add_tail(s, r.power_tail[i]);
    mul_word(r, s, r.power[i]);
  }
  for (const auto& [j, ej] : suffix) {
    const SparseWord& w = r.comm[j][i];
    const int tail = r.comm_tail[j][i];
    for (int rep = 0; rep < ej; ++rep) {
      mul_gen(r, s, j);
      mul_word(r, s, w);
      add_tail(s, tail);
    }
  }
}

void mul_word(const Rules& r, State& s, const SparseWord& w) {
  for (const auto& [g, e] : w)
    for (int rep = 0; rep < e; ++rep) mul_gen(r, s, g);
}

void mul_state(const Rules& r, State& s, const State& y) {
  for (int g = 0; g < r.n; ++g)
    for (int rep = 0; rep < y.e[g]; ++rep) mul_gen(r, s, g);
  for (int k = 0; k < r.tails; ++k) s.t[k] += y.t[k];
}

State invert(const Rules& r, const State& x) {
  // Right-multiply x by generators until it becomes central; the exponents
  // used form the normal form of the inverse (up to tails).
  State s{x.e, std::vector<long long>(r.tails, 0)};
  State inv = State::identity(r);
  for (int g = 0; g < r.n; ++g) {
    const int k = (r.p - s.e[g]) % r.p;
    for (int rep = 0; rep < k; ++rep) mul_gen(r, s, g);
    inv.e[g] = k;
  }
  for (int k = 0; k < r.tails; ++k) inv.t[k] = -s.t[k] - x.t[k];
  return inv;
}

namespace {

State gens_product(const Rules& r, std::initializer_list<int> gens) {
  State s = State::identity(r);
  for (int g : gens) mul_gen(r, s, g);
  return s;
}

State gen_power(const Rules& r, int g, int times) {
  State s = State::identity(r);
  for (int rep = 0; rep < times; ++rep) mul_gen(r, s, g);
  return s;
}

}  // namespace

std::vector<ConsistencyTest> consistency_tests(const Rules& r) {
  std::vector<ConsistencyTest> out;
  const int n = r.n;
  const int p = r.p;

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        // (g_k g_j) g_i  versus  g_k (g_j g_i)
        State lhs = gens_product(r, {k, j});
        mul_gen(r, lhs, i);
        State rhs = gens_product(r, {k});
        mul_state(r, rhs, gens_product(r, {j, i}));
        out.push_back({k, j, i, 0, std::move(lhs), std::move(rhs)});
      }

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      // (g_j^p) g_i  versus  g_j^{p-1} (g_j g_i)
      State lhs = gen_power(r, j, p);
      mul_gen(r, lhs, i);
      State rhs = gen_power(r, j, p - 1);
      mul_state(r, rhs, gens_product(r, {j, i}));
      out.push_back({-1, j, i, 1, std::move(lhs), std::move(rhs)});
    }

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      // g_j (g_i^p)  versus  (g_j g_i) g_i^{p-1}
      State lhs = gens_product(r, {j});
      mul_state(r, lhs, gen_power(r, i, p));
      State rhs = gens_product(r, {j});
      for (int rep = 0; rep < p; ++rep) mul_gen(r, rhs, i);
      out.push_back({-1, j, i, 2, std::move(lhs), std::move(rhs)});
    }

  for (int i = 0; i < n; ++i) {
    // (g_i^p) g_i  versus  g_i (g_i^p)
    State lhs = gen_power(r, i, p);
    mul_gen(r, lhs, i);
    State rhs = gens_product(r, {i});
    mul_state(r, rhs, gen_power(r, i, p));
    out.push_back({-1, -1, i, 3, std::move(lhs), std::move(rhs)});
  }
  return out;
}

}  // namespace pgh::detail
