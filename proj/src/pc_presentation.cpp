#include "pgh/pc_presentation.hpp"

#include <limits>
#include <sstream>

#include "pgh/errors.hpp"

namespace pgh {

bool Element::is_identity() const {
  for (int e : exponents)
    if (e != 0) return false;
  return true;
}

int Element::lead() const {
  for (int i = 0; i < size(); ++i)
    if (exponents[i] != 0) return i;
  return size();
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t ipow(std::uint64_t p, int e) {
  std::uint64_t r = 1;
  for (int k = 0; k < e; ++k) {
    if (r > std::numeric_limits<std::uint64_t>::max() / p)
      throw InputError("order p^" + std::to_string(e) + " exceeds 64 bits");
    r *= p;
  }
  return r;
}

namespace {

detail::SparseWord to_sparse(const Element& x) {
  detail::SparseWord w;
  for (int i = 0; i < x.size(); ++i)
    if (x[i] != 0) w.emplace_back(i, x[i]);
  return w;
}

detail::State as_state(const detail::Rules& r, const Element& x) {
  return detail::State{x.exponents, std::vector<long long>(r.tails, 0)};
}

}  // namespace

// ---------------------------------------------------------------- Builder

PcPresentation::Builder::Builder(int p, int ngens) : p_(p), n_(ngens) {
  if (!is_prime(p)) throw InputError("prime p = " + std::to_string(p) + " is not prime");
  if (ngens < 0) throw InputError("ngens must be nonnegative");
  power_.assign(n_, Element::identity(n_));
  comm_.resize(n_);
  for (int j = 0; j < n_; ++j) comm_[j].assign(j, Element::identity(n_));
}

Element PcPresentation::Builder::checked_word(int owner, const detail::SparseWord& word,
                                              const char* what) const {
  Element e = Element::identity(n_);
  int last = -1;
  for (const auto& [g, x] : word) {
    if (g < 0 || g >= n_) {
      std::ostringstream msg;
      msg << what << " rule of generator " << owner + 1 << ": generator index " << g + 1
          << " out of range 1.." << n_;
      throw InputError(msg.str());
    }
    if (g <= owner) {
      std::ostringstream msg;
      msg << what << " rule of generator " << owner + 1 << " uses generator " << g + 1
          << "; weighting invariant requires indices > " << owner + 1;
      throw InputError(msg.str());
    }
    if (g <= last) {
      std::ostringstream msg;
      msg << what << " rule of generator " << owner + 1
          << ": word indices must be strictly increasing";
      throw InputError(msg.str());
    }
    if (x < 0 || x >= p_) {
      std::ostringstream msg;
      msg << what << " rule of generator " << owner + 1 << ": exponent " << x
          << " outside 0.." << p_ - 1;
      throw InputError(msg.str());
    }
    e.exponents[g] = x;
    last = g;
  }
  return e;
}

PcPresentation::Builder& PcPresentation::Builder::power(int i, const detail::SparseWord& word) {
  if (i < 0 || i >= n_) throw InputError("power rule index out of range");
  power_[i] = checked_word(i, word, "power");
  return *this;
}

PcPresentation::Builder& PcPresentation::Builder::power(int i, const Element& word) {
  if (word.size() != n_) throw InputError("power rule word has wrong length");
  return power(i, to_sparse(word));
}

PcPresentation::Builder& PcPresentation::Builder::comm(int j, int i,
                                                       const detail::SparseWord& word) {
  if (i < 0 || j >= n_ || i >= j)
    throw InputError("commutator rule [g_j, g_i] requires 1 <= i < j <= ngens");
  comm_[j][i] = checked_word(j, word, "commutator");
  return *this;
}

PcPresentation::Builder& PcPresentation::Builder::comm(int j, int i, const Element& word) {
  if (word.size() != n_) throw InputError("commutator rule word has wrong length");
  return comm(j, i, to_sparse(word));
}

PcPresentation::Builder& PcPresentation::Builder::label(int i, std::string name) {
  if (i < 0 || i >= n_) throw InputError("label index out of range");
  labels_[i] = std::move(name);
  return *this;
}

PcPresentation PcPresentation::Builder::build_unchecked() const {
  PcPresentation P(p_);
  P.rules_ = detail::Rules::trivial(p_, n_);
  P.power_ = power_;
  P.comm_ = comm_;
  P.labels_ = labels_;
  for (int i = 0; i < n_; ++i) P.rules_.power[i] = to_sparse(power_[i]);
  for (int j = 0; j < n_; ++j)
    for (int i = 0; i < j; ++i) P.rules_.comm[j][i] = to_sparse(comm_[j][i]);
  P.gen_inverse_.clear();
  for (int i = 0; i < n_; ++i) {
    detail::State g = detail::State::identity(P.rules_);
    g.e[i] = 1;
    P.gen_inverse_.emplace_back(detail::invert(P.rules_, g).e);
  }
  return P;
}

PcPresentation PcPresentation::Builder::build() const {
  PcPresentation P = build_unchecked();
  if (!is_consistent(P)) throw InputError("presentation is inconsistent");
  return P;
}

// ---------------------------------------------------------------- PcPresentation

PcPresentation::PcPresentation(int p) : rules_(detail::Rules::trivial(p, 0)) {}

std::uint64_t PcPresentation::order() const { return ipow(prime(), ngens()); }

std::optional<int> PcPresentation::find_label(std::string_view name) const {
  for (const auto& [i, s] : labels_)
    if (s == name) return i;
  return std::nullopt;
}

Element PcPresentation::generator(int i) const {
  if (i < 0 || i >= ngens()) throw InputError("generator index out of range");
  Element g = identity();
  g.exponents[i] = 1;
  return g;
}

Element PcPresentation::collect(std::span<const Letter> word) const {
  detail::State s = detail::State::identity(rules_);
  for (const Letter& l : word) {
    if (l.gen < 0 || l.gen >= ngens())
      throw InputError("generator index " + std::to_string(l.gen + 1) + " out of range");
    if (l.exp >= 0) {
      for (int rep = 0; rep < l.exp; ++rep) detail::mul_gen(rules_, s, l.gen);
    } else {
      const detail::State inv = as_state(rules_, gen_inverse_[l.gen]);
      for (int rep = 0; rep < -l.exp; ++rep) detail::mul_state(rules_, s, inv);
    }
  }
  return Element(std::move(s.e));
}

Element PcPresentation::multiply(const Element& x, const Element& y) const {
  detail::State s = as_state(rules_, x);
  for (int g = 0; g < ngens(); ++g)
    for (int rep = 0; rep < y[g]; ++rep) detail::mul_gen(rules_, s, g);
  return Element(std::move(s.e));
}

Element PcPresentation::inverse(const Element& x) const {
  return Element(detail::invert(rules_, as_state(rules_, x)).e);
}

Element PcPresentation::power(const Element& x, long long e) const {
  Element base = e < 0 ? inverse(x) : x;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  Element result = identity();
  while (k > 0) {
    if (k & 1U) result = multiply(result, base);
    k >>= 1U;
    if (k > 0) base = multiply(base, base);
  }
  return result;
}

Element PcPresentation::commutator(const Element& x, const Element& y) const {
  return multiply(inverse(multiply(y, x)), multiply(x, y));
}

Element PcPresentation::conjugate(const Element& x, const Element& y) const {
  return multiply(multiply(inverse(y), x), y);
}

int PcPresentation::order_log(const Element& x) const {
  int k = 0;
  Element y = x;
  while (!y.is_identity()) {
    y = power(y, prime());
    ++k;
  }
  return k;
}

bool operator==(const PcPresentation& a, const PcPresentation& b) {
  return a.prime() == b.prime() && a.ngens() == b.ngens() && a.power_ == b.power_ &&
         a.comm_ == b.comm_ && a.labels_ == b.labels_;
}

bool is_consistent(const PcPresentation& P) {
  for (const auto& test : detail::consistency_tests(P.rules()))
    if (test.lhs.e != test.rhs.e) return false;
  return true;
}

Element make_element(const PcPresentation& P, const detail::SparseWord& word) {
  std::vector<Letter> letters;
  for (const auto& [g, e] : word) letters.push_back({g, e});
  return P.collect(letters);
}

}  // namespace pgh
