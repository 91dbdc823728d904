#include "pgh/catalog.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include <json.hpp>

#include "pgh/errors.hpp"
#include "pgh/group.hpp"

namespace pgh {

using detail::SparseWord;
using json = nlohmann::ordered_json;

namespace {

constexpr std::array<std::pair<Family, const char*>, 13> kFamilyNames{{
    {Family::HOMOCYCLIC, "HOMOCYCLIC"},
    {Family::ABELIAN, "ABELIAN"},
    {Family::MIN_NONAB_A, "MIN_NONAB_A"},
    {Family::MIN_NONAB_B, "MIN_NONAB_B"},
    {Family::Q8, "Q8"},
    {Family::E1, "E1"},
    {Family::G1, "G1"},
    {Family::G2, "G2"},
    {Family::G3, "G3"},
    {Family::G4, "G4"},
    {Family::G5, "G5"},
    {Family::G6, "G6"},
    {Family::SMALL, "SMALL"},
}};

void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

// c^v where c_1..c_r (indices idx, increasing) are c, c^p, ..., c^{p^{r-1}}.
SparseWord chain_word(const std::vector<int>& idx, long long v, int p) {
  long long mod = 1;
  for (std::size_t i = 0; i < idx.size(); ++i) mod *= p;
  v %= mod;
  if (v < 0) v += mod;
  SparseWord w;
  for (int g : idx) {
    if (v % p != 0) w.emplace_back(g, static_cast<int>(v % p));
    v /= p;
  }
  return w;
}

void chain_powers(PcPresentation::Builder& b, const std::vector<int>& idx) {
  for (std::size_t i = 0; i + 1 < idx.size(); ++i) b.power(idx[i], SparseWord{{idx[i + 1], 1}});
}

void set_comm(PcPresentation::Builder& b, int x, int y, const SparseWord& xy,
              const SparseWord& yx) {
  // [x,y] given as xy, [y,x] as yx; store whichever has the larger index first.
  if (x > y)
    b.comm(x, y, xy);
  else
    b.comm(y, x, yx);
}

PcPresentation abelian(int p, std::vector<int> exps) {
  std::sort(exps.begin(), exps.end(), std::greater<>());
  int n = 0;
  for (int e : exps) {
    require(e >= 1, "abelian factor exponents must be positive");
    n += e;
  }
  PcPresentation::Builder b(p, n);
  int at = 0;
  for (int e : exps) {
    std::vector<int> idx;
    for (int i = 0; i < e; ++i) idx.push_back(at + i);
    chain_powers(b, idx);
    at += e;
  }
  return b.build();
}

// <a, b | a^{p^m}, b^{p^n}, c^{p^r}, [a,b] = c central>, order p^{m+n+r}.
// Generators a, b, a^p, ..., b^p, ..., c, c^p, ...
PcPresentation two_generator_class2(int p, int m, int n, int r) {
  std::vector<int> a{0}, b{1}, c;
  int at = 2;
  for (int s = 1; s < m; ++s) a.push_back(at++);
  for (int t = 1; t < n; ++t) b.push_back(at++);
  for (int u = 0; u < r; ++u) c.push_back(at++);
  PcPresentation::Builder B(p, m + n + r);
  chain_powers(B, a);
  chain_powers(B, b);
  chain_powers(B, c);
  long long pe = 1;
  for (int e = 0; e < r; ++e, pe *= p)
    for (int s = 0; s < m; ++s) {
      const int t = e - s;
      if (t < 0 || t >= n) continue;
      // [a^{p^s}, b^{p^t}] = c^{p^{s+t}}
      set_comm(B, a[s], b[t], chain_word(c, pe, p), chain_word(c, -pe, p));
    }
  B.label(a[0], "a");
  B.label(b[0], "b");
  if (r > 0) B.label(c[0], "c");
  return B.build();
}

PcPresentation min_nonabelian_a(int p, int m, int n) {
  std::vector<int> a{0}, b{1};
  int at = 2;
  for (int s = 1; s < m; ++s) a.push_back(at++);
  for (int t = 1; t < n; ++t) b.push_back(at++);
  PcPresentation::Builder B(p, m + n);
  chain_powers(B, a);
  chain_powers(B, b);
  // [a,b] = a^{p^{m-1}}, so [b,a] = a^{-p^{m-1}}.
  B.comm(b[0], a[0], SparseWord{{a.back(), p - 1}});
  B.label(a[0], "a");
  B.label(b[0], "b");
  return B.build();
}

PcPresentation quaternion8() {
  PcPresentation::Builder B(2, 3);
  B.power(0, SparseWord{{2, 1}});
  B.power(1, SparseWord{{2, 1}});
  B.comm(1, 0, SparseWord{{2, 1}});
  B.label(0, "i");
  B.label(1, "j");
  B.label(2, "z");
  return B.build();
}

PcPresentation g3(int p) {
  // x1, x2, x3, c1, c2 with [x1,x2] = c1, [x1,x3] = c2.
  PcPresentation::Builder B(p, 5);
  B.comm(1, 0, SparseWord{{3, p - 1}});
  B.comm(2, 0, SparseWord{{4, p - 1}});
  const char* names[] = {"x1", "x2", "x3", "c1", "c2"};
  for (int i = 0; i < 5; ++i) B.label(i, names[i]);
  return B.build();
}

PcPresentation g5_or_g6(int p, bool with_z) {
  // x1, x2, x3, y1, y2, y3 [, z]
  // [x1,x2] = y3, [x2,x3] = y1, [x3,x1] = y2, and for G6 [y_i, x_i] = z.
  const int n = with_z ? 7 : 6;
  PcPresentation::Builder B(p, n);
  B.comm(1, 0, SparseWord{{5, p - 1}});
  B.comm(2, 1, SparseWord{{3, p - 1}});
  B.comm(2, 0, SparseWord{{4, 1}});
  if (with_z)
    for (int i = 0; i < 3; ++i) B.comm(3 + i, i, SparseWord{{6, 1}});
  const char* names[] = {"x1", "x2", "x3", "y1", "y2", "y3", "z"};
  for (int i = 0; i < n; ++i) B.label(i, names[i]);
  return B.build();
}

PcPresentation from_rules(int p, int n, const std::vector<std::pair<int, SparseWord>>& powers,
                          const std::vector<std::tuple<int, int, SparseWord>>& comms) {
  PcPresentation::Builder B(p, n);
  for (const auto& [i, w] : powers) B.power(i, w);
  for (const auto& [j, i, w] : comms) B.comm(j, i, w);
  return B.build();
}

int quadratic_nonresidue(int p) {
  for (int v = 2; v < p; ++v) {
    bool residue = false;
    for (int x = 1; x < p && !residue; ++x) residue = (x * x) % p == v;
    if (!residue) return v;
  }
  throw InputError("no quadratic nonresidue");
}

std::vector<CatalogEntry> abelian_entries(int p, int order_exp) {
  // Partitions of order_exp in decreasing lexicographic order.
  std::vector<std::vector<int>> parts;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int left, int max) -> void {
    if (left == 0) {
      parts.push_back(cur);
      return;
    }
    for (int e = std::min(left, max); e >= 1; --e) {
      cur.push_back(e);
      self(self, left - e, e);
      cur.pop_back();
    }
  };
  rec(rec, order_exp, order_exp);
  std::vector<CatalogEntry> out;
  for (const auto& part : parts) {
    std::string name;
    for (int e : part) name += (name.empty() ? "Z" : "xZ") + std::to_string(ipow(p, e));
    out.push_back({name, abelian(p, part)});
  }
  return out;
}

}  // namespace

std::string family_name(Family f) {
  for (const auto& [g, s] : kFamilyNames)
    if (g == f) return s;
  return "?";
}

Family parse_family(std::string_view name) {
  for (const auto& [g, s] : kFamilyNames)
    if (name == s) return g;
  throw InputError("unknown family '" + std::string(name) + "'");
}

std::string tag(const FamilySpec& s) {
  std::ostringstream o;
  o << family_name(s.family) << "(p=" << s.p;
  switch (s.family) {
    case Family::HOMOCYCLIC: o << ",m=" << s.m << ",d=" << s.d; break;
    case Family::ABELIAN:
      o << ",exponents=";
      for (std::size_t i = 0; i < s.exponents.size(); ++i) o << (i ? "." : "") << s.exponents[i];
      break;
    case Family::MIN_NONAB_A:
    case Family::MIN_NONAB_B: o << ",m=" << s.m << ",n=" << s.n; break;
    case Family::G1: o << ",n=" << s.n; break;
    case Family::G2:
    case Family::G4: o << ",m=" << s.m; break;
    case Family::SMALL: o << ",order_exp=" << s.order_exp << ",index=" << s.index; break;
    default: break;
  }
  o << ")";
  return o.str();
}

PcPresentation make(const FamilySpec& s) {
  const int p = s.p;
  require(is_prime(p), "p = " + std::to_string(p) + " is not prime");
  switch (s.family) {
    case Family::HOMOCYCLIC:
      require(s.m >= 1 && s.d >= 0, "HOMOCYCLIC requires m >= 1 and d >= 0");
      return abelian(p, std::vector<int>(s.d, s.m));
    case Family::ABELIAN: return abelian(p, s.exponents);
    case Family::MIN_NONAB_A:
      require(s.m >= 2 && s.n >= 1, "MIN_NONAB_A requires m >= 2 and n >= 1");
      return min_nonabelian_a(p, s.m, s.n);
    case Family::MIN_NONAB_B:
      require(s.m >= 1 && s.n >= 1, "MIN_NONAB_B requires m >= 1 and n >= 1");
      require(p != 2 || s.m + s.n > 2, "MIN_NONAB_B with p = 2 requires m + n > 2");
      return two_generator_class2(p, s.m, s.n, 1);
    case Family::Q8:
      require(p == 2, "Q8 requires p = 2");
      return quaternion8();
    case Family::E1:
      require(p != 2, "E1 requires p != 2");
      return two_generator_class2(p, 1, 1, 1);
    case Family::G1: {
      require(p != 2, "G1 requires p != 2");
      require(s.n >= 3, "G1 requires n >= 3");
      const PcPresentation e1 = two_generator_class2(p, 1, 1, 1);
      if (s.n == 3) return e1;
      return direct_product(e1, abelian(p, std::vector<int>(s.n - 3, 1)));
    }
    case Family::G2:
      require(s.m >= 2, "G2 requires m >= 2");
      return two_generator_class2(p, s.m, s.m, 1);
    case Family::G3:
      require(p != 2, "G3 requires p != 2");
      return g3(p);
    case Family::G4:
      require(s.m >= 2, "G4 requires m >= 2");
      require(p != 2, "G4 requires p != 2");
      return two_generator_class2(p, s.m, s.m, s.m);
    case Family::G5:
      require(p != 2, "G5 requires p != 2");
      return g5_or_g6(p, false);
    case Family::G6:
      require(p == 3, "G6 requires p = 3");
      return g5_or_g6(p, true);
    case Family::SMALL: {
      auto table = small_group_table(p, s.order_exp);
      require(s.index >= 1 && s.index <= static_cast<int>(table.size()),
              "SMALL index out of range 1.." + std::to_string(table.size()));
      return table[s.index - 1].group;
    }
  }
  throw InputError("unknown family");
}

std::vector<CatalogEntry> small_group_table(int p, int order_exp) {
  require(p == 2 || p == 3 || p == 5, "small group tables exist for p in {2, 3, 5}");
  require(order_exp == 3 || order_exp == 4, "small group tables cover orders p^3 and p^4");
  std::vector<CatalogEntry> out = abelian_entries(p, order_exp);
  const std::string P = std::to_string(p);
  auto spec = [&](Family f, int m, int n) {
    FamilySpec s;
    s.family = f;
    s.p = p;
    s.m = m;
    s.n = n;
    return make(s);
  };
  const PcPresentation Zp = abelian(p, {1});

  if (order_exp == 3) {
    if (p == 2) {
      out.push_back({"D8", spec(Family::MIN_NONAB_A, 2, 1)});
      out.push_back({"Q8", quaternion8()});
    } else {
      out.push_back({"E1(" + P + ")", spec(Family::E1, 0, 0)});
      out.push_back({"M(" + P + "^3)", spec(Family::MIN_NONAB_A, 2, 1)});
    }
    return out;
  }

  out.push_back({"M(" + P + "^4)", spec(Family::MIN_NONAB_A, 3, 1)});
  out.push_back({"MinA(" + P + ",2,2)", spec(Family::MIN_NONAB_A, 2, 2)});
  out.push_back({"MinB(" + P + ",2,1)", spec(Family::MIN_NONAB_B, 2, 1)});
  if (p == 2) {
    out.push_back({"D8xZ2", direct_product(spec(Family::MIN_NONAB_A, 2, 1), Zp)});
    out.push_back({"Q8xZ2", direct_product(quaternion8(), Zp)});
    // b, c, a, a^2 with a central of order 4 and [c,b] = a^2.
    out.push_back({"Pauli", from_rules(2, 4, {{2, {{3, 1}}}}, {{1, 0, {{3, 1}}}})});
    // b, a, a^2, a^4 with a of order 8.
    out.push_back({"D16", from_rules(2, 4, {{1, {{2, 1}}}, {2, {{3, 1}}}},
                                     {{1, 0, {{2, 1}, {3, 1}}}, {2, 0, {{3, 1}}}})});
    out.push_back({"SD16", from_rules(2, 4, {{1, {{2, 1}}}, {2, {{3, 1}}}},
                                      {{1, 0, {{2, 1}}}, {2, 0, {{3, 1}}}})});
    out.push_back({"Q16", from_rules(2, 4, {{0, {{3, 1}}}, {1, {{2, 1}}}, {2, {{3, 1}}}},
                                     {{1, 0, {{2, 1}, {3, 1}}}, {2, 0, {{3, 1}}}})});
  } else {
    out.push_back({"M(" + P + "^3)xZ" + P, direct_product(spec(Family::MIN_NONAB_A, 2, 1), Zp)});
    out.push_back({"E1(" + P + ")xZ" + P, direct_product(spec(Family::E1, 0, 0), Zp)});
    // b, c, a, a^p with a central of order p^2 and [c,b] = a^{-p}.
    out.push_back({"E1*Z" + std::to_string(p * p),
                   from_rules(p, 4, {{2, {{3, 1}}}}, {{1, 0, {{3, p - 1}}}})});
    // Maximal class: [g2,g1] = g3, [g3,g1] = g4, plus one of four choices of
    // extra rules. The p = 3 choices differ because the p-th power map is not
    // a homomorphism in class 3 there.
    const std::vector<std::tuple<int, int, SparseWord>> mc{{1, 0, {{2, 1}}}, {2, 0, {{3, 1}}}};
    auto with = [&](std::vector<std::tuple<int, int, SparseWord>> extra) {
      extra.insert(extra.begin(), mc.begin(), mc.end());
      return extra;
    };
    const std::string name = "MaxClass(" + P + ",";
    out.push_back({name + "1)", from_rules(p, 4, {}, mc)});
    if (p == 3) {
      out.push_back({name + "2)", from_rules(p, 4, {}, with({{2, 1, {{3, 1}}}}))});
      out.push_back({name + "3)", from_rules(p, 4, {{1, {{3, 1}}}}, mc)});
      out.push_back({name + "4)", from_rules(p, 4, {{0, {{3, 1}}}, {1, {{3, 1}}}},
                                             with({{2, 1, {{3, 1}}}}))});
    } else {
      out.push_back({name + "2)", from_rules(p, 4, {{0, {{3, 1}}}}, mc)});
      out.push_back({name + "3)", from_rules(p, 4, {{1, {{3, 1}}}}, mc)});
      out.push_back({name + "4)", from_rules(p, 4, {{1, {{3, quadratic_nonresidue(p)}}}}, mc)});
    }
  }
  return out;
}

// ---------------------------------------------------------------- JSON

namespace {

json word_json(const Element& w) {
  json a = json::array();
  for (int i = 0; i < w.size(); ++i)
    if (w[i] != 0) a.push_back(json::array({i + 1, w[i]}));
  return a;
}

int parse_index(const std::string& s, const std::string& field) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw InputError(field + ": bad generator index '" + s + "'");
  return v;
}

SparseWord parse_word(const json& j, const std::string& field) {
  if (!j.is_array()) throw InputError(field + ": word must be an array of [index, exponent] pairs");
  SparseWord w;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_integer() ||
        !pair[1].is_number_integer())
      throw InputError(field + ": each letter must be [index, exponent] with integers");
    w.emplace_back(pair[0].get<int>() - 1, pair[1].get<int>());
  }
  return w;
}

int get_int(const json& j, const char* key, bool required, int fallback = 0) {
  if (!j.contains(key)) {
    if (required) throw InputError(std::string("missing field '") + key + "'");
    return fallback;
  }
  if (!j[key].is_number_integer()) throw InputError(std::string("field '") + key + "' must be an integer");
  return j[key].get<int>();
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

FamilySpec family_spec_from(const json& j) {
  static const char* kAllowed[] = {"family", "p", "m", "n", "d", "exponents", "order_exp", "index"};
  for (const auto& [key, _] : j.items())
    if (std::find(std::begin(kAllowed), std::end(kAllowed), key) == std::end(kAllowed))
      throw InputError("unknown field '" + key + "' in family shorthand");
  if (!j["family"].is_string()) throw InputError("field 'family' must be a string");
  FamilySpec s;
  s.family = parse_family(j["family"].get<std::string>());
  s.p = get_int(j, "p", true);
  s.m = get_int(j, "m", false);
  s.n = get_int(j, "n", false);
  s.d = get_int(j, "d", false);
  s.order_exp = get_int(j, "order_exp", false);
  s.index = get_int(j, "index", false);
  if (j.contains("exponents")) {
    if (!j["exponents"].is_array()) throw InputError("field 'exponents' must be an array");
    for (const auto& e : j["exponents"]) {
      if (!e.is_number_integer()) throw InputError("field 'exponents' must hold integers");
      s.exponents.push_back(e.get<int>());
    }
  }
  return s;
}

}  // namespace

std::string serialize(const PcPresentation& P) {
  // One rule per line, words inline; still plain JSON.
  std::vector<std::pair<std::string, json>> labels, power, comm;
  for (const auto& [i, s] : P.labels()) labels.emplace_back(std::to_string(i + 1), s);
  for (int i = 0; i < P.ngens(); ++i)
    if (!P.power_rule(i).is_identity())
      power.emplace_back(std::to_string(i + 1), word_json(P.power_rule(i)));
  for (int j = 0; j < P.ngens(); ++j)
    for (int i = 0; i < j; ++i)
      if (!P.comm_rule(j, i).is_identity())
        comm.emplace_back(std::to_string(j + 1) + "," + std::to_string(i + 1),
                          word_json(P.comm_rule(j, i)));
  auto block = [](const std::vector<std::pair<std::string, json>>& entries) {
    if (entries.empty()) return std::string("{}");
    std::string s = "{\n";
    for (std::size_t k = 0; k < entries.size(); ++k)
      s += "    " + json(entries[k].first).dump() + ": " + entries[k].second.dump() +
           (k + 1 < entries.size() ? ",\n" : "\n");
    return s + "  }";
  };
  std::string out = "{\n";
  out += "  \"p\": " + std::to_string(P.prime()) + ",\n";
  out += "  \"ngens\": " + std::to_string(P.ngens()) + ",\n";
  out += "  \"labels\": " + block(labels) + ",\n";
  out += "  \"power\": " + block(power) + ",\n";
  out += "  \"comm\": " + block(comm) + "\n}\n";
  return out;
}

FamilySpec parse_family_spec(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object() || !j.contains("family"))
    throw InputError("expected a family shorthand object with a 'family' field");
  return family_spec_from(j);
}

PcPresentation parse(std::string_view text) {
  const json j = parse_json(text);
  if (!j.is_object()) throw InputError("top level must be a JSON object");
  if (j.contains("family")) return make(family_spec_from(j));

  for (const auto& [key, _] : j.items())
    if (key != "p" && key != "ngens" && key != "labels" && key != "power" && key != "comm")
      throw InputError("unknown field '" + key + "'");
  const int p = get_int(j, "p", true);
  const int n = get_int(j, "ngens", true);
  PcPresentation::Builder B(p, n);

  auto check_index = [&](int i, const std::string& field) {
    if (i < 1 || i > n)
      throw InputError(field + ": generator index " + std::to_string(i) + " out of range 1.." +
                       std::to_string(n));
  };

  if (j.contains("labels")) {
    if (!j["labels"].is_object()) throw InputError("field 'labels' must be an object");
    for (const auto& [key, v] : j["labels"].items()) {
      const std::string field = "labels[\"" + key + "\"]";
      const int i = parse_index(key, field);
      check_index(i, field);
      if (!v.is_string()) throw InputError(field + ": label must be a string");
      B.label(i - 1, v.get<std::string>());
    }
  }
  if (j.contains("power")) {
    if (!j["power"].is_object()) throw InputError("field 'power' must be an object");
    for (const auto& [key, v] : j["power"].items()) {
      const std::string field = "power[\"" + key + "\"]";
      const int i = parse_index(key, field);
      check_index(i, field);
      try {
        B.power(i - 1, parse_word(v, field));
      } catch (const InputError& e) {
        throw InputError(field + ": " + e.what());
      }
    }
  }
  if (j.contains("comm")) {
    if (!j["comm"].is_object()) throw InputError("field 'comm' must be an object");
    for (const auto& [key, v] : j["comm"].items()) {
      const std::string field = "comm[\"" + key + "\"]";
      const auto comma = key.find(',');
      if (comma == std::string::npos) throw InputError(field + ": key must be \"j,i\"");
      const int jj = parse_index(key.substr(0, comma), field);
      const int i = parse_index(key.substr(comma + 1), field);
      check_index(jj, field);
      check_index(i, field);
      if (!(i < jj)) throw InputError(field + ": commutator key requires j > i");
      try {
        B.comm(jj - 1, i - 1, parse_word(v, field));
      } catch (const InputError& e) {
        throw InputError(field + ": " + e.what());
      }
    }
  }
  return B.build();
}

}  // namespace pgh
