#include "verify.hpp"

#include "extweyl/ext_root.hpp"
#include "extweyl/refl_groups.hpp"
#include "extweyl/weyl.hpp"

#include <array>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace extweyl::cli {

namespace {

using Checks = std::vector<CheckResult>;

std::string set_str(const std::set<std::int64_t>& s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (auto x : s) {
    os << (first ? "" : ",") << x;
    first = false;
  }
  os << "}";
  return os.str();
}

std::vector<RootSystemType> sweep(int cap) {
  std::vector<RootSystemType> out;
  for (int l = 1; l <= cap; ++l) out.push_back({Family::A, l});
  for (int l = 2; l <= cap; ++l) out.push_back({Family::B, l});
  for (int l = 3; l <= cap; ++l) out.push_back({Family::C, l});
  for (int l = 4; l <= cap; ++l) out.push_back({Family::D, l});
  if (cap >= 6) out.push_back({Family::E, 6});
  if (cap >= 4) out.push_back({Family::F, 4});
  if (cap >= 2) out.push_back({Family::G, 2});
  for (int l = 1; l <= cap; ++l) out.push_back({Family::BC, l});
  return out;
}

// ----- tables -----

struct Table1Row {
  RootSystemType type;
  std::int64_t ab, ba;
  std::int64_t rab, rba;  // r_a.b = b + rab a and r_b.a = a + rba b
};

// alpha is the short basis root, beta the other one
const Table1Row kTable1[] = {
    {{Family::A, 2}, -1, -1, 1, 1},
    {{Family::B, 2}, -2, -1, 2, 1},
    {{Family::G, 2}, -3, -1, 3, 1},
};

using PairSets = std::array<std::set<std::int64_t>, 4>;  // sh-sh, sh-lg, lg-sh, lg-lg

PairSets reference_pairings(const RootSystemType& t) {
  using S = std::set<std::int64_t>;
  const S pm1{-1, 1}, pm2{-2, 2}, z1{-1, 0, 1}, z2{-2, 0, 2}, z12{-2, -1, 0, 1, 2}, z3{-3, 0, 3};
  if (t.family == Family::A && t.rank == 1) return {pm2, {}, {}, {}};
  if (t.family == Family::B && t.rank == 2) return {pm1, z2, z2, pm2};
  if (t.family == Family::B) return {z1, z12, z2, z2};
  if (t.family == Family::C) return {z1, z2, z12, z2};
  if (t.family == Family::F) return {z1, z12, z12, z2};
  if (t.family == Family::G) return {z1, z12, z12, z3};
  return {z12, {}, {}, {}};
}

// Coroots of long roots form the short class of the dual system.
PairSets computed_pairings(const FiniteRootSystem& rs) {
  PairSets out;
  const bool laced = rs.type().is_simply_laced();
  for (int a = 0; a < rs.size(); ++a) {
    int x = laced || rs.length(a) == LengthClass::Long ? 0 : 1;
    for (int b = 0; b < rs.size(); ++b) {
      int y = laced || rs.length(b) == LengthClass::Short ? 0 : 1;
      out[2 * x + y].insert(rs.pairing_roots(a, b));
    }
  }
  return out;
}

Checks suite_tables() {
  Checks out;
  for (const auto& row : kTable1) {
    auto rs = FiniteRootSystem::build(row.type);
    int a = rs.basis()[0], b = rs.basis()[1];
    if (rs.length(a) != LengthClass::Short) std::swap(a, b);
    std::int64_t ab = rs.pairing_roots(a, b), ba = rs.pairing_roots(b, a);
    IVec rab = rs.reflect(a, rs.root(b)), rba = rs.reflect(b, rs.root(a));
    bool ok = ab == row.ab && ba == row.ba && rab == IVec(rs.root(b) + row.rab * rs.root(a)) &&
              rba == IVec(rs.root(a) + row.rba * rs.root(b));
    std::ostringstream d;
    d << "<a,b>=" << ab << " <b,a>=" << ba;
    out.push_back({"tables", "coinvariants " + row.type.name(), ok, d.str()});
  }
  const RootSystemType types[] = {{Family::A, 1}, {Family::B, 2}, {Family::B, 3}, {Family::B, 4}, {Family::C, 3},
                                  {Family::C, 4}, {Family::F, 4}, {Family::G, 2}, {Family::A, 2}, {Family::A, 3},
                                  {Family::A, 4}, {Family::D, 4}, {Family::E, 6}};
  const char* cols[] = {"sh,sh", "sh,lg", "lg,sh", "lg,lg"};
  for (const auto& t : types) {
    auto got = computed_pairings(FiniteRootSystem::build(t));
    auto want = reference_pairings(t);
    std::string detail;
    bool ok = true;
    for (int c = 0; c < 4; ++c)
      if (got[c] != want[c]) {
        ok = false;
        detail += std::string(cols[c]) + ": computed " + set_str(got[c]) + ", reference " + set_str(want[c]) + "; ";
      }
    out.push_back({"tables", "pairings " + t.name(), ok, detail});
  }
  return out;
}

// ----- tensor -----

bool l_eff_expected_z2(const RootSystemType& t) {
  return (t.family == Family::A && t.rank == 1) || t.family == Family::B || t.family == Family::BC;
}

Checks suite_tensor(int cap) {
  Checks out;
  for (const auto& t : sweep(cap)) {
    auto rs = FiniteRootSystem::build(t);
    for (auto [l, r] : {std::pair{Side::Root, Side::Root}, std::pair{Side::Root, Side::Coroot}}) {
      std::string got = coinvariants(rs, l, r).describe();
      std::string want = expected_coinvariants(t, l, r);
      out.push_back({"tensor", "coinvariants " + t.name() + " " + to_string(l) + "," + to_string(r), got == want,
                     "computed " + got + ", expected " + want});
    }
    for (auto [l, r] : {std::pair{Side::Root, Side::Root}, std::pair{Side::Root, Side::Coroot},
                        std::pair{Side::Coroot, Side::Coroot}}) {
      auto q = box_quotient(rs, l, r);
      out.push_back({"tensor", "box " + t.name() + " " + to_string(l) + "," + to_string(r),
                     q.group.is_infinite_cyclic(), q.group.describe()});
    }
    if (t.is_reduced() && !t.is_simply_laced()) {
      auto ix = inclusion_indices(rs);
      out.push_back({"tensor", "inclusion indices " + t.name(), ix.index_phi > 0 && ix.index_psi > 0,
                     "phi " + std::to_string(ix.index_phi) + ", psi " + std::to_string(ix.index_psi)});
    }
    auto q = l_eff_quotient(rs);
    bool z2 = l_eff_expected_z2(t);
    bool ok = z2 ? q.group.describe() == "Z2" : q.group.is_trivial();
    if (ok && z2)
      for (int i = 0; i < rs.size(); ++i) {
        int want = (t.family == Family::A || rs.length(i) == LengthClass::Short) ? 1 : 0;
        ok = ok && q.root_images[i].size() == 1 && q.root_images[i][0] == want;
      }
    out.push_back({"tensor", "L/L_eff " + t.name(), ok, q.group.describe()});
  }
  return out;
}

// ----- orbits -----

struct Config {
  std::string name;
  ExtRootSystem ers;
};

std::vector<Config> orbit_configs() {
  std::vector<Config> c;
  auto full = [&](Family f, int l, int n) {
    c.push_back({RootSystemType{f, l}.name() + " n=" + std::to_string(n) + " full", fully_extended({f, l}, n)});
  };
  auto tw = [&](Family f, int l, int n, std::vector<int> g1) {
    std::string s = RootSystemType{f, l}.name() + " n=" + std::to_string(n) + " G1={";
    for (std::size_t i = 0; i < g1.size(); ++i) s += (i ? "," : "") + std::to_string(g1[i]);
    c.push_back({s + "}", twisted({f, l}, n, g1)});
  };
  full(Family::A, 1, 1);
  full(Family::A, 1, 3);
  {
    ExtRootSystem e = fully_extended({Family::A, 1}, 2);
    e.s_sh = SSet::make(2 * IMat::Identity(2, 2), {IVec::Zero(2), IVec::Unit(2, 0), IVec::Unit(2, 1)});
    c.push_back({"A1 n=2 three cosets mod 2", e});
  }
  full(Family::A, 2, 2);
  full(Family::D, 4, 1);
  tw(Family::B, 2, 2, {0});
  tw(Family::B, 2, 2, {});
  tw(Family::B, 2, 3, {0, 1, 2});
  tw(Family::B, 3, 2, {0});
  tw(Family::B, 4, 2, {1});
  tw(Family::C, 3, 2, {0});
  tw(Family::C, 4, 1, {0});
  tw(Family::F, 4, 2, {0});
  tw(Family::G, 2, 2, {1});
  full(Family::G, 2, 1);
  return c;
}

CheckResult compare_orbits(const std::string& suite, const Config& cfg) {
  auto part = orbit_bruteforce(cfg.ers, 2 * cfg.ers.modulus());
  std::map<int, OrbitClass> comp_class;
  std::map<OrbitClass, int> class_comp;
  for (std::size_t e = 0; e < part.elements.size(); ++e) {
    const auto& [h, beta] = part.elements[e];
    OrbitClass c = orbit_of(cfg.ers, h, beta);
    auto [it, fresh] = comp_class.emplace(part.component[e], c);
    if (!fresh && !(it->second == c))
      return {suite, "orbits " + cfg.name, false, "one orbit holds " + it->second.describe() + " and " + c.describe()};
    auto [jt, fresh2] = class_comp.emplace(c, part.component[e]);
    if (!fresh2 && jt->second != part.component[e])
      return {suite, "orbits " + cfg.name, false, "class " + c.describe() + " spans two orbits"};
  }
  return {suite, "orbits " + cfg.name, true, std::to_string(part.count) + " orbits"};
}

Checks suite_orbits() {
  Checks out;
  for (const auto& cfg : orbit_configs()) out.push_back(compare_orbits("orbits", cfg));
  for (int l : {1, 2, 3})
    for (int n : {1, 2}) {
      ExtRootSystem bc = fully_extended({Family::BC, l}, n);
      auto tr = trim(bc);
      int direct = reflection_orbit_count_bc(bc, 2 * bc.modulus());
      int trimmed = orbit_bruteforce(tr.system, 2 * tr.system.modulus()).count;
      out.push_back({"orbits", "trim " + bc.delta.type().name() + " n=" + std::to_string(n), direct == trimmed,
                     std::to_string(direct) + " reflection classes, " + std::to_string(trimmed) + " after trim"});
    }
  for (const auto& cfg : orbit_configs()) {
    auto rep = check_aab_proper(cfg.ers, 2 * cfg.ers.modulus());
    out.push_back({"orbits", "A^ab proper " + cfg.name, rep.ok,
                   rep.ok ? std::to_string(rep.classes) + " classes" : rep.witness});
  }
  return out;
}

// ----- cocycle -----

std::vector<Config> algebra_configs() {
  return {{"A1 n=3", fully_extended({Family::A, 1}, 3)},
          {"A2 n=3", fully_extended({Family::A, 2}, 3)},
          {"D4 n=2", fully_extended({Family::D, 4}, 2)},
          {"B2 n=3", twisted({Family::B, 2}, 3, {0, 1, 2})},
          {"B3 n=3", twisted({Family::B, 3}, 3, {0})},
          {"C3 n=2", twisted({Family::C, 3}, 2, {1})},
          {"F4 n=2", twisted({Family::F, 4}, 2, {0})},
          {"G2 n=2", twisted({Family::G, 2}, 2, {1})}};
}

IMat random_k(const WeylGroup& w, std::mt19937_64& rng) {
  IMat k = IMat::Zero(w.n(), w.rank());
  for (int i = 0; i < 3; ++i) k += k_part(w.delta(), w.random_label(rng));
  return k;
}

WeylElement random_v(const WeylGroup& w, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len(0, 6), pick(0, w.rank() - 1);
  WeylElement v = WeylElement::identity(w.rank());
  for (int i = len(rng); i > 0; --i) v = v * w.delta().reflection(w.delta().basis()[pick(rng)]);
  return v;
}

Checks suite_cocycle(const VerifyOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  std::vector<WeylGroup> groups;
  for (auto& c : algebra_configs()) groups.emplace_back(c.ers);
  std::map<std::string, std::size_t> failures, runs;
  std::map<std::string, std::string> first;
  auto record = [&](const std::string& prop, bool ok, const std::string& where) {
    ++runs[prop];
    if (!ok && failures[prop]++ == 0) first[prop] = where;
  };
  for (std::size_t i = 0; i < opt.cases; ++i) {
    const WeylGroup& w = groups[i % groups.size()];
    const std::string where = w.delta().type().name() + " case " + std::to_string(i);
    IMat k1 = random_k(w, rng), k2 = random_k(w, rng);
    record("alternating", w.cocycle(k1, k1).isZero(), where);
    WeylElement v = random_v(w, rng);
    record("V-invariant", w.cocycle(act_on_k(v, k1), act_on_k(v, k2)) == w.cocycle(k1, k2), where);
    ReflectionLabel s = w.random_label(rng), t = w.random_label(rng);
    IMat tk = k_part(w.delta(), t);
    record("reflection condition", w.cocycle(act_on_k(w.delta().reflection(s.alpha), tk), tk).isZero(), where);
    // admissibility on a perpendicular pair, when one exists
    std::vector<int> perp;
    for (int b = 0; b < w.delta().size(); ++b)
      if (w.delta().perpendicular(s.alpha, b)) perp.push_back(b);
    if (!perp.empty()) {
      ReflectionLabel u = w.random_label(rng);
      u.alpha = perp[rng() % perp.size()];
      while (!membership(w.system(), u.g, u.alpha)) u.g = w.random_label(rng).g;
      record("admissible", w.cocycle(k_part(w.delta(), s), k_part(w.delta(), u)).isZero(), where);
    }
    WElement a{IMat::Zero(w.n(), w.n()), k1, WeylElement::identity(w.rank())};
    WElement b{IMat::Zero(w.n(), w.n()), k2, WeylElement::identity(w.rank())};
    WElement comm = w.mul(w.mul(a, b), w.mul(w.inv(a), w.inv(b)));
    record("commutator", comm.k.isZero() && comm.v.is_identity() && comm.z == 2 * w.cocycle(k1, k2), where);
    WElement gs = w.generator(s);
    record("generator square", w.mul(gs, gs).is_identity(), where);
    WElement conj = w.mul(w.mul(gs, w.generator(t)), w.inv(gs));
    record("conjugation", conj == w.generator(conj_reflect(w.delta(), s, t)), where);
  }
  Checks out;
  for (const auto& [prop, n] : runs)
    out.push_back({"cocycle", prop, failures[prop] == 0,
                   std::to_string(n) + " cases" +
                       (failures[prop] ? ", first failure at " + first[prop] : std::string())});
  return out;
}

// ----- words -----

Checks suite_words(const VerifyOptions& opt) {
  Checks out;
  std::mt19937_64 rng(opt.seed);
  std::vector<WeylGroup> groups;
  for (auto& c : algebra_configs()) groups.emplace_back(c.ers);
  std::size_t bad = 0, agree = 0, det_bad = 0;
  for (std::size_t i = 0; i < opt.cases; ++i) {
    const WeylGroup& w = groups[i % groups.size()];
    Word word = random_relator_product(w, rng);
    Decision d = w.decide(word);
    if (!d.trivial || !d.value.is_identity() || !d.uab.empty()) ++bad;
    std::int64_t sign = word.size() % 2 ? -1 : 1;
    if (d.value.v.det() != sign) ++det_bad;
    // conditions of the closing remark, on a random short word
    Word r;
    for (int j = static_cast<int>(rng() % 9); j > 0; --j) r.push_back(w.random_label(rng));
    auto c = w.remark_conditions(r);
    if ((c.c1 && c.c2 && c.c3) == w.decide(r).trivial) ++agree;
  }
  out.push_back({"words", "relator products decided trivial", bad == 0,
                 std::to_string(opt.cases - bad) + "/" + std::to_string(opt.cases)});
  out.push_back({"words", "determinant parity", det_bad == 0, std::to_string(det_bad) + " mismatches"});
  out.push_back({"words", "remark conditions agree with the decider (logged)", true,
                 std::to_string(agree) + "/" + std::to_string(opt.cases)});

  const RootSystemType injective[] = {{Family::A, 2}, {Family::A, 3}, {Family::D, 4}, {Family::F, 4}, {Family::G, 2}};
  for (const auto& t : injective)
    for (int n : {1, 2}) {
      WeylGroup w(fully_extended(t, n));
      auto ks = kernel_search(w, rng, 32);
      std::size_t wrong = 0;
      for (const auto& word : ks.trivial_words) wrong += w.decide(word).trivial ? 0 : 1;
      out.push_back({"words", "injective " + t.name() + " n=" + std::to_string(n), wrong == 0 && !ks.witness,
                     std::to_string(ks.trivial_words.size()) + " W-trivial words"});
    }
  for (auto& cfg : std::vector<Config>{{"A1 n=3", fully_extended({Family::A, 1}, 3)},
                                       {"B2 n=3", twisted({Family::B, 2}, 3, {0, 1, 2})}}) {
    WeylGroup w(cfg.ers);
    auto ks = kernel_search(w, rng, 8);
    bool ok = ks.witness && w.evaluate(*ks.witness).is_identity() && w.decide(*ks.witness).failing_layer == "Uab";
    out.push_back({"words", "kernel witness " + cfg.name, ok,
                   ks.witness ? std::to_string(ks.witness->size()) + " letters" : "none found"});
  }
  return out;
}

}  // namespace

std::string expected_coinvariants(const RootSystemType& t, Side left, Side right) {
  const bool bc2 = t.family == Family::BC && t.rank >= 2;
  if (left != right) return bc2 ? "Z x Z2" : "Z";
  if (left == Side::Root) return (bc2 || t.family == Family::B) ? "Z x Z2" : "Z";
  // coroot lattices: B and C exchange roles
  return (bc2 || t.family == Family::C || (t.family == Family::B && t.rank == 2)) ? "Z x Z2" : "Z";
}

bool known_suite(const std::string& s) {
  return s == "tables" || s == "tensor" || s == "orbits" || s == "cocycle" || s == "words" || s == "all";
}

std::vector<CheckResult> run_verify(const std::string& suite, const VerifyOptions& opt) {
  if (!known_suite(suite)) throw std::invalid_argument("unknown suite: " + suite);
  Checks out;
  auto add = [&](Checks c) { out.insert(out.end(), c.begin(), c.end()); };
  if (suite == "tables" || suite == "all") add(suite_tables());
  if (suite == "tensor" || suite == "all") add(suite_tensor(opt.cap_rank));
  if (suite == "orbits" || suite == "all") add(suite_orbits());
  if (suite == "cocycle" || suite == "all") add(suite_cocycle(opt));
  if (suite == "words" || suite == "all") add(suite_words(opt));
  return out;
}

}  // namespace extweyl::cli
