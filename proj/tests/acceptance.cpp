// Acceptance checks. Every derived value is recomputed here from scratch:
// root systems by closure from hand-entered Cartan matrices, abelian group
// structure by p-local elimination, orbits by a separate union-find closure.

#include "extweyl/lattice.hpp"
#include "extweyl/weyl.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace extweyl;

namespace {

using Rational = boost::multiprecision::cpp_rational;
using Row = std::vector<std::int64_t>;
using Rows = std::vector<Row>;

// ---------- root systems from Cartan matrices ----------

// a(i, j) = <alpha_i^vee, alpha_j>
IMat cartan_matrix(Family f, int l) {
  IMat a = 2 * IMat::Identity(l, l);
  auto link = [&](int i, int j) { a(i, j) = a(j, i) = -1; };
  switch (f) {
    case Family::A:
      for (int i = 0; i + 1 < l; ++i) link(i, i + 1);
      break;
    case Family::B:  // alpha_l short
      for (int i = 0; i + 1 < l; ++i) link(i, i + 1);
      a(l - 1, l - 2) = -2;
      break;
    case Family::C:  // alpha_l long
      for (int i = 0; i + 1 < l; ++i) link(i, i + 1);
      a(l - 2, l - 1) = -2;
      break;
    case Family::D:
      for (int i = 0; i + 2 < l; ++i) link(i, i + 1);
      link(l - 3, l - 1);
      break;
    case Family::E:  // 1-3-4-5-6(-7-8), 2-4
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < l; ++i) link(i, i + 1);
      break;
    case Family::F:  // alpha_1, alpha_2 long
      link(0, 1);
      link(2, 3);
      a(1, 2) = -1;
      a(2, 1) = -2;
      break;
    case Family::G:  // alpha_1 short
      a(0, 1) = -3;
      a(1, 0) = -1;
      break;
    case Family::BC:
      throw std::logic_error("BC has no Cartan matrix here");
  }
  return a;
}

// A reduced root system in simple-root coordinates.
struct OracleRoots {
  int l = 0;
  IMat a;
  std::vector<std::int64_t> half_norm;  // (alpha_i, alpha_i) / 2, coprime
  std::vector<IVec> roots;

  std::int64_t form(const IVec& x, const IVec& y) const {
    std::int64_t s = 0;
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) s += x(i) * y(j) * half_norm[i] * a(i, j);
    return s;
  }
  // <x^vee, y> = 2 (x, y) / (x, x)
  std::int64_t pairing(const IVec& x, const IVec& y) const { return 2 * form(x, y) / form(x, x); }
  // coroot of x over the simple coroots
  IVec coroot(const IVec& x) const {
    const std::int64_t n = form(x, x) / 2;
    IVec c(l);
    for (int i = 0; i < l; ++i) c(i) = x(i) * half_norm[i] / n;
    return c;
  }
};

OracleRoots oracle_roots(Family f, int l) {
  OracleRoots o;
  o.l = l;
  o.a = cartan_matrix(f, l);
  std::vector<std::int64_t> n(l, 0);
  n[0] = 6;
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j)
        if (n[i] && !n[j] && o.a(i, j) != 0) {
          n[j] = n[i] * o.a(i, j) / o.a(j, i);
          changed = true;
        }
  }
  std::int64_t g = 0;
  for (auto x : n) g = std::gcd(g, x);
  for (auto& x : n) x /= g;
  o.half_norm = n;
  std::set<IVec, VecLess> seen;
  std::vector<IVec> todo;
  for (int i = 0; i < l; ++i) {
    IVec e = IVec::Unit(l, i);
    seen.insert(e);
    todo.push_back(e);
  }
  while (!todo.empty()) {
    IVec x = todo.back();
    todo.pop_back();
    for (int i = 0; i < l; ++i) {
      IVec y = x;
      y(i) -= (o.a.row(i) * x)(0);
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  o.roots.assign(seen.begin(), seen.end());
  return o;
}

// ---------- lattices L, L^vee with their V-actions ----------

// Both lattices in their own coordinates; perpendicularity comes from `form` on root images.
struct OracleLattices {
  int l = 0;
  std::vector<IMat> act_root, act_coroot;  // generators of V
  std::vector<IVec> root_img, coroot_img;  // per root
  IMat pairing;                            // <coroot basis i, root basis j>
  std::function<std::int64_t(int, int)> form;
};

OracleLattices oracle_lattices(const RootSystemType& t) {
  OracleLattices out;
  const int l = t.rank;
  out.l = l;
  if (t.family == Family::BC) {
    // ambient Z^l is both the root and the coroot lattice; V = signed permutations
    for (int k = 0; k < l; ++k) {
      IMat s = IMat::Identity(l, l);
      if (k + 1 < l) {
        s(k, k) = s(k + 1, k + 1) = 0;
        s(k, k + 1) = s(k + 1, k) = 1;
      } else {
        s(k, k) = -1;
      }
      out.act_root.push_back(s);
      out.act_coroot.push_back(s);
    }
    std::vector<IVec> roots;
    for (int i = 0; i < l; ++i)
      for (int sgn : {1, -1}) {
        roots.push_back(sgn * IVec::Unit(l, i));
        roots.push_back(2 * sgn * IVec::Unit(l, i));
        for (int j = i + 1; j < l; ++j)
          for (int sg2 : {1, -1}) roots.push_back(IVec(sgn * IVec::Unit(l, i) + sg2 * IVec::Unit(l, j)));
      }
    for (const auto& r : roots) {
      out.root_img.push_back(r);
      out.coroot_img.push_back(IVec(2 * r / r.squaredNorm()));
    }
    out.pairing = IMat::Identity(l, l);
    out.form = [roots](int i, int j) { return roots[i].dot(roots[j]); };
    return out;
  }
  OracleRoots o = oracle_roots(t.family, l);
  for (int k = 0; k < l; ++k) {
    IMat m = IMat::Identity(l, l), mc = IMat::Identity(l, l);
    m.row(k) -= o.a.row(k);
    mc.row(k) -= o.a.col(k).transpose();
    out.act_root.push_back(m);
    out.act_coroot.push_back(mc);
  }
  for (const auto& r : o.roots) {
    out.root_img.push_back(r);
    out.coroot_img.push_back(o.coroot(r));
  }
  out.pairing = o.a;
  out.form = [o](int i, int j) { return o.form(o.roots[i], o.roots[j]); };
  return out;
}

Row tensor_row(const IVec& x, const IVec& y) {
  Row r(static_cast<std::size_t>(x.size() * y.size()));
  for (Eigen::Index i = 0; i < x.size(); ++i)
    for (Eigen::Index j = 0; j < y.size(); ++j) r[static_cast<std::size_t>(i * y.size() + j)] = x(i) * y(j);
  return r;
}

Rows coinvariant_rows(const OracleLattices& o, Side left, Side right, bool box) {
  const auto& la = left == Side::Root ? o.act_root : o.act_coroot;
  const auto& ra = right == Side::Root ? o.act_root : o.act_coroot;
  Rows rows;
  for (std::size_t k = 0; k < la.size(); ++k)
    for (int i = 0; i < o.l; ++i)
      for (int j = 0; j < o.l; ++j) {
        Row r = tensor_row(la[k].col(i), ra[k].col(j));
        r[static_cast<std::size_t>(i * o.l + j)] -= 1;
        rows.push_back(std::move(r));
      }
  if (box) {
    const auto& li = left == Side::Root ? o.root_img : o.coroot_img;
    const auto& ri = right == Side::Root ? o.root_img : o.coroot_img;
    const int n = static_cast<int>(li.size());
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        bool proportional = (li[a] - li[b]).isZero() || (li[a] + li[b]).isZero() ||
                            (2 * li[a] - li[b]).isZero() || (li[a] - 2 * li[b]).isZero() ||
                            (2 * li[a] + li[b]).isZero() || (li[a] + 2 * li[b]).isZero();
        if (!proportional && o.form(a, b) == 0) rows.push_back(tensor_row(li[a], ri[b]));
      }
  }
  return rows;
}

// ---------- abelian group structure of Z^m / <rows> ----------

std::int64_t mod_pos(std::int64_t x, std::int64_t m) { return ((x % m) + m) % m; }

std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t m) {
  __int128 r = 1, x = mod_pos(b, m);
  for (; e > 0; e >>= 1, x = x * x % m)
    if (e & 1) r = r * x % m;
  return static_cast<std::int64_t>(r);
}

int rank_mod_prime(Rows rows, std::size_t m, std::int64_t p) {
  int rank = 0;
  for (std::size_t c = 0; c < m && static_cast<std::size_t>(rank) < rows.size(); ++c) {
    std::size_t piv = rows.size();
    for (std::size_t r = static_cast<std::size_t>(rank); r < rows.size(); ++r)
      if (mod_pos(rows[r][c], p) != 0) {
        piv = r;
        break;
      }
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[static_cast<std::size_t>(rank)]);
    Row& pr = rows[static_cast<std::size_t>(rank)];
    const std::int64_t inv = pow_mod(pr[c], p - 2, p);
    for (auto& x : pr) x = static_cast<std::int64_t>(static_cast<__int128>(mod_pos(x, p)) * inv % p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || mod_pos(rows[r][c], p) == 0) continue;
      const std::int64_t f = mod_pos(rows[r][c], p);
      for (std::size_t j = 0; j < m; ++j)
        rows[r][j] = mod_pos(static_cast<std::int64_t>(mod_pos(rows[r][j], p) - static_cast<__int128>(f) * pr[j] % p), p);
    }
    ++rank;
  }
  return rank;
}

int valuation(std::int64_t x, std::int64_t p, int cap) {
  if (x == 0) return cap;
  int v = 0;
  while (x % p == 0 && v < cap) x /= p, ++v;
  return v;
}

// Exponents v (1 <= v < k) of the cyclic p-factors of Z^m / <rows>, read off over Z / p^k,
// and the number of factors that are Z / p^k or larger.
std::pair<std::vector<int>, int> local_factors(Rows rows, std::size_t m, std::int64_t p, int k) {
  std::int64_t q = 1;
  for (int i = 0; i < k; ++i) q *= p;
  for (auto& r : rows)
    for (auto& x : r) x = mod_pos(x, q);
  std::vector<bool> row_used(rows.size(), false), col_used(m, false);
  std::vector<int> small;
  std::size_t pivots = 0;
  while (true) {
    int best = k;
    std::size_t br = 0, bc = 0;
    for (std::size_t r = 0; r < rows.size() && best > 0; ++r) {
      if (row_used[r]) continue;
      for (std::size_t c = 0; c < m; ++c)
        if (!col_used[c]) {
          int v = valuation(rows[r][c], p, k);
          if (v < best) best = v, br = r, bc = c;
        }
    }
    if (best >= k) break;
    // pivot = p^best * unit; every other entry of its column is divisible by p^best
    std::int64_t pb = 1;
    for (int i = 0; i < best; ++i) pb *= p;
    const std::int64_t unit = rows[br][bc] / pb;
    const std::int64_t inv = [&] {
      for (std::int64_t u = 1; u < q; ++u)
        if (mod_pos(unit * u, q) == 1) return u;
      return std::int64_t{1};
    }();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == br || row_used[r] || rows[r][bc] == 0) continue;
      const std::int64_t f = mod_pos((rows[r][bc] / pb) * inv, q);
      for (std::size_t c = 0; c < m; ++c) rows[r][c] = mod_pos(rows[r][c] - f * rows[br][c], q);
    }
    row_used[br] = true;
    col_used[bc] = true;
    ++pivots;
    if (best > 0) small.push_back(best);
  }
  return {small, static_cast<int>(m - pivots)};
}

// Describes Z^m / <rows> as "Z x Z2"-style text: free rank from a large prime,
// torsion from the primes up to 13 (to 2^5, 3^3 and squares of the others).
std::string group_structure(const Rows& rows, std::size_t m) {
  const int free = static_cast<int>(m) - rank_mod_prime(rows, m, 2147483647);
  std::map<std::int64_t, std::vector<std::int64_t>> primary;
  for (auto [p, k] : {std::pair<std::int64_t, int>{2, 5}, {3, 3}, {5, 2}, {7, 2}, {11, 2}, {13, 2}}) {
    auto [small, big] = local_factors(rows, m, p, k);
    if (big != free) return "torsion beyond p^k at p=" + std::to_string(p);
    for (int v : small) {
      std::int64_t x = 1;
      for (int i = 0; i < v; ++i) x *= p;
      primary[p].push_back(x);
    }
  }
  std::vector<std::int64_t> factors;
  for (auto& [p, xs] : primary) {
    std::sort(xs.rbegin(), xs.rend());
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (factors.size() <= i) factors.push_back(1);
      factors[i] *= xs[i];
    }
  }
  std::sort(factors.begin(), factors.end());
  std::vector<std::string> parts(static_cast<std::size_t>(free), "Z");
  for (auto f : factors) parts.push_back("Z" + std::to_string(f));
  if (parts.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? " x " : "") + parts[i];
  return s;
}

// ---------- sweeps and configurations ----------

std::vector<RootSystemType> sweep(int cap) {
  std::vector<RootSystemType> out;
  for (int l = 1; l <= cap; ++l) out.push_back({Family::A, l});
  for (int l = 2; l <= cap; ++l) out.push_back({Family::B, l});
  for (int l = 3; l <= cap; ++l) out.push_back({Family::C, l});
  for (int l = 4; l <= cap; ++l) out.push_back({Family::D, l});
  out.push_back({Family::E, 6});
  out.push_back({Family::F, 4});
  out.push_back({Family::G, 2});
  for (int l = 1; l <= cap; ++l) out.push_back({Family::BC, l});
  return out;
}

bool is_b_or_bc2(const RootSystemType& t) {
  return t.family == Family::B || (t.family == Family::BC && t.rank >= 2);
}

using Member = std::function<bool(const IVec&, int)>;

struct OrbitConfig {
  std::string name;
  ExtRootSystem ers;
  Member member;  // written out independently of the S-set machinery
};

std::vector<OrbitConfig> orbit_configs() {
  std::vector<OrbitConfig> out;
  auto all = [](const IVec&, int) { return true; };
  auto full = [&](Family f, int l, int n) {
    out.push_back({RootSystemType{f, l}.name() + " n=" + std::to_string(n) + " full", fully_extended({f, l}, n), all});
  };
  auto tw = [&](Family f, int l, int n, std::vector<int> g1) {
    ExtRootSystem e = twisted({f, l}, n, g1);
    const std::int64_t k = k_delta({f, l});
    auto lengths = e.delta.lengths();
    Member m = [lengths, g1, k](const IVec& g, int a) {
      if (lengths[static_cast<std::size_t>(a)] == LengthClass::Short) return true;
      for (int i : g1)
        if (mod_floor(g(i), k) != 0) return false;
      return true;
    };
    std::string s = RootSystemType{f, l}.name() + " n=" + std::to_string(n) + " G1={";
    for (std::size_t i = 0; i < g1.size(); ++i) s += (i ? "," : "") + std::to_string(g1[i]);
    out.push_back({s + "}", e, m});
  };
  full(Family::A, 1, 1);
  full(Family::A, 1, 2);
  full(Family::A, 1, 3);
  {
    ExtRootSystem e = fully_extended({Family::A, 1}, 2);
    e.s_sh = SSet::make(2 * IMat::Identity(2, 2), {IVec::Zero(2), IVec::Unit(2, 0), IVec::Unit(2, 1)});
    out.push_back({"A1 n=2 three cosets", e,
                   [](const IVec& g, int) { return !(mod_floor(g(0), 2) == 1 && mod_floor(g(1), 2) == 1); }});
  }
  full(Family::A, 2, 2);
  full(Family::A, 3, 1);
  full(Family::D, 4, 1);
  tw(Family::B, 2, 2, {0});
  tw(Family::B, 2, 2, {});
  tw(Family::B, 2, 2, {0, 1});
  tw(Family::B, 2, 3, {0, 1, 2});
  tw(Family::B, 3, 2, {0});
  tw(Family::B, 3, 1, {});
  tw(Family::B, 4, 2, {1});
  tw(Family::C, 3, 2, {0});
  tw(Family::C, 3, 1, {});
  tw(Family::C, 4, 1, {0});
  tw(Family::F, 4, 2, {0});
  tw(Family::F, 4, 1, {});
  tw(Family::G, 2, 2, {1});
  tw(Family::G, 2, 1, {0});
  full(Family::G, 2, 1);
  return out;
}

// Orbits of W on (G / N G) x Delta inside R, by union-find over all reflections.
struct Closure {
  std::int64_t modulus = 0;
  std::map<std::pair<IVec, int>, int, std::function<bool(const std::pair<IVec, int>&, const std::pair<IVec, int>&)>>
      index{[](const std::pair<IVec, int>& a, const std::pair<IVec, int>& b) {
        if (a.second != b.second) return a.second < b.second;
        return VecLess{}(a.first, b.first);
      }};
  std::vector<int> parent;
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x)
      x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  }
  IVec reduce(const IVec& g) const {
    IVec r(g.size());
    for (Eigen::Index i = 0; i < g.size(); ++i) r(i) = mod_floor(g(i), modulus);
    return r;
  }
  int component(const IVec& g, int beta) { return find(index.at({reduce(g), beta})); }
};

std::vector<IVec> box_points(int n, std::int64_t m) {
  std::vector<IVec> out;
  IVec g = IVec::Zero(n);
  while (true) {
    out.push_back(g);
    int i = 0;
    while (i < n && ++g(i) == m) g(i++) = 0;
    if (i == n) break;
  }
  return out;
}

Closure closure(const OrbitConfig& c) {
  Closure cl;
  cl.modulus = 2 * c.ers.modulus();
  const auto& rs = c.ers.delta;
  const auto points = box_points(c.ers.n(), cl.modulus);
  for (int b = 0; b < rs.size(); ++b)
    for (const auto& h : points)
      if (c.member(h, b)) {
        int id = static_cast<int>(cl.parent.size());
        cl.index.emplace(std::pair{h, b}, id);
        cl.parent.push_back(id);
      }
  for (int a = 0; a < rs.n_positive(); ++a)
    for (const auto& g : points) {
      if (!c.member(g, a)) continue;
      for (const auto& [key, id] : cl.index) {
        const auto& [h, b] = key;
        IVec h2 = cl.reduce(IVec(h - rs.pairing_roots(a, b) * g));
        int other = cl.index.at({h2, rs.reflect_index(a, b)});
        cl.parent[static_cast<std::size_t>(cl.find(id))] = cl.find(other);
      }
    }
  return cl;
}

// ---------- reporting ----------

struct Outcome {
  bool ok = true;
  std::string detail;
};

std::string set_text(const std::set<std::int64_t>& s) {
  std::string out = "{";
  for (auto x : s) out += (out.size() > 1 ? "," : "") + std::to_string(x);
  return out + "}";
}

// ---------- criteria ----------

Outcome rank_two_pairings() {
  struct Ref {
    RootSystemType t;
    std::int64_t ab, ba;
    std::int64_t rab_alpha, rba_beta;  // r_a.b = b + x a, r_b.a = a + y b
  };
  const Ref refs[] = {{{Family::A, 2}, -1, -1, 1, 1}, {{Family::B, 2}, -2, -1, 2, 1}, {{Family::G, 2}, -3, -1, 3, 1}};
  Outcome out;
  for (const auto& ref : refs) {
    auto rs = FiniteRootSystem::build(ref.t);
    // alpha: the short simple root (either one for A2)
    int a = rs.basis()[0], b = rs.basis()[1];
    if (rs.norm(a) > rs.norm(b)) std::swap(a, b);
    const bool ok = rs.pairing_roots(a, b) == ref.ab && rs.pairing_roots(b, a) == ref.ba &&
                    rs.reflect(a, rs.root(b)) == IVec(rs.root(b) + ref.rab_alpha * rs.root(a)) &&
                    rs.reflect(b, rs.root(a)) == IVec(rs.root(a) + ref.rba_beta * rs.root(b));
    // and the same numbers from the hand-entered Cartan matrix
    OracleRoots o = oracle_roots(ref.t.family, 2);
    int oa = o.half_norm[0] <= o.half_norm[1] ? 0 : 1, ob = 1 - oa;
    const bool oracle_ok = o.a(oa, ob) == ref.ab && o.a(ob, oa) == ref.ba;
    if (!ok || !oracle_ok) {
      out.ok = false;
      out.detail += ref.t.name() + " differs; ";
    }
  }
  if (out.ok) out.detail = "A2, B2, G2 exact";
  return out;
}

Outcome pairing_value_sets() {
  using S = std::set<std::int64_t>;
  const S pm1{-1, 1}, pm2{-2, 2}, z1{-1, 0, 1}, z2{-2, 0, 2}, z12{-2, -1, 0, 1, 2}, z3{-3, 0, 3}, none{};
  // columns: <sh coroots, sh roots>, <sh, lg>, <lg, sh>, <lg, lg>
  struct Ref {
    RootSystemType t;
    std::array<S, 4> sets;
  };
  const std::vector<Ref> refs = {
      {{Family::A, 1}, {pm2, none, none, none}}, {{Family::B, 2}, {pm1, z2, z2, pm2}},
      {{Family::B, 3}, {z1, z12, z2, z2}},       {{Family::B, 4}, {z1, z12, z2, z2}},
      {{Family::C, 3}, {z1, z2, z12, z2}},       {{Family::C, 4}, {z1, z2, z12, z2}},
      {{Family::F, 4}, {z1, z12, z12, z2}},      {{Family::G, 2}, {z1, z12, z12, z3}},
      {{Family::A, 2}, {z12, none, none, none}}, {{Family::A, 3}, {z12, none, none, none}},
      {{Family::A, 4}, {z12, none, none, none}}, {{Family::D, 4}, {z12, none, none, none}},
      {{Family::E, 6}, {z12, none, none, none}}};
  const char* cols[] = {"sh,sh", "sh,lg", "lg,sh", "lg,lg"};
  Outcome out;
  std::string agree_fail;
  for (const auto& ref : refs) {
    // oracle: coroots of long roots are the short coroots
    OracleRoots o = oracle_roots(ref.t.family, ref.t.rank);
    std::int64_t min_norm = o.form(o.roots[0], o.roots[0]);
    for (const auto& r : o.roots) min_norm = std::min(min_norm, o.form(r, r));
    bool one_length = true;
    for (const auto& r : o.roots) one_length = one_length && o.form(r, r) == min_norm;
    std::array<S, 4> oracle;
    for (const auto& x : o.roots)
      for (const auto& y : o.roots) {
        const int cx = !one_length && o.form(x, x) == min_norm ? 1 : 0;  // long coroot for a short root
        const int cy = !one_length && o.form(y, y) != min_norm ? 1 : 0;
        oracle[static_cast<std::size_t>(2 * cx + cy)].insert(o.pairing(x, y));
      }
    // library
    auto rs = FiniteRootSystem::build(ref.t);
    std::array<S, 4> lib;
    const bool laced = rs.type().is_simply_laced();
    for (int a = 0; a < rs.size(); ++a)
      for (int b = 0; b < rs.size(); ++b) {
        const int cx = !laced && rs.length(a) == LengthClass::Short ? 1 : 0;
        const int cy = !laced && rs.length(b) == LengthClass::Long ? 1 : 0;
        lib[static_cast<std::size_t>(2 * cx + cy)].insert(rs.pairing_roots(a, b));
      }
    if (lib != oracle) agree_fail += ref.t.name() + " ";
    for (std::size_t c = 0; c < 4; ++c)
      if (oracle[c] != ref.sets[c]) {
        out.ok = false;
        out.detail += ref.t.name() + " " + cols[c] + " enumerated " + set_text(oracle[c]) + " vs reference " +
                      set_text(ref.sets[c]) + "; ";
      }
  }
  if (!agree_fail.empty()) {
    out.ok = false;
    out.detail = "library and enumeration disagree for " + agree_fail + "; " + out.detail;
  }
  if (out.ok) out.detail = "13 types exact";
  return out;
}

Outcome coinvariant_sweep(Side left, Side right, const std::function<bool(const RootSystemType&)>& z2) {
  Outcome out;
  int n = 0;
  for (const auto& t : sweep(6)) {
    const std::string want = z2(t) ? "Z x Z2" : "Z";
    const std::string lib = coinvariants(FiniteRootSystem::build(t), left, right).describe();
    const std::string oracle = group_structure(coinvariant_rows(oracle_lattices(t), left, right, false),
                                               static_cast<std::size_t>(t.rank * t.rank));
    ++n;
    if (lib != want || oracle != want) {
      out.ok = false;
      out.detail += t.name() + ": library " + lib + ", oracle " + oracle + ", expected " + want + "; ";
    }
  }
  if (out.ok) out.detail = std::to_string(n) + " types";
  return out;
}

Outcome box_quotients() {
  Outcome out;
  int n = 0;
  const std::pair<Side, Side> pairs[] = {
      {Side::Root, Side::Root}, {Side::Root, Side::Coroot}, {Side::Coroot, Side::Coroot}};
  for (const auto& t : sweep(6)) {
    auto rs = FiniteRootSystem::build(t);
    auto ol = oracle_lattices(t);
    for (auto [l, r] : pairs) {
      const std::string lib = box_quotient(rs, l, r).group.describe();
      const std::string oracle =
          group_structure(coinvariant_rows(ol, l, r, true), static_cast<std::size_t>(t.rank * t.rank));
      ++n;
      if (lib != "Z" || oracle != "Z") {
        out.ok = false;
        out.detail += t.name() + " " + to_string(l) + "," + to_string(r) + ": library " + lib + ", oracle " + oracle + "; ";
      }
    }
    if (t.is_simply_laced() || !t.is_reduced()) continue;
    // oracle indices: the equivariant embedding is the scalar 2 / (short, short), and each
    // box quotient is the invariant form divided by its gcd on basis pairs
    OracleRoots o = oracle_roots(t.family, t.rank);
    Rational g_ll = 0, g_lc = 0, g_cc = 0;
    auto gcd_q = [](const Rational& a, const Rational& b) {
      if (a == 0) return b;
      using boost::multiprecision::cpp_int;
      cpp_int an = numerator(a), ad = denominator(a), bn = numerator(b), bd = denominator(b);
      cpp_int num = boost::multiprecision::gcd(an * bd, bn * ad);
      return Rational(boost::multiprecision::abs(num), ad * bd);
    };
    for (int i = 0; i < t.rank; ++i)
      for (int j = 0; j < t.rank; ++j) {
        g_ll = gcd_q(g_ll, Rational(o.half_norm[i] * o.a(i, j)));
        g_lc = gcd_q(g_lc, Rational(o.a(i, j)));
        g_cc = gcd_q(g_cc, Rational(o.a(i, j), o.half_norm[j]));
      }
    std::int64_t n_sh = *std::min_element(o.half_norm.begin(), o.half_norm.end());
    Rational c(1, n_sh);
    Rational phi = c * g_ll / g_lc, psi = c * g_lc / g_cc;
    auto lib = inclusion_indices(rs);
    if (phi != lib.index_phi || psi != lib.index_psi || lib.index_phi <= 0 || lib.index_psi <= 0) {
      out.ok = false;
      out.detail += t.name() + " inclusion indices (" + std::to_string(lib.index_phi) + "," +
                    std::to_string(lib.index_psi) + ") vs oracle (" + phi.str() + "," + psi.str() + "); ";
    }
  }
  if (out.ok) out.detail = std::to_string(n) + " quotients, inclusion indices agree";
  return out;
}

Outcome l_mod_l_eff() {
  Outcome out;
  int n = 0;
  for (const auto& t : sweep(6)) {
    const bool z2 = (t.family == Family::A && t.rank == 1) || t.family == Family::B || t.family == Family::BC;
    auto rs = FiniteRootSystem::build(t);
    auto lib = l_eff_quotient(rs);
    auto ol = oracle_lattices(t);
    Rows rows;
    const std::size_t m = static_cast<std::size_t>(t.rank);
    for (std::size_t a = 0; a < ol.root_img.size(); ++a)
      for (int j = 0; j < t.rank; ++j) {
        // lambda - r_a lambda = <a^vee, lambda> a, with lambda a basis vector
        const std::int64_t p = (ol.coroot_img[a].transpose() * ol.pairing.col(j))(0);
        rows.push_back(Row(ol.root_img[a].data(), ol.root_img[a].data() + m));
        for (auto& x : rows.back()) x *= p;
      }
    const std::string oracle = group_structure(rows, m);
    const std::string want = z2 ? "Z2" : "0";
    ++n;
    if (lib.group.describe() != want || oracle != want) {
      out.ok = false;
      out.detail += t.name() + ": library " + lib.group.describe() + ", oracle " + oracle + "; ";
      continue;
    }
    if (!z2) continue;
    // root image: nonzero exactly when the root is outside L_eff
    std::map<LengthClass, std::set<bool>> lib_img, oracle_img;
    for (int a = 0; a < rs.size(); ++a) {
      bool nz = false;
      for (const auto& x : lib.root_images[static_cast<std::size_t>(a)]) nz = nz || x != 0;
      lib_img[rs.length(a)].insert(nz);
    }
    std::int64_t min_norm = ol.form(0, 0);
    for (std::size_t a = 0; a < ol.root_img.size(); ++a)
      min_norm = std::min(min_norm, ol.form(static_cast<int>(a), static_cast<int>(a)));
    for (std::size_t a = 0; a < ol.root_img.size(); ++a) {
      Rows ext = rows;
      ext.push_back(Row(ol.root_img[a].data(), ol.root_img[a].data() + m));
      const bool nz = group_structure(ext, m) == "0";
      const std::int64_t nn = ol.form(static_cast<int>(a), static_cast<int>(a));
      LengthClass c = nn == min_norm ? LengthClass::Short : nn == 4 * min_norm && t.family == Family::BC
                                                               ? LengthClass::ExtraLong
                                                               : LengthClass::Long;
      if (t.family == Family::A) c = LengthClass::Short;
      oracle_img[c].insert(nz);
    }
    // stated map: short roots (all roots for A1) to the generator, everything else to 0
    std::map<LengthClass, std::set<bool>> stated;
    for (const auto& [c, v] : oracle_img) stated[c] = {c == LengthClass::Short};
    if (lib_img != oracle_img || oracle_img != stated) {
      out.ok = false;
      out.detail += t.name() + ": root images differ; ";
    }
  }
  if (out.ok) out.detail = std::to_string(n) + " types, root images as stated";
  return out;
}

Outcome orbit_classification() {
  Outcome out;
  int n = 0;
  for (const auto& cfg : orbit_configs()) {
    Closure cl = closure(cfg);
    std::map<int, OrbitClass> comp_class;
    std::map<OrbitClass, int> class_comp;
    bool ok = true;
    for (const auto& [key, id] : cl.index) {
      OrbitClass c = orbit_of(cfg.ers, key.first, key.second);
      const int comp = cl.find(id);
      auto [it, fresh] = comp_class.emplace(comp, c);
      auto [jt, fresh2] = class_comp.emplace(c, comp);
      ok = ok && (fresh || it->second == c) && (fresh2 || jt->second == comp);
    }
    ++n;
    if (!ok) {
      out.ok = false;
      out.detail += cfg.name + " disagrees; ";
    }
  }
  if (out.ok) out.detail = std::to_string(n) + " configurations";
  return out;
}

// random member label of a configuration
ReflectionLabel random_label(const OrbitConfig& c, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> root(0, c.ers.delta.size() - 1);
  std::uniform_int_distribution<std::int64_t> coef(-4, 4);
  while (true) {
    IVec g(c.ers.n());
    for (Eigen::Index i = 0; i < g.size(); ++i) g(i) = coef(rng);
    int a = root(rng);
    if (c.member(g, a)) return {g, a};
  }
}

std::vector<OrbitConfig> algebra_configs() {
  std::vector<OrbitConfig> out;
  for (const auto& c : orbit_configs())
    if (c.name == "A1 n=3 full" || c.name == "A2 n=2 full" || c.name == "D4 n=1 full" ||
        c.name == "B2 n=3 G1={0,1,2}" || c.name == "B3 n=2 G1={0}" || c.name == "C3 n=2 G1={0}" ||
        c.name == "F4 n=2 G1={0}" || c.name == "G2 n=2 G1={1}")
      out.push_back(c);
  return out;
}

Outcome cocycle_properties() {
  std::mt19937_64 rng(8);
  auto cfgs = algebra_configs();
  std::vector<WeylGroup> groups;
  for (const auto& c : cfgs) groups.emplace_back(c.ers);
  const std::size_t cases = 10000;
  std::map<std::string, std::size_t> runs, fails;
  auto rec = [&](const char* name, bool ok) {
    ++runs[name];
    if (!ok) ++fails[name];
  };
  auto random_k = [&](std::size_t gi) {
    const auto& w = groups[gi];
    IMat k = IMat::Zero(w.n(), w.rank());
    for (int i = 0; i < 3; ++i) k += k_part(w.delta(), random_label(cfgs[gi], rng));
    return k;
  };
  for (std::size_t i = 0; i < cases; ++i) {
    const std::size_t gi = i % groups.size();
    const auto& w = groups[gi];
    const auto& rs = w.delta();
    IMat k1 = random_k(gi), k2 = random_k(gi);
    IMat c12 = w.cocycle(k1, k2);
    rec("alternating", w.cocycle(k1, k1).isZero() && IMat(c12 + w.cocycle(k2, k1)).isZero());
    WeylElement v = WeylElement::identity(rs.rank());
    for (int j = static_cast<int>(rng() % 7); j > 0; --j) v = v * rs.reflection(rs.basis()[rng() % rs.rank()]);
    rec("V-invariance", w.cocycle(act_on_k(v, k1), act_on_k(v, k2)) == c12);
    ReflectionLabel s = random_label(cfgs[gi], rng), t = random_label(cfgs[gi], rng);
    IMat tk = k_part(rs, t);
    rec("reflection condition", w.cocycle(act_on_k(rs.reflection(s.alpha), tk), tk).isZero());
    WElement a{IMat::Zero(w.n(), w.n()), k1, WeylElement::identity(rs.rank())};
    WElement b{IMat::Zero(w.n(), w.n()), k2, WeylElement::identity(rs.rank())};
    WElement comm = w.mul(w.mul(a, b), w.mul(w.inv(a), w.inv(b)));
    rec("commutator", comm.k.isZero() && comm.v.is_identity() && comm.z == 2 * c12);
  }
  // admissibility needs perpendicular roots, which A1 and A2 lack
  for (std::size_t i = 0; runs["admissibility"] < cases; ++i) {
    const std::size_t gi = i % groups.size();
    const auto& w = groups[gi];
    const auto& rs = w.delta();
    ReflectionLabel s = random_label(cfgs[gi], rng);
    std::vector<int> perp;
    for (int b = 0; b < rs.size(); ++b)
      if (rs.perpendicular(s.alpha, b)) perp.push_back(b);
    if (perp.empty()) continue;
    ReflectionLabel u = random_label(cfgs[gi], rng);
    u.alpha = perp[rng() % perp.size()];
    while (!cfgs[gi].member(u.g, u.alpha)) u.g = random_label(cfgs[gi], rng).g;
    rec("admissibility", w.cocycle(k_part(rs, s), k_part(rs, u)).isZero());
  }
  Outcome out;
  std::ostringstream d;
  for (const auto& [name, r] : runs) {
    if (fails[name] || r < cases) out.ok = false;
    d << name << " " << r - fails[name] << "/" << r << "; ";
  }
  out.detail = d.str();
  return out;
}

// ---------- words ----------

Word conjugated_relator(const OrbitConfig& c, const FiniteRootSystem& rs, std::mt19937_64& rng) {
  Word conj;
  for (int i = static_cast<int>(rng() % 4); i > 0; --i) conj.push_back(random_label(c, rng));
  ReflectionLabel t = random_label(c, rng);
  Word core;
  if (rng() % 4 == 0) {
    core = {t, t};
  } else {
    ReflectionLabel s = random_label(c, rng);
    // t s t = t.s with t.s = (g_s - <a_t^vee, a_s> g_t, r_t a_s)
    ReflectionLabel ts{IVec(s.g - rs.pairing_roots(t.alpha, s.alpha) * t.g), rs.reflect_index(t.alpha, s.alpha)};
    core = {t, s, t, ts};
  }
  Word out = conj;
  out.insert(out.end(), core.begin(), core.end());
  out.insert(out.end(), conj.rbegin(), conj.rend());
  return out;
}

// Action of a word on sample points of G x L, composed letter by letter.
bool acts_trivially(const FiniteRootSystem& rs, const Word& w, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> coef(-5, 5);
  const int n = w.empty() ? 0 : static_cast<int>(w.front().g.size());
  for (int trial = 0; trial < 4; ++trial) {
    IVec h(n), lam(rs.rank());
    for (Eigen::Index i = 0; i < h.size(); ++i) h(i) = coef(rng);
    for (Eigen::Index i = 0; i < lam.size(); ++i) lam(i) = coef(rng);
    IVec h2 = h, l2 = lam;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      const IVec& a = rs.root(it->alpha);
      const std::int64_t p = rs.pairing(it->alpha, l2);
      h2 -= p * it->g;
      l2 -= p * a;
    }
    if (h2 != h || l2 != lam) return false;
  }
  return true;
}

Outcome presentation_soundness() {
  std::mt19937_64 rng(9);
  auto cfgs = algebra_configs();
  std::vector<WeylGroup> groups;
  for (const auto& c : cfgs) groups.emplace_back(c.ers);
  std::size_t bad = 0;
  const std::size_t cases = 10000;
  for (std::size_t i = 0; i < cases; ++i) {
    const std::size_t gi = i % groups.size();
    const auto& w = groups[gi];
    Word word;
    for (int f = 0; f < 3; ++f) {
      Word r = conjugated_relator(cfgs[gi], w.delta(), rng);
      word.insert(word.end(), r.begin(), r.end());
    }
    const bool ok = w.evaluate(word).is_identity() && w.uab_of_word(word).empty() && w.decide(word).trivial &&
                    acts_trivially(w.delta(), word, rng);
    if (!ok) ++bad;
  }
  return {bad == 0, std::to_string(cases - bad) + "/" + std::to_string(cases) + " relator products trivial"};
}

Outcome injectivity() {
  Outcome out;
  std::mt19937_64 rng(10);
  std::size_t words = 0;
  // simply laced and G2/F4: every W-trivial word must be decided trivial
  for (auto t : {RootSystemType{Family::A, 2}, RootSystemType{Family::A, 3}, RootSystemType{Family::D, 4},
                 RootSystemType{Family::F, 4}, RootSystemType{Family::G, 2}})
    for (int n : {1, 2}) {
      OrbitConfig cfg{t.name(), fully_extended(t, n), [](const IVec&, int) { return true; }};
      WeylGroup w(cfg.ers);
      auto ks = kernel_search(w, rng, 48);
      std::vector<Word> tests = ks.trivial_words;
      for (int i = 0; i < 16; ++i) {
        // relators interleaved with a conjugating word
        Word c, word;
        for (int j = 0; j < 4; ++j) c.push_back(random_label(cfg, rng));
        Word r1 = conjugated_relator(cfg, w.delta(), rng), r2 = conjugated_relator(cfg, w.delta(), rng);
        word = c;
        word.insert(word.end(), r1.begin(), r1.end());
        word.insert(word.end(), c.rbegin(), c.rend());
        word.insert(word.end(), r2.begin(), r2.end());
        tests.push_back(word);
      }
      if (ks.witness) {
        out.ok = false;
        out.detail += t.name() + " n=" + std::to_string(n) + " produced a kernel witness; ";
      }
      for (const auto& word : tests) {
        if (!w.evaluate(word).is_identity() || !acts_trivially(w.delta(), word, rng)) continue;
        ++words;
        if (!w.decide(word).trivial) {
          out.ok = false;
          out.detail += t.name() + " W-trivial word decided nontrivial; ";
        }
      }
    }
  // A1 and B2: a W-trivial word with a nonzero U^ab image, the image recounted by closure orbits
  for (const auto& cfg : orbit_configs()) {
    if (cfg.name != "A1 n=3 full" && cfg.name != "B2 n=3 G1={0,1,2}") continue;
    WeylGroup w(cfg.ers);
    auto ks = kernel_search(w, rng, 4);
    if (!ks.witness) {
      out.ok = false;
      out.detail += cfg.name + ": no witness; ";
      continue;
    }
    Closure cl = closure(cfg);
    std::map<int, int> parity;
    for (const auto& t : *ks.witness) parity[cl.component(t.g, t.alpha)] ^= 1;
    int odd = 0;
    for (const auto& [c, p] : parity) odd += p;
    Decision d = w.decide(*ks.witness);
    const bool ok = w.evaluate(*ks.witness).is_identity() && acts_trivially(w.delta(), *ks.witness, rng) &&
                    !d.trivial && d.failing_layer == "Uab" && odd > 0 &&
                    static_cast<int>(d.uab.size()) == odd;
    if (!ok) {
      out.ok = false;
      out.detail += cfg.name + ": witness check failed; ";
    } else {
      out.detail += cfg.name + " witness of " + std::to_string(ks.witness->size()) + " letters, " +
                    std::to_string(odd) + " odd classes; ";
    }
  }
  out.detail = std::to_string(words) + " W-trivial words decided trivial; " + out.detail;
  return out;
}

Outcome aab_properness() {
  Outcome out;
  int n = 0;
  for (const auto& cfg : orbit_configs()) {
    if (cfg.ers.n() > 3) continue;
    Closure cl = closure(cfg);
    auto abk = ab_k(cfg.ers);
    std::map<std::vector<BigInt>, int> image_comp;
    std::map<int, std::vector<BigInt>> comp_image;
    bool ok = true;
    const auto& rs = cfg.ers.delta;
    for (int a = 0; a < rs.n_positive(); ++a)
      for (const auto& g : box_points(cfg.ers.n(), cl.modulus)) {
        if (!cfg.member(g, a)) continue;
        auto img = aab_image(cfg.ers, abk, {g, a});
        const int comp = cl.component(g, a);
        ok = ok && std::any_of(img.begin(), img.end(), [](const BigInt& x) { return x != 0; });
        auto [it, fresh] = image_comp.emplace(img, comp);
        auto [jt, fresh2] = comp_image.emplace(comp, img);
        ok = ok && (fresh || it->second == comp) && (fresh2 || jt->second == img);
      }
    ++n;
    if (!ok) {
      out.ok = false;
      out.detail += cfg.name + " not proper; ";
    }
  }
  if (out.ok) out.detail = std::to_string(n) + " configurations exhaustive";
  return out;
}

struct Criterion {
  int id;
  const char* title;
  double limit_s;  // 0: no limit
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "rank-2 pairings and reflections", 1.0, rank_two_pairings},
      {2, "pairing value sets", 5.0, pairing_value_sets},
      {3, "coinvariants L (x)_V L", 30.0,
       [] { return coinvariant_sweep(Side::Root, Side::Root, is_b_or_bc2); }},
      {4, "mixed coinvariants L (x)_V L^vee", 0.0,
       [] {
         return coinvariant_sweep(Side::Root, Side::Coroot,
                                  [](const RootSystemType& t) { return t.family == Family::BC && t.rank >= 2; });
       }},
      {5, "box quotients and inclusion indices", 0.0, box_quotients},
      {6, "L / L_eff", 0.0, l_mod_l_eff},
      {7, "orbit classification", 60.0, orbit_classification},
      {8, "cocycle properties", 0.0, cocycle_properties},
      {9, "presentation soundness", 0.0, presentation_soundness},
      {10, "injectivity and kernel witnesses", 0.0, injectivity},
      {11, "A^ab properness", 0.0, aab_properness},
  };
  int only = argc > 1 ? std::atoi(argv[1]) : 0;
  bool all_ok = true;
  for (const auto& c : criteria) {
    if (only && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && secs >= c.limit_s) {
      o.ok = false;
      o.detail += " over the " + std::to_string(c.limit_s) + " s budget";
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2fs", secs);
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << timing << ") -- "
              << o.detail << std::endl;
    all_ok = all_ok && o.ok;
  }
  return all_ok ? 0 : 1;
}
