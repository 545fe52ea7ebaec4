#include "extweyl/refl_groups.hpp"

#include <deque>
#include <set>
#include <stdexcept>

namespace extweyl {

SymSystem SymSystem::trivial(int n) {
  SymSystem s;
  s.mul.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) s.mul[a][b] = b;
  return s;
}

SymReport check_sym_axioms(const SymSystem& sys) {
  const int n = sys.size();
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      if (sys.mul[s][sys.mul[s][t]] != t) return {false, "S1", -1, s, t};
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t)
        if (sys.mul[r][sys.mul[s][t]] != sys.mul[sys.mul[r][s]][sys.mul[r][t]]) return {false, "S2", r, s, t};
  return {};
}

SymSystem reflection_sym_system(const FiniteRootSystem& rs) {
  // one element per reflection: positive indivisible roots
  std::vector<int> elems;
  for (int i = 0; i < rs.n_positive(); ++i)
    if (!rs.is_divisible(i)) elems.push_back(i);
  std::map<int, int> pos;
  for (std::size_t i = 0; i < elems.size(); ++i) pos[elems[i]] = static_cast<int>(i);
  SymSystem s;
  s.mul.assign(elems.size(), std::vector<int>(elems.size()));
  for (std::size_t a = 0; a < elems.size(); ++a)
    for (std::size_t b = 0; b < elems.size(); ++b) {
      int r = rs.reflect_index(elems[a], elems[b]);
      if (!rs.is_positive(r)) r = rs.neg(r);
      s.mul[a][b] = pos.at(r);
    }
  return s;
}

PermGroup terminal_group(const SymSystem& sys, std::size_t max_t, std::size_t max_order) {
  const int n = sys.size();
  if (static_cast<std::size_t>(n) > max_t) throw std::length_error("symmetric system exceeds the size cap");
  PermGroup g;
  std::set<std::vector<int>> gens;
  for (int s = 0; s < n; ++s) gens.insert(sys.mul[s]);
  std::vector<int> id(n);
  for (int i = 0; i < n; ++i) id[i] = i;
  gens.erase(id);
  g.generators.assign(gens.begin(), gens.end());

  std::set<std::vector<int>> seen{id};
  std::deque<std::vector<int>> queue{id};
  while (!queue.empty()) {
    auto p = queue.front();
    queue.pop_front();
    for (const auto& s : g.generators) {
      std::vector<int> q(n);
      for (int i = 0; i < n; ++i) q[i] = s[p[i]];
      if (seen.insert(q).second) {
        if (seen.size() > max_order) throw std::length_error("terminal group exceeds the order cap");
        queue.push_back(std::move(q));
      }
    }
  }
  g.order = seen.size();

  std::vector<int> comp(n, -1);
  for (int i = 0; i < n; ++i) {
    if (comp[i] >= 0) continue;
    std::vector<int> orbit{i};
    comp[i] = static_cast<int>(g.orbits.size());
    for (std::size_t k = 0; k < orbit.size(); ++k)
      for (const auto& s : g.generators)
        if (comp[s[orbit[k]]] < 0) {
          comp[s[orbit[k]]] = comp[i];
          orbit.push_back(s[orbit[k]]);
        }
    g.orbits.push_back(orbit);
  }
  return g;
}

ReflectionLabel canonical(const FiniteRootSystem& rs, const ReflectionLabel& t) {
  ReflectionLabel c = t;
  if (rs.is_divisible(c.alpha)) {
    bool even = true;
    for (Eigen::Index i = 0; i < c.g.size(); ++i) even = even && (c.g(i) % 2 == 0);
    if (even) {
      c.g = c.g / 2;
      c.alpha = *rs.index_of_root(IVec(rs.root(c.alpha) / 2));
    }
  }
  if (!rs.is_positive(c.alpha)) {
    c.alpha = rs.neg(c.alpha);
    c.g = -c.g;
  }
  return c;
}

AElement AElement::identity(int n, int l) { return {IMat::Zero(n, l), WeylElement::identity(l)}; }

IMat act_on_k(const WeylElement& v, const IMat& k) { return k * v.mc.transpose(); }

AElement a_mul(const AElement& a, const AElement& b) { return {a.k + act_on_k(a.v, b.k), a.v * b.v}; }

AElement a_inv(const AElement& a) {
  WeylElement vi = a.v.inverse();
  return {-act_on_k(vi, a.k), vi};
}

IMat k_part(const FiniteRootSystem& rs, const ReflectionLabel& t) { return t.g * rs.coroot(t.alpha).transpose(); }

AElement a_generator(const FiniteRootSystem& rs, const ReflectionLabel& t) {
  return {k_part(rs, t), rs.reflection(t.alpha)};
}

std::pair<IVec, IVec> act_on_root(const FiniteRootSystem& rs, const AElement& a, const IVec& h, const IVec& lambda) {
  IVec mu = a.v.m * lambda;
  return {h + a.k * (rs.pairing_matrix() * mu), mu};
}

ReflectionLabel conj_reflect(const FiniteRootSystem& rs, const ReflectionLabel& t1, const ReflectionLabel& t2) {
  std::int64_t p = rs.pairing_roots(t1.alpha, t2.alpha);
  return canonical(rs, {IVec(t2.g - p * t1.g), rs.reflect_index(t1.alpha, t2.alpha)});
}

}  // namespace extweyl
