#pragma once

#include "extweyl/ext_root.hpp"
#include "extweyl/root_system.hpp"

#include <functional>
#include <string>
#include <vector>

namespace extweyl {

// A finite set {0..size-1} with a multiplication table mul[s][t] = s.t.
struct SymSystem {
  std::vector<std::vector<int>> mul;
  int size() const { return static_cast<int>(mul.size()); }
  static SymSystem trivial(int n);
};

struct SymReport {
  bool ok = true;
  std::string axiom;  // "S1" or "S2" on failure
  int r = -1, s = -1, t = -1;
};
SymReport check_sym_axioms(const SymSystem& sys);

// Reflections of a finite root system with conjugation; element i is the positive root i.
SymSystem reflection_sym_system(const FiniteRootSystem& rs);

struct ReflectionGroupReport {
  bool g1 = true, g2 = true, g3 = true, g4 = true;
  bool separates = true, proper = true;
  std::string witness;
  bool ok() const { return g1 && g2 && g3 && g4; }
};

// A candidate reflection group given by images of T, its multiplication, and its action on T.
template <class E>
struct ReflectionGroupSpec {
  std::vector<E> images;
  std::function<E(const E&, const E&)> mul;
  std::function<bool(const E&, const E&)> eq;
  E identity;
  std::function<int(const E&, int)> act;
};

template <class E>
ReflectionGroupReport check_reflection_group(const SymSystem& sys, const ReflectionGroupSpec<E>& g) {
  ReflectionGroupReport rep;
  const int n = sys.size();
  auto note = [&](const std::string& w) {
    if (rep.witness.empty()) rep.witness = w;
  };
  // (G1) holds by construction: the group is the one generated by the images.
  for (int t = 0; t < n; ++t) {
    if (!g.eq(g.mul(g.images[t], g.images[t]), g.identity)) {
      rep.g4 = false;
      note("G4 fails at t=" + std::to_string(t));
    }
    if (g.eq(g.images[t], g.identity)) rep.proper = false;
    for (int s = 0; s < n; ++s) {
      if (g.act(g.images[t], s) != sys.mul[t][s]) {
        rep.g2 = false;
        note("G2 fails at t=" + std::to_string(t) + ", s=" + std::to_string(s));
      }
      // images are involutions when G4 holds, so conjugation is t s t
      E conj = g.mul(g.mul(g.images[t], g.images[s]), g.images[t]);
      if (!g.eq(conj, g.images[sys.mul[t][s]])) {
        rep.g3 = false;
        note("G3 fails at t=" + std::to_string(t) + ", s=" + std::to_string(s));
      }
      if (s != t && g.eq(g.images[s], g.images[t])) rep.separates = false;
    }
  }
  rep.proper = rep.proper && rep.separates;
  return rep;
}

struct PermGroup {
  std::vector<std::vector<int>> generators;
  std::size_t order = 0;
  std::vector<std::vector<int>> orbits;
};

// Subgroup of Sym(T) generated by t -> s.t. Throws std::length_error beyond the caps.
PermGroup terminal_group(const SymSystem& sys, std::size_t max_t = 64, std::size_t max_order = 1000000);

// ----- the terminal group A = K x| V of an extended root system -----

struct ReflectionLabel {
  IVec g;
  int alpha = 0;
  bool operator==(const ReflectionLabel& o) const { return alpha == o.alpha && g == o.g; }
};
struct LabelLess {
  bool operator()(const ReflectionLabel& a, const ReflectionLabel& b) const {
    if (a.alpha != b.alpha) return a.alpha < b.alpha;
    return VecLess{}(a.g, b.g);
  }
};

// Positive root wins; for BC a divisible root with even g is replaced by its half.
ReflectionLabel canonical(const FiniteRootSystem& rs, const ReflectionLabel& t);

struct AElement {
  IMat k;  // n x l over the coroot basis
  WeylElement v;

  static AElement identity(int n, int l);
  bool operator==(const AElement& o) const { return k == o.k && v == o.v; }
  bool is_identity() const { return k.isZero() && v.is_identity(); }
};

// v.k, with v acting on the coroot factor
IMat act_on_k(const WeylElement& v, const IMat& k);
AElement a_mul(const AElement& a, const AElement& b);
AElement a_inv(const AElement& a);
IMat k_part(const FiniteRootSystem& rs, const ReflectionLabel& t);
AElement a_generator(const FiniteRootSystem& rs, const ReflectionLabel& t);
std::pair<IVec, IVec> act_on_root(const FiniteRootSystem& rs, const AElement& a, const IVec& h, const IVec& lambda);
ReflectionLabel conj_reflect(const FiniteRootSystem& rs, const ReflectionLabel& t1, const ReflectionLabel& t2);

}  // namespace extweyl
