#pragma once

#include "extweyl/root_system.hpp"

#include <optional>
#include <string>
#include <vector>

namespace extweyl {

// A finite union of cosets of a full-rank sublattice H of Z^n.
class SSet {
 public:
  SSet() = default;
  // Rows of h_rows span H; representatives may be arbitrary members of their cosets.
  static SSet make(const IMat& h_rows, const std::vector<IVec>& reps);
  static SSet whole(int n);                     // Z^n
  static SSet multiples(int n, std::int64_t k);  // k Z^n

  int n() const { return static_cast<int>(h_.cols()); }
  const IMat& h() const { return h_; }
  const std::vector<IVec>& cosets() const { return reps_; }
  bool empty() const { return reps_.empty(); }
  bool contains(const IVec& g) const;
  IVec reduce(const IVec& g) const;
  std::int64_t exponent() const;  // exponent of Z^n / H
  bool operator==(const SSet& o) const { return h_ == o.h_ && reps_ == o.reps_; }

 private:
  IMat h_;
  std::vector<IVec> reps_;
};

// G = Z^n with a partition of the basis into G1 and G2.
struct FreeAbelianGroup {
  int rank = 0;
  std::vector<int> g1, g2;
};

struct ExtRootSystem {
  FiniteRootSystem delta;
  FreeAbelianGroup g;
  std::optional<SSet> s_sh, s_lg, s_ex;

  int n() const { return g.rank; }
  const SSet& s_of(LengthClass c) const;
  const SSet& s_for_root(int alpha) const { return s_of(delta.length(alpha)); }
  // lcm of the exponents of all moduli; every S-set is periodic modulo this times Z^n
  std::int64_t modulus() const;
};

bool membership(const ExtRootSystem& ers, const IVec& g, int alpha);

// All g in [0, m)^n lying in s (s must be periodic modulo m).
std::vector<IVec> residues_in(const SSet& s, std::int64_t m);

struct CheckItem {
  std::string name;
  bool ok = true;
  std::string witness;
};

struct Report {
  std::vector<CheckItem> items;
  bool ok() const;
  const CheckItem* first_failure() const;
  std::string summary() const;
};

// Axioms R0'-R3', the inclusion chains and, for reduced non-simply laced types, the twist conditions.
Report validate(const ExtRootSystem& ers);

// The two defining axioms and the five derived twist conditions, decided in a finite quotient of G.
Report check_twist(const ExtRootSystem& ers);

// Subgroup generated by an S-set, as an echelon basis.
IMat span_of(const SSet& s);

struct TrimResult {
  ExtRootSystem system;
  IMat lattice_map;  // new root coordinates -> old root coordinates (columns)
  IMat g_basis;      // rows: basis of G' in old G coordinates
  std::vector<int> root_map;  // old root index -> new root index (short roots go via their double)
};

TrimResult trim(const ExtRootSystem& ers);
// Image of (g, alpha) under the trim map, in the coordinates of the trimmed system.
std::pair<IVec, int> trim_root(const TrimResult& t, const ExtRootSystem& original, const IVec& g, int alpha);

// Extended-root action of r_(g,alpha) on (h, lambda) in G x L.
std::pair<IVec, IVec> reflect_extended(const FiniteRootSystem& rs, const IVec& g, int alpha, const IVec& h,
                                       const IVec& lambda);

// Convenience constructors for common configurations.
ExtRootSystem fully_extended(const RootSystemType& t, int n);
// Non-simply laced: S_sh = (Z^n, full) and S_lg = k G1 + G2 for the given split.
ExtRootSystem twisted(const RootSystemType& t, int n, const std::vector<int>& g1);

}  // namespace extweyl
