#pragma once

#include "extweyl/abelian_group.hpp"
#include "extweyl/types.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace extweyl {

enum class Family { A, B, C, D, E, F, G, BC };
enum class LengthClass { Short, Long, ExtraLong };

std::string to_string(Family f);
std::string to_string(LengthClass c);
Family parse_family(const std::string& s);

struct RootSystemType {
  Family family = Family::A;
  int rank = 1;

  // Throws std::invalid_argument naming the violated rank constraint.
  void validate() const;
  bool is_simply_laced() const;  // A, D, E (A1 included)
  bool is_reduced() const { return family != Family::BC; }
  std::string name() const;  // "B3", "BC2", ...
  bool operator==(const RootSystemType&) const = default;
};

// Lacing integer: 2 for B, C, F4, BC and 3 for G2. Throws std::domain_error otherwise.
int k_delta(const RootSystemType& t);

// An element of the finite Weyl group, stored on the root lattice (m) and on
// the coroot lattice (mc). Both matrices act on column coordinate vectors.
struct WeylElement {
  IMat m;
  IMat mc;

  static WeylElement identity(int rank);
  WeylElement operator*(const WeylElement& o) const { return {m * o.m, mc * o.mc}; }
  WeylElement inverse() const;
  bool is_identity() const;
  bool operator==(const WeylElement& o) const { return m == o.m && mc == o.mc; }
  std::int64_t det() const;
};

IMat unimodular_inverse(const IMat& m);

class FiniteRootSystem {
 public:
  static FiniteRootSystem build(const RootSystemType& t);

  const RootSystemType& type() const { return type_; }
  int rank() const { return type_.rank; }
  int size() const { return static_cast<int>(roots_.size()); }
  int n_positive() const { return n_pos_; }
  int neg(int i) const { return i < n_pos_ ? i + n_pos_ : i - n_pos_; }
  bool is_positive(int i) const { return i < n_pos_; }

  // Root coordinates over the simple roots; coroot coordinates over the coroot basis.
  const std::vector<IVec>& roots() const { return roots_; }
  const std::vector<IVec>& coroots() const { return coroots_; }
  const IVec& root(int i) const { return roots_[i]; }
  const IVec& coroot(int i) const { return coroots_[i]; }
  const std::vector<int>& basis() const { return basis_; }
  LengthClass length(int i) const { return lengths_[i]; }
  const std::vector<LengthClass>& lengths() const { return lengths_; }
  std::vector<LengthClass> length_classes() const;  // classes present, in order sh, lg, ex
  std::vector<int> roots_of_class(LengthClass c) const;
  bool is_divisible(int i) const { return lengths_[i] == LengthClass::ExtraLong; }

  // P(i, j) = <coroot basis i, root basis j>.
  const IMat& pairing_matrix() const { return pmat_; }
  // Cartan matrix over the root basis: cartan(i, j) = <(b_i)^vee, b_j>.
  const IMat& cartan() const { return cartan_; }
  // Edge multiplicity between distinct basis roots.
  const IMat& dynkin_adjacency() const { return dynkin_; }

  std::int64_t pairing(int coroot_of, const IVec& lambda) const;
  std::int64_t pair(const IVec& coroot_coords, const IVec& root_coords) const;
  std::int64_t pairing_roots(int a, int b) const { return pairing(a, roots_[b]); }

  IVec reflect(int a, const IVec& lambda) const;
  IVec reflect_coroot(int a, const IVec& mu) const;
  WeylElement reflection(int a) const;
  int reflect_index(int a, int b) const;  // index of r_a . root b

  std::optional<int> index_of_root(const IVec& v) const;
  std::optional<int> index_of_coroot(const IVec& v) const;

  // Squared lengths under the normalized invariant form.
  std::int64_t norm(int i) const;
  // r_a and r_b distinct and commuting.
  bool perpendicular(int a, int b) const;

 private:
  RootSystemType type_;
  IMat pmat_, cartan_, dynkin_, form_;
  std::vector<IVec> roots_, coroots_;
  std::vector<LengthClass> lengths_;
  std::vector<int> basis_;
  int n_pos_ = 0;
  std::map<IVec, int, VecLess> root_index_, coroot_index_;

  friend IMat invariant_form(const FiniteRootSystem&);
};

WeylElement coxeter_evaluate(const FiniteRootSystem& rs, const std::vector<int>& word);

// L / L_eff together with the image of every root.
struct LEffQuotient {
  FPAbelianGroup group;
  std::vector<std::vector<BigInt>> root_images;
};
LEffQuotient l_eff_quotient(const FiniteRootSystem& rs);
// Same construction on the coroot lattice.
LEffQuotient l_eff_quotient_coroot(const FiniteRootSystem& rs);

// Sum over roots of <a^vee, x><a^vee, y>, divided by the gcd of its entries.
IMat invariant_form(const FiniteRootSystem& rs);
// The analogous form on the coroot lattice.
IMat invariant_coform(const FiniteRootSystem& rs);
// If M is an invariant symmetric form, the integer k with M = k * invariant_form.
std::optional<std::int64_t> invariant_form_multiple(const FiniteRootSystem& rs, const IMat& m);

// For each root, the basis index whose reflection class it shares (Coxeter conjugacy).
std::vector<int> reflection_class_of_roots(const FiniteRootSystem& rs);
int reflection_class_count(const FiniteRootSystem& rs);

}  // namespace extweyl
