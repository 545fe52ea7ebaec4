#pragma once

#include "extweyl/abelian_group.hpp"
#include "extweyl/root_system.hpp"

#include <string>

namespace extweyl {

enum class Side { Root, Coroot };

std::string to_string(Side s);
Side parse_side(const std::string& s);

// lambda (x) mu as a vector over the l^2 basis tensors e_i (x) f_j, index i*l + j.
BVec tensor(const IVec& lambda, const IVec& mu);

// L (x)_V L' : l^2 generators modulo (s.x)(x)(s.y) - x(x)y over basis reflections s.
FPAbelianGroup coinvariants(const FiniteRootSystem& rs, Side left, Side right);

// Coinvariants with the perpendicular relations added. The result is Z for every
// irreducible type; `form(i, j)` is the induced value on basis vectors, signed so
// that a basis root paired with itself (or with its coroot) is positive.
struct BoxQuotient {
  Side left = Side::Root, right = Side::Root;
  FPAbelianGroup group;
  IMat form;
  std::int64_t value(const IVec& x, const IVec& y) const { return (x.transpose() * form * y)(0); }
};
BoxQuotient box_quotient(const FiniteRootSystem& rs, Side left, Side right);

// The bilinear form L^vee x L^vee -> Z with the canonical generator; drives the cocycle.
IMat boxtimes_form(const FiniteRootSystem& rs);

// The V-equivariant embedding L -> L^vee: short roots to their coroot, long ones to k times their coroot.
// Columns are images of the simple roots in coroot-basis coordinates.
IMat root_to_coroot_embedding(const FiniteRootSystem& rs);

struct InclusionIndices {
  std::int64_t index_phi = 0;  // L box L -> L box L^vee
  std::int64_t index_psi = 0;  // L box L^vee -> L^vee box L^vee
};
// Domain error for simply laced or non-reduced input.
InclusionIndices inclusion_indices(const FiniteRootSystem& rs);

}  // namespace extweyl
