#pragma once

#include "extweyl/smith.hpp"

#include <string>
#include <vector>

namespace extweyl {

// Z^n modulo the row span of a relation matrix, in Smith coordinates.
class FPAbelianGroup {
 public:
  static FPAbelianGroup present(Eigen::Index n_generators, const BMat& relations);
  static FPAbelianGroup present(Eigen::Index n_generators, const IMat& relations) {
    return present(n_generators, cast_matrix<BigInt>(relations));
  }

  Eigen::Index n_generators() const { return n_gens_; }
  const BMat& relations() const { return relations_; }

  // Non-unit diagonal entries in Smith order; 0 stands for a copy of Z.
  const std::vector<BigInt>& invariant_factors() const { return moduli_; }
  int free_rank() const;
  std::vector<BigInt> torsion() const;
  bool is_trivial() const { return moduli_.empty(); }
  bool is_infinite_cyclic() const { return moduli_.size() == 1 && moduli_[0] == 0; }

  // Coordinates in Z^r (+) Z_{d_i}; torsion parts reduced into [0, d).
  std::vector<BigInt> project(const BVec& x) const;
  std::vector<BigInt> project(const IVec& x) const { return project(cast_vector<BigInt>(x)); }
  std::vector<BigInt> project_generator(Eigen::Index i) const;
  bool is_zero(const BVec& x) const;
  bool is_zero(const IVec& x) const { return is_zero(cast_vector<BigInt>(x)); }

  // A vector over the generators whose projection is the k-th unit component.
  BVec witness(std::size_t component) const;

  // e.g. "Z x Z2", "0".
  std::string describe() const;

 private:
  Eigen::Index n_gens_ = 0;
  BMat relations_;
  BMat q_, qinv_;
  std::vector<Eigen::Index> kept_;
  std::vector<BigInt> moduli_;
};

// Quotient L1 / L2 of two row lattices, presented on a basis of L1.
// Throws std::invalid_argument unless L2 lies inside L1.
struct LatticeQuotient {
  BMat basis;  // echelon basis of L1
  FPAbelianGroup group;
  // coordinates of a vector of L1 in `basis`, projected to the quotient
  std::vector<BigInt> project(const BVec& v) const;
  std::vector<BigInt> project(const IVec& v) const { return project(cast_vector<BigInt>(v)); }
};

LatticeQuotient lattice_quotient(const BMat& l1_generators, const BMat& l2_generators);

std::string describe_factors(const std::vector<BigInt>& factors);

}  // namespace extweyl
