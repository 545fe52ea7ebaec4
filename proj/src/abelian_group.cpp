#include "extweyl/abelian_group.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace extweyl {

FPAbelianGroup FPAbelianGroup::present(Eigen::Index n_generators, const BMat& relations) {
  FPAbelianGroup g;
  g.n_gens_ = n_generators;
  g.relations_ = relations.cols() == n_generators ? relations : BMat(0, n_generators);
  if (relations.rows() > 0 && relations.cols() != n_generators)
    throw std::invalid_argument("relation width does not match generator count");
  // the row span is all that matters; a Hermite basis keeps the Smith step small
  BMat basis = g.relations_.rows() > n_generators ? hermite_rows<BigInt>(g.relations_) : g.relations_;
  auto snf = smith_normal_form<BigInt>(basis);
  g.q_ = snf.Q;
  g.qinv_ = snf.Qinv;
  const Eigen::Index diag = std::min(snf.D.rows(), snf.D.cols());
  for (Eigen::Index i = 0; i < n_generators; ++i) {
    BigInt d = i < diag ? snf.D(i, i) : BigInt(0);
    if (d == 1) continue;
    g.kept_.push_back(i);
    g.moduli_.push_back(d);
  }
  return g;
}

int FPAbelianGroup::free_rank() const {
  return static_cast<int>(std::count(moduli_.begin(), moduli_.end(), BigInt(0)));
}

std::vector<BigInt> FPAbelianGroup::torsion() const {
  std::vector<BigInt> t;
  for (const auto& d : moduli_)
    if (d != 0) t.push_back(d);
  return t;
}

std::vector<BigInt> FPAbelianGroup::project(const BVec& x) const {
  if (x.size() != n_gens_) throw std::invalid_argument("vector length does not match generator count");
  std::vector<BigInt> out;
  out.reserve(kept_.size());
  for (std::size_t k = 0; k < kept_.size(); ++k) {
    BigInt y = 0;
    for (Eigen::Index i = 0; i < n_gens_; ++i) y += x(i) * q_(i, kept_[k]);
    const BigInt& d = moduli_[k];
    if (d != 0) {
      y %= d;
      if (y < 0) y += d;
    }
    out.push_back(y);
  }
  return out;
}

std::vector<BigInt> FPAbelianGroup::project_generator(Eigen::Index i) const {
  BVec e = BVec::Constant(n_gens_, BigInt(0));
  e(i) = 1;
  return project(e);
}

bool FPAbelianGroup::is_zero(const BVec& x) const {
  for (const auto& c : project(x))
    if (c != 0) return false;
  return true;
}

BVec FPAbelianGroup::witness(std::size_t component) const {
  if (component >= kept_.size()) throw std::out_of_range("no such component");
  return qinv_.row(kept_[component]).transpose();
}

std::string describe_factors(const std::vector<BigInt>& factors) {
  std::vector<std::string> parts;
  for (const auto& d : factors)
    if (d == 0) parts.emplace_back("Z");
  std::vector<BigInt> tors;
  for (const auto& d : factors)
    if (d != 0) tors.push_back(d);
  std::sort(tors.begin(), tors.end());
  for (const auto& d : tors) parts.push_back("Z" + d.str());
  if (parts.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? " x " : "") << parts[i];
  return os.str();
}

std::string FPAbelianGroup::describe() const { return describe_factors(moduli_); }

std::vector<BigInt> LatticeQuotient::project(const BVec& v) const {
  auto coords = solve_in_rows<BigInt>(basis, v);
  if (!coords) throw std::invalid_argument("vector is not in the ambient lattice");
  return group.project(*coords);
}

LatticeQuotient lattice_quotient(const BMat& l1_generators, const BMat& l2_generators) {
  BMat basis = hermite_rows<BigInt>(l1_generators);
  BMat rel(l2_generators.rows(), basis.rows());
  for (Eigen::Index i = 0; i < l2_generators.rows(); ++i) {
    auto c = solve_in_rows<BigInt>(basis, l2_generators.row(i).transpose());
    if (!c) throw std::invalid_argument("sublattice generator outside the ambient lattice");
    rel.row(i) = c->transpose();
  }
  return {basis, FPAbelianGroup::present(basis.rows(), rel)};
}

}  // namespace extweyl
