#include "extweyl/lattice.hpp"

#include <stdexcept>

namespace extweyl {

std::string to_string(Side s) { return s == Side::Root ? "root" : "coroot"; }

Side parse_side(const std::string& s) {
  if (s == "root") return Side::Root;
  if (s == "coroot") return Side::Coroot;
  throw std::invalid_argument("lattice side must be 'root' or 'coroot', got '" + s + "'");
}

BVec tensor(const IVec& lambda, const IVec& mu) {
  const Eigen::Index l = lambda.size();
  BVec t(l * mu.size());
  for (Eigen::Index i = 0; i < l; ++i)
    for (Eigen::Index j = 0; j < mu.size(); ++j) t(i * mu.size() + j) = BigInt(lambda(i) * mu(j));
  return t;
}

namespace {

const IMat& action(const WeylElement& w, Side s) { return s == Side::Root ? w.m : w.mc; }

const IVec& vector_of(const FiniteRootSystem& rs, int i, Side s) {
  return s == Side::Root ? rs.root(i) : rs.coroot(i);
}

std::vector<BVec> coinvariant_relations(const FiniteRootSystem& rs, Side left, Side right) {
  const int l = rs.rank();
  std::vector<BVec> rel;
  for (int b : rs.basis()) {
    WeylElement s = rs.reflection(b);
    const IMat& a = action(s, left);
    const IMat& c = action(s, right);
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) {
        BVec r = tensor(a.col(i), c.col(j));
        r(i * l + j) -= 1;
        if (!r.isZero()) rel.push_back(r);
      }
  }
  return rel;
}

BMat stack(const std::vector<BVec>& rows, Eigen::Index width) {
  BMat m(static_cast<Eigen::Index>(rows.size()), width);
  for (std::size_t i = 0; i < rows.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
  return m;
}

// Roots whose image on the given side is of minimal length there.
std::vector<bool> short_on_side(const FiniteRootSystem& rs, Side s) {
  IMat f = s == Side::Root ? invariant_form(rs) : invariant_coform(rs);
  std::vector<std::int64_t> n(rs.size());
  std::int64_t lo = -1;
  for (int i = 0; i < rs.size(); ++i) {
    const IVec& v = vector_of(rs, i, s);
    n[i] = (v.transpose() * f * v)(0);
    if (lo < 0 || n[i] < lo) lo = n[i];
  }
  std::vector<bool> out(rs.size());
  for (int i = 0; i < rs.size(); ++i) out[i] = n[i] == lo;
  return out;
}

}  // namespace

FPAbelianGroup coinvariants(const FiniteRootSystem& rs, Side left, Side right) {
  const int l = rs.rank();
  return FPAbelianGroup::present(l * l, stack(coinvariant_relations(rs, left, right), l * l));
}

BoxQuotient box_quotient(const FiniteRootSystem& rs, Side left, Side right) {
  const int l = rs.rank();
  auto rel = coinvariant_relations(rs, left, right);
  // Same-side squares only kill perpendicular pairs of short elements; mixed ones kill all.
  const bool mixed = left != right;
  std::vector<bool> shortish = mixed ? std::vector<bool>(rs.size(), true) : short_on_side(rs, left);
  for (int a = 0; a < rs.size(); ++a) {
    if (!shortish[a]) continue;
    for (int b = 0; b < rs.size(); ++b)
      if (shortish[b] && rs.pairing_roots(a, b) == 0)
        rel.push_back(tensor(vector_of(rs, a, left), vector_of(rs, b, right)));
  }
  BoxQuotient q;
  q.left = left;
  q.right = right;
  q.group = FPAbelianGroup::present(l * l, stack(rel, l * l));
  q.form = IMat::Zero(l, l);
  if (!q.group.is_infinite_cyclic()) return q;
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) q.form(i, j) = static_cast<std::int64_t>(q.group.project_generator(i * l + j)[0]);
  int b0 = rs.basis()[0];
  std::int64_t ref = q.value(vector_of(rs, b0, left), vector_of(rs, b0, right));
  if (ref < 0) q.form = -q.form;
  return q;
}

IMat boxtimes_form(const FiniteRootSystem& rs) { return box_quotient(rs, Side::Coroot, Side::Coroot).form; }

IMat root_to_coroot_embedding(const FiniteRootSystem& rs) {
  if (!rs.type().is_reduced() || rs.type().is_simply_laced())
    throw std::domain_error("the embedding of L into its coroot lattice needs a reduced non-simply laced type");
  const int k = k_delta(rs.type());
  IMat e(rs.rank(), rs.rank());
  for (int j = 0; j < rs.rank(); ++j) {
    int b = rs.basis()[j];
    e.col(j) = rs.length(b) == LengthClass::Short ? rs.coroot(b) : IVec(k * rs.coroot(b));
  }
  return e;
}

namespace {

// |m| such that target(i, j) = m * source(i, j) for every basis pair.
std::int64_t index_of_map(const IMat& source, const IMat& target) {
  std::int64_t m = 0;
  bool set = false;
  for (Eigen::Index i = 0; i < source.rows(); ++i)
    for (Eigen::Index j = 0; j < source.cols(); ++j)
      if (source(i, j) != 0) {
        if (target(i, j) % source(i, j) != 0) throw std::logic_error("induced map is not a multiple");
        std::int64_t c = target(i, j) / source(i, j);
        if (set && c != m) throw std::logic_error("induced map is not well defined");
        m = c;
        set = true;
      }
  for (Eigen::Index i = 0; i < source.rows(); ++i)
    for (Eigen::Index j = 0; j < source.cols(); ++j)
      if (target(i, j) != m * source(i, j)) throw std::logic_error("induced map is not well defined");
  return m < 0 ? -m : m;
}

}  // namespace

InclusionIndices inclusion_indices(const FiniteRootSystem& rs) {
  IMat iota = root_to_coroot_embedding(rs);
  auto ll = box_quotient(rs, Side::Root, Side::Root);
  auto lc = box_quotient(rs, Side::Root, Side::Coroot);
  auto cc = box_quotient(rs, Side::Coroot, Side::Coroot);
  if (!ll.group.is_infinite_cyclic() || !lc.group.is_infinite_cyclic() || !cc.group.is_infinite_cyclic())
    throw std::logic_error("box quotient is not infinite cyclic");
  // phi(x box y) = x box iota(y); psi(x box y) = iota(x) box y
  IMat phi_image = lc.form * iota;
  IMat psi_image = iota.transpose() * cc.form;
  return {index_of_map(ll.form, phi_image), index_of_map(lc.form, psi_image)};
}

}  // namespace extweyl
