#include "extweyl/root_system.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>

namespace extweyl {

std::string to_string(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E: return "E";
    case Family::F: return "F";
    case Family::G: return "G";
    case Family::BC: return "BC";
  }
  return "?";
}

std::string to_string(LengthClass c) {
  switch (c) {
    case LengthClass::Short: return "short";
    case LengthClass::Long: return "long";
    case LengthClass::ExtraLong: return "extralong";
  }
  return "?";
}

Family parse_family(const std::string& s) {
  static const std::map<std::string, Family> table = {
      {"A", Family::A}, {"B", Family::B}, {"C", Family::C}, {"D", Family::D},
      {"E", Family::E}, {"F", Family::F}, {"G", Family::G}, {"BC", Family::BC}};
  auto it = table.find(s);
  if (it == table.end()) throw std::invalid_argument("unknown root system family '" + s + "'");
  return it->second;
}

void RootSystemType::validate() const {
  auto fail = [&](const std::string& rule) {
    throw std::invalid_argument("invalid root system " + name() + ": " + rule);
  };
  switch (family) {
    case Family::A: if (rank < 1) fail("type A needs rank >= 1"); break;
    case Family::B: if (rank < 2) fail("type B needs rank >= 2"); break;
    case Family::C: if (rank < 3) fail("type C needs rank >= 3"); break;
    case Family::D: if (rank < 4) fail("type D needs rank >= 4"); break;
    case Family::E: if (rank < 6 || rank > 8) fail("type E needs rank 6, 7 or 8"); break;
    case Family::F: if (rank != 4) fail("type F needs rank 4"); break;
    case Family::G: if (rank != 2) fail("type G needs rank 2"); break;
    case Family::BC: if (rank < 1) fail("type BC needs rank >= 1"); break;
  }
}

bool RootSystemType::is_simply_laced() const {
  return family == Family::A || family == Family::D || family == Family::E;
}

std::string RootSystemType::name() const { return to_string(family) + std::to_string(rank); }

int k_delta(const RootSystemType& t) {
  switch (t.family) {
    case Family::B:
    case Family::C:
    case Family::F:
    case Family::BC: return 2;
    case Family::G: return 3;
    default: throw std::domain_error("k_delta is undefined for simply laced type " + t.name());
  }
}

WeylElement WeylElement::identity(int rank) {
  return {IMat::Identity(rank, rank), IMat::Identity(rank, rank)};
}

IMat unimodular_inverse(const IMat& m) {
  const Eigen::Index n = m.rows();
  BMat aug(n, 2 * n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      aug(i, j) = m(i, j);
      aug(i, n + j) = i == j ? 1 : 0;
    }
  BMat h = hermite_rows<BigInt>(aug);
  if (h.rows() != n) throw std::invalid_argument("matrix is singular");
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (h(i, j) != (i == j ? 1 : 0)) throw std::invalid_argument("matrix is not unimodular");
  IMat inv(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) inv(i, j) = static_cast<std::int64_t>(h(i, n + j));
  return inv;
}

WeylElement WeylElement::inverse() const { return {unimodular_inverse(m), unimodular_inverse(mc)}; }

bool WeylElement::is_identity() const {
  return m == IMat::Identity(m.rows(), m.cols()) && mc == IMat::Identity(mc.rows(), mc.cols());
}

std::int64_t WeylElement::det() const {
  // entries are small and the value is +-1, so the floating determinant is exact after rounding
  return std::llround(m.cast<double>().determinant());
}

namespace {

// Symmetrized Gram data: squared length per simple root and off-diagonal products,
// scaled so that everything is integral. Cartan(i,j) = 2 S(i,j) / S(i,i).
IMat symmetrized_gram(Family f, int l) {
  IMat s = IMat::Zero(l, l);
  auto chain = [&](int len, std::int64_t d) {
    for (int i = 0; i < len; ++i) s(i, i) = d;
    for (int i = 0; i + 1 < len; ++i) s(i, i + 1) = s(i + 1, i) = -d / 2;
  };
  switch (f) {
    case Family::A: chain(l, 2); break;
    case Family::B:
    case Family::BC:
      chain(l, 2);
      s(l - 1, l - 1) = 1;
      if (l >= 2) s(l - 2, l - 1) = s(l - 1, l - 2) = -1;
      break;
    case Family::C:
      chain(l, 2);
      s(l - 1, l - 1) = 4;
      s(l - 2, l - 1) = s(l - 1, l - 2) = -2;
      break;
    case Family::D:
      chain(l - 1, 2);
      s(l - 1, l - 1) = 2;
      s(l - 3, l - 1) = s(l - 1, l - 3) = -1;
      break;
    case Family::E: {
      for (int i = 0; i < l; ++i) s(i, i) = 2;
      auto edge = [&](int a, int b) { s(a - 1, b - 1) = s(b - 1, a - 1) = -1; };
      edge(1, 3);
      edge(3, 4);
      edge(4, 5);
      edge(5, 6);
      edge(2, 4);
      if (l >= 7) edge(6, 7);
      if (l >= 8) edge(7, 8);
      break;
    }
    case Family::F:
      s(0, 0) = s(1, 1) = 4;
      s(2, 2) = s(3, 3) = 2;
      s(0, 1) = s(1, 0) = -2;
      s(1, 2) = s(2, 1) = -2;
      s(2, 3) = s(3, 2) = -1;
      break;
    case Family::G:
      s(0, 0) = 2;
      s(1, 1) = 6;
      s(0, 1) = s(1, 0) = -3;
      break;
  }
  return s;
}

IMat cartan_from_gram(const IMat& s) {
  IMat a(s.rows(), s.cols());
  for (Eigen::Index i = 0; i < s.rows(); ++i)
    for (Eigen::Index j = 0; j < s.cols(); ++j) a(i, j) = 2 * s(i, j) / s(i, i);
  return a;
}

std::int64_t gcd_of_entries(const IMat& m) {
  std::int64_t g = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) g = std::gcd(g, m(i, j));
  return g;
}

IMat form_from_pairs(const std::vector<IVec>& duals, const IMat& pairing_left) {
  const Eigen::Index l = pairing_left.cols();
  IMat f = IMat::Zero(l, l);
  for (const auto& d : duals) {
    IVec w = pairing_left.transpose() * d;
    f += w * w.transpose();
  }
  std::int64_t g = gcd_of_entries(f);
  return g ? IMat(f / g) : f;
}

}  // namespace

FiniteRootSystem FiniteRootSystem::build(const RootSystemType& t) {
  t.validate();
  const int l = t.rank;
  FiniteRootSystem rs;
  rs.type_ = t;

  IMat cart = cartan_from_gram(symmetrized_gram(t.family, l));
  std::vector<std::pair<IVec, IVec>> seeds;
  auto unit = [&](int i, std::int64_t c) {
    IVec v = IVec::Zero(l);
    v(i) = c;
    return v;
  };
  if (t.family == Family::BC) {
    // coroot basis: simple coroots, except the last one is the coroot of 2 alpha_l
    rs.pmat_ = cart;
    for (int j = 0; j < l; ++j) rs.pmat_(l - 1, j) = cart(l - 1, j) / 2;
    for (int i = 0; i + 1 < l; ++i) seeds.emplace_back(unit(i, 1), unit(i, 1));
    seeds.emplace_back(unit(l - 1, 1), unit(l - 1, 2));
    seeds.emplace_back(unit(l - 1, 2), unit(l - 1, 1));
  } else {
    rs.pmat_ = cart;
    for (int i = 0; i < l; ++i) seeds.emplace_back(unit(i, 1), unit(i, 1));
  }
  const IMat& P = rs.pmat_;
  const std::vector<std::pair<IVec, IVec>> simple(seeds.begin(), seeds.begin() + l);

  std::map<IVec, IVec, VecLess> found;
  std::deque<std::pair<IVec, IVec>> queue(seeds.begin(), seeds.end());
  for (auto& s : seeds) found.emplace(s.first, s.second);
  while (!queue.empty()) {
    auto [r, c] = queue.front();
    queue.pop_front();
    for (const auto& [sr, sc] : simple) {
      IVec r2 = r - (sc.transpose() * P * r)(0) * sr;
      IVec c2 = c - (c.transpose() * P * sr)(0) * sc;
      if (found.emplace(r2, c2).second) queue.emplace_back(r2, c2);
    }
  }

  std::vector<std::pair<IVec, IVec>> pos;
  for (auto& [r, c] : found)
    if ((r.array() >= 0).all()) pos.emplace_back(r, c);
  std::sort(pos.begin(), pos.end(), [](const auto& a, const auto& b) {
    auto ha = a.first.sum(), hb = b.first.sum();
    if (ha != hb) return ha < hb;
    return VecLess{}(b.first, a.first);
  });
  rs.n_pos_ = static_cast<int>(pos.size());
  for (auto& [r, c] : pos) {
    rs.roots_.push_back(r);
    rs.coroots_.push_back(c);
  }
  for (auto& [r, c] : pos) {
    rs.roots_.push_back(-r);
    rs.coroots_.push_back(-c);
  }
  if (static_cast<int>(found.size()) != rs.size())
    throw std::logic_error("root closure produced a non-symmetric set");
  for (int i = 0; i < rs.size(); ++i) {
    rs.root_index_[rs.roots_[i]] = i;
    rs.coroot_index_[rs.coroots_[i]] = i;
  }
  for (int i = 0; i < l; ++i) rs.basis_.push_back(*rs.index_of_root(unit(i, 1)));

  rs.form_ = form_from_pairs(rs.coroots_, P);
  std::int64_t shortest = -1;
  for (int i = 0; i < rs.size(); ++i) {
    auto n = rs.norm(i);
    if (shortest < 0 || n < shortest) shortest = n;
  }
  for (int i = 0; i < rs.size(); ++i) {
    auto n = rs.norm(i);
    LengthClass c = LengthClass::Short;
    if (n != shortest) c = (t.family == Family::BC && n == 4 * shortest) ? LengthClass::ExtraLong : LengthClass::Long;
    rs.lengths_.push_back(c);
  }

  rs.cartan_ = IMat(l, l);
  rs.dynkin_ = IMat::Zero(l, l);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) rs.cartan_(i, j) = rs.pairing(rs.basis_[i], rs.roots_[rs.basis_[j]]);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      if (i != j) rs.dynkin_(i, j) = rs.cartan_(i, j) * rs.cartan_(j, i);
  return rs;
}

std::vector<LengthClass> FiniteRootSystem::length_classes() const {
  std::vector<LengthClass> out;
  for (auto c : {LengthClass::Short, LengthClass::Long, LengthClass::ExtraLong})
    if (std::find(lengths_.begin(), lengths_.end(), c) != lengths_.end()) out.push_back(c);
  return out;
}

std::vector<int> FiniteRootSystem::roots_of_class(LengthClass c) const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (lengths_[i] == c) out.push_back(i);
  return out;
}

std::int64_t FiniteRootSystem::pair(const IVec& coroot_coords, const IVec& root_coords) const {
  return (coroot_coords.transpose() * pmat_ * root_coords)(0);
}

std::int64_t FiniteRootSystem::pairing(int coroot_of, const IVec& lambda) const {
  return pair(coroots_[coroot_of], lambda);
}

IVec FiniteRootSystem::reflect(int a, const IVec& lambda) const {
  return lambda - pairing(a, lambda) * roots_[a];
}

IVec FiniteRootSystem::reflect_coroot(int a, const IVec& mu) const {
  return mu - pair(mu, roots_[a]) * coroots_[a];
}

WeylElement FiniteRootSystem::reflection(int a) const {
  const int l = rank();
  IMat id = IMat::Identity(l, l);
  IMat m = id - roots_[a] * (coroots_[a].transpose() * pmat_);
  IMat mc = id - coroots_[a] * (pmat_ * roots_[a]).transpose();
  return {m, mc};
}

int FiniteRootSystem::reflect_index(int a, int b) const { return *index_of_root(reflect(a, roots_[b])); }

std::optional<int> FiniteRootSystem::index_of_root(const IVec& v) const {
  auto it = root_index_.find(v);
  if (it == root_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> FiniteRootSystem::index_of_coroot(const IVec& v) const {
  auto it = coroot_index_.find(v);
  if (it == coroot_index_.end()) return std::nullopt;
  return it->second;
}

std::int64_t FiniteRootSystem::norm(int i) const { return (roots_[i].transpose() * form_ * roots_[i])(0); }

bool FiniteRootSystem::perpendicular(int a, int b) const {
  return pairing_roots(a, b) == 0 && pairing_roots(b, a) == 0;
}

WeylElement coxeter_evaluate(const FiniteRootSystem& rs, const std::vector<int>& word) {
  WeylElement w = WeylElement::identity(rs.rank());
  for (int a : word) {
    if (a < 0 || a >= rs.size()) throw std::out_of_range("root index out of range");
    w = w * rs.reflection(a);
  }
  return w;
}

namespace {

LEffQuotient l_eff_generic(const FiniteRootSystem& rs, bool coroot_side) {
  const int l = rs.rank();
  std::vector<IVec> rel;
  for (int b : rs.basis()) {
    WeylElement s = rs.reflection(b);
    const IMat& m = coroot_side ? s.mc : s.m;
    for (int j = 0; j < l; ++j) {
      IVec e = IVec::Zero(l);
      e(j) = 1;
      IVec d = e - m * e;
      if (!d.isZero()) rel.push_back(d);
    }
  }
  IMat r(static_cast<Eigen::Index>(rel.size()), l);
  for (std::size_t i = 0; i < rel.size(); ++i) r.row(static_cast<Eigen::Index>(i)) = rel[i].transpose();
  LEffQuotient q{FPAbelianGroup::present(l, r), {}};
  for (int i = 0; i < rs.size(); ++i) q.root_images.push_back(q.group.project(coroot_side ? rs.coroot(i) : rs.root(i)));
  return q;
}

}  // namespace

LEffQuotient l_eff_quotient(const FiniteRootSystem& rs) { return l_eff_generic(rs, false); }
LEffQuotient l_eff_quotient_coroot(const FiniteRootSystem& rs) { return l_eff_generic(rs, true); }

IMat invariant_form(const FiniteRootSystem& rs) { return rs.form_; }

IMat invariant_coform(const FiniteRootSystem& rs) { return form_from_pairs(rs.roots(), rs.pairing_matrix().transpose()); }

std::optional<std::int64_t> invariant_form_multiple(const FiniteRootSystem& rs, const IMat& m) {
  IMat f = invariant_form(rs);
  // f has a positive diagonal, so the multiple is read off the (0,0) entry
  if (m(0, 0) % f(0, 0) != 0) return std::nullopt;
  std::int64_t k = m(0, 0) / f(0, 0);
  if (m != k * f) return std::nullopt;
  return k;
}

std::vector<int> reflection_class_of_roots(const FiniteRootSystem& rs) {
  const int l = rs.rank();
  // basis roots joined by an odd Coxeter label (a simple edge) are conjugate
  std::vector<int> parent(l);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j)
      if (i != j && rs.dynkin_adjacency()(i, j) == 1) parent[find(i)] = find(j);
  std::map<int, int> label;
  for (int i = 0; i < l; ++i) label.emplace(find(i), static_cast<int>(label.size()));

  std::vector<int> cls(rs.size(), -1);
  for (int start = 0; start < rs.size(); ++start) {
    if (cls[start] >= 0) continue;
    // walk the orbit under simple reflections until a basis root (or its negative) appears
    std::vector<int> seen{start};
    std::set<int> visited{start};
    int hit = -1;
    for (std::size_t k = 0; k < seen.size() && hit < 0; ++k) {
      int x = seen[k];
      for (int i = 0; i < l; ++i) {
        int b = rs.basis()[i];
        if (x == b || x == rs.neg(b)) {
          hit = label[find(i)];
          break;
        }
      }
      if (hit >= 0) break;
      for (int b : rs.basis()) {
        int y = rs.reflect_index(b, x);
        if (visited.insert(y).second) seen.push_back(y);
      }
    }
    // divisible roots of BC share the reflection of their half
    for (int x : seen) cls[x] = hit;
  }
  if (rs.type().family == Family::BC)
    for (int i = 0; i < rs.size(); ++i)
      if (rs.is_divisible(i)) {
        IVec half = rs.root(i) / 2;
        cls[i] = cls[*rs.index_of_root(half)];
      }
  return cls;
}

int reflection_class_count(const FiniteRootSystem& rs) {
  auto c = reflection_class_of_roots(rs);
  return *std::max_element(c.begin(), c.end()) + 1;
}

}  // namespace extweyl
