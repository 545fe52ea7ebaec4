#include "extweyl/ext_root.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace extweyl {

namespace {

std::string fmt(const IVec& v) {
  std::ostringstream os;
  os << "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) os << (i ? "," : "") << v(i);
  os << ")";
  return os.str();
}

IMat echelon(const IMat& rows) {
  return cast_matrix<std::int64_t>(hermite_rows<BigInt>(cast_matrix<BigInt>(rows)));
}

IMat rows_of(const std::vector<IVec>& v, int n) {
  IMat m(static_cast<Eigen::Index>(v.size()), n);
  for (std::size_t i = 0; i < v.size(); ++i) m.row(static_cast<Eigen::Index>(i)) = v[i].transpose();
  return m;
}

bool in_lattice(const IMat& echelon_basis, const IVec& v) {
  return solve_in_rows<BigInt>(cast_matrix<BigInt>(echelon_basis), cast_vector<BigInt>(v)).has_value();
}

void for_each_residue(int n, std::int64_t m, const std::function<void(const IVec&)>& f) {
  IVec v = IVec::Zero(n);
  for (;;) {
    f(v);
    int i = 0;
    while (i < n && ++v(i) == m) v(i++) = 0;
    if (i == n) return;
  }
}

IMat unit_rows(const std::vector<int>& idx, int n, std::int64_t scale) {
  IMat m = IMat::Zero(static_cast<Eigen::Index>(idx.size()), n);
  for (std::size_t i = 0; i < idx.size(); ++i) m(static_cast<Eigen::Index>(i), idx[i]) = scale;
  return m;
}

bool supported_on(const IVec& v, const std::vector<int>& idx) {
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (v(i) != 0 && std::find(idx.begin(), idx.end(), static_cast<int>(i)) == idx.end()) return false;
  return true;
}

}  // namespace

SSet SSet::make(const IMat& h_rows, const std::vector<IVec>& reps) {
  SSet s;
  IMat e = echelon(h_rows);
  if (e.rows() != h_rows.cols()) throw std::invalid_argument("modulus lattice H must have full rank");
  s.h_ = e;
  std::set<IVec, VecLess> uniq;
  for (const auto& r : reps) {
    if (r.size() != e.cols()) throw std::invalid_argument("coset representative has wrong length");
    uniq.insert(s.reduce(r));
  }
  s.reps_.assign(uniq.begin(), uniq.end());
  return s;
}

SSet SSet::whole(int n) { return make(IMat::Identity(n, n), {IVec::Zero(n)}); }

SSet SSet::multiples(int n, std::int64_t k) { return make(k * IMat::Identity(n, n), {IVec::Zero(n)}); }

IVec SSet::reduce(const IVec& g) const {
  IVec r = g;
  for (Eigen::Index i = 0; i < h_.rows(); ++i) {
    std::int64_t q = floor_div(r(i), h_(i, i));
    if (q) r -= q * h_.row(i).transpose();
  }
  return r;
}

bool SSet::contains(const IVec& g) const {
  IVec r = reduce(g);
  return std::binary_search(reps_.begin(), reps_.end(), r, VecLess{});
}

std::int64_t SSet::exponent() const {
  auto snf = smith_normal_form<BigInt>(cast_matrix<BigInt>(h_));
  BigInt e = 1;
  for (Eigen::Index i = 0; i < snf.D.rows(); ++i) e = std::max(e, snf.D(i, i));
  return static_cast<std::int64_t>(e);
}

const SSet& ExtRootSystem::s_of(LengthClass c) const {
  const std::optional<SSet>* s = c == LengthClass::Short ? &s_sh : c == LengthClass::Long ? &s_lg : &s_ex;
  if (!s->has_value()) throw std::invalid_argument("no S-set for the " + to_string(c) + " class");
  return **s;
}

std::int64_t ExtRootSystem::modulus() const {
  std::int64_t m = 1;
  for (auto* s : {&s_sh, &s_lg, &s_ex})
    if (s->has_value()) m = std::lcm(m, (*s)->exponent());
  return m;
}

bool membership(const ExtRootSystem& ers, const IVec& g, int alpha) {
  if (g.size() != ers.n()) throw std::invalid_argument("group element has wrong length");
  return ers.s_for_root(alpha).contains(g);
}

std::vector<IVec> residues_in(const SSet& s, std::int64_t m) {
  std::vector<IVec> out;
  for_each_residue(s.n(), m, [&](const IVec& v) {
    if (s.contains(v)) out.push_back(v);
  });
  return out;
}

bool Report::ok() const {
  return std::all_of(items.begin(), items.end(), [](const CheckItem& i) { return i.ok; });
}

const CheckItem* Report::first_failure() const {
  for (const auto& i : items)
    if (!i.ok) return &i;
  return nullptr;
}

std::string Report::summary() const {
  std::ostringstream os;
  for (const auto& i : items) {
    os << (i.ok ? "pass " : "FAIL ") << i.name;
    if (!i.witness.empty()) os << "  [" << i.witness << "]";
    os << "\n";
  }
  return os.str();
}

IMat span_of(const SSet& s) {
  std::vector<IVec> gens = s.cosets();
  for (Eigen::Index i = 0; i < s.h().rows(); ++i) gens.push_back(s.h().row(i).transpose());
  return echelon(rows_of(gens, s.n()));
}

namespace {

// a*A inside B, both periodic modulo m
std::optional<IVec> scaled_inclusion_witness(const SSet& a, std::int64_t k, const SSet& b, std::int64_t m) {
  for (const auto& x : residues_in(a, m))
    if (!b.contains(k * x)) return x;
  return std::nullopt;
}

void add_inclusion(Report& rep, const std::string& name, const SSet& a, std::int64_t k, const SSet& b,
                   std::int64_t m) {
  auto w = scaled_inclusion_witness(a, k, b, m);
  rep.items.push_back({name, !w, w ? "g=" + fmt(*w) : ""});
}

}  // namespace

Report validate(const ExtRootSystem& ers) {
  Report rep;
  const auto& d = ers.delta;
  const int n = ers.n();
  const auto classes = d.length_classes();

  for (auto c : classes) {
    bool present = c == LengthClass::Short ? ers.s_sh.has_value()
                   : c == LengthClass::Long ? ers.s_lg.has_value()
                                            : ers.s_ex.has_value();
    if (!present) {
      rep.items.push_back({"R0' S_" + to_string(c) + " nonempty", false, "missing S-set"});
      return rep;
    }
    const SSet& s = ers.s_of(c);
    if (s.n() != n) {
      rep.items.push_back({"S-set dimension", false, to_string(c) + " set has rank " + std::to_string(s.n())});
      return rep;
    }
    rep.items.push_back({"R0' S_" + to_string(c) + " nonempty", !s.empty(), s.empty() ? "no cosets" : ""});
  }
  if (!rep.ok()) return rep;

  std::vector<IVec> gens;
  for (auto c : classes) {
    const SSet& s = ers.s_of(c);
    gens.insert(gens.end(), s.cosets().begin(), s.cosets().end());
    for (Eigen::Index i = 0; i < s.h().rows(); ++i) gens.push_back(s.h().row(i).transpose());
  }
  {
    IMat e = n ? echelon(rows_of(gens, n)) : IMat(0, 0);
    bool ok = e.rows() == n && (n == 0 || e == IMat::Identity(n, n));
    rep.items.push_back({"R1' S-sets generate G", ok, ok ? "" : "span has index > 1"});
  }
  for (auto c : classes) {
    if (c == LengthClass::ExtraLong) continue;
    bool ok = ers.s_of(c).contains(IVec::Zero(n));
    rep.items.push_back({"R2' 0 in S_" + to_string(c), ok, ok ? "" : "0 missing"});
  }

  const std::int64_t m = ers.modulus();
  {
    std::set<std::tuple<int, int, std::int64_t, int>> cases;
    for (int a = 0; a < d.size(); ++a)
      for (int b = 0; b < d.size(); ++b)
        cases.emplace(static_cast<int>(d.length(a)), static_cast<int>(d.length(b)), d.pairing_roots(a, b),
                      static_cast<int>(d.length(d.reflect_index(a, b))));
    std::string witness;
    for (auto [ca, cb, p, cr] : cases) {
      const SSet& sa = ers.s_of(static_cast<LengthClass>(ca));
      const SSet& sb = ers.s_of(static_cast<LengthClass>(cb));
      const SSet& sr = ers.s_of(static_cast<LengthClass>(cr));
      auto ra = residues_in(sa, m);
      auto rb = residues_in(sb, m);
      for (const auto& x : rb) {
        for (const auto& y : ra)
          if (!sr.contains(x - p * y)) {
            witness = "beta " + to_string(static_cast<LengthClass>(cb)) + " g=" + fmt(x) + ", alpha " +
                      to_string(static_cast<LengthClass>(ca)) + " g=" + fmt(y) + ", pairing " + std::to_string(p);
            break;
          }
        if (!witness.empty()) break;
      }
      if (!witness.empty()) break;
    }
    rep.items.push_back({"R3' reflection closure", witness.empty(), witness});
  }

  if (!d.type().is_simply_laced()) {
    const int k = k_delta(d.type());
    auto has = [&](LengthClass c) { return std::find(classes.begin(), classes.end(), c) != classes.end(); };
    const bool sh = has(LengthClass::Short), lg = has(LengthClass::Long), ex = has(LengthClass::ExtraLong);
    if (sh && lg) {
      add_inclusion(rep, "k S_sh in S_lg", *ers.s_sh, k, *ers.s_lg, m);
      add_inclusion(rep, "S_lg in S_sh", *ers.s_lg, 1, *ers.s_sh, m);
    }
    if (lg && ex) {
      add_inclusion(rep, "k S_lg in S_ex", *ers.s_lg, k, *ers.s_ex, m);
      add_inclusion(rep, "S_ex in S_lg", *ers.s_ex, 1, *ers.s_lg, m);
    }
    if (sh && ex) {
      add_inclusion(rep, "k^2 S_sh in S_ex", *ers.s_sh, k * k, *ers.s_ex, m);
      add_inclusion(rep, "S_ex in S_sh", *ers.s_ex, 1, *ers.s_sh, m);
    }
    if (d.type().is_reduced()) {
      Report tw = check_twist(ers);
      for (auto& i : tw.items) rep.items.push_back({"twist " + i.name, i.ok, i.witness});
    }
  }
  return rep;
}

Report check_twist(const ExtRootSystem& ers) {
  Report rep;
  const auto& t = ers.delta.type();
  if (t.is_simply_laced()) {
    rep.items.push_back({"simply laced: tame without a split", true, ""});
    return rep;
  }
  if (!t.is_reduced()) throw std::domain_error("twist decompositions are defined after trimming");
  const int n = ers.n();
  const auto& g1 = ers.g.g1;
  const auto& g2 = ers.g.g2;
  {
    std::vector<int> all(g1);
    all.insert(all.end(), g2.begin(), g2.end());
    std::sort(all.begin(), all.end());
    std::vector<int> want(n);
    std::iota(want.begin(), want.end(), 0);
    if (all != want) {
      rep.items.push_back({"G1 and G2 partition the basis", false, ""});
      return rep;
    }
  }
  const std::int64_t k = k_delta(t);
  const std::int64_t m = ers.modulus();
  const std::int64_t big = k * m;
  const SSet& ssh = *ers.s_sh;
  const SSet& slg = *ers.s_lg;

  auto intersect = [&](const SSet& s, const std::vector<int>& part) {
    std::vector<IVec> out;
    for (const auto& x : residues_in(s, big))
      if (supported_on(x, part)) out.push_back(x);
    return out;
  };
  auto lattice_from = [&](const std::vector<IVec>& pts, const std::vector<int>& part) {
    std::vector<IVec> gens = pts;
    IMat u = unit_rows(part, n, m);
    for (Eigen::Index i = 0; i < u.rows(); ++i) gens.push_back(u.row(i).transpose());
    return gens.empty() ? IMat(0, n) : echelon(rows_of(gens, n));
  };
  // members of a lattice (or of k times it) supported on `part`, modulo `big`
  auto lattice_residues = [&](const IMat& lat, std::int64_t scale, const std::vector<int>& part) {
    std::vector<IVec> out;
    for_each_residue(n, big, [&](const IVec& v) {
      if (!supported_on(v, part)) return;
      for (Eigen::Index i = 0; i < v.size(); ++i)
        if (v(i) % scale != 0) return;
      IVec w = v / scale;
      if (lat.rows() > 0 ? in_lattice(lat, w) : w.isZero()) out.push_back(v);
    });
    return out;
  };
  auto sumset = [&](const std::vector<IVec>& a, const std::vector<IVec>& b) {
    std::set<IVec, VecLess> out;
    for (const auto& x : a)
      for (const auto& y : b) {
        IVec z = x + y;
        for (Eigen::Index i = 0; i < n; ++i) z(i) = mod_floor(z(i), big);
        out.insert(z);
      }
    return out;
  };
  auto compare = [&](const std::string& name, const SSet& s, const std::set<IVec, VecLess>& rhs) {
    auto lhs = residues_in(s, big);
    std::set<IVec, VecLess> l(lhs.begin(), lhs.end());
    std::string w;
    for (const auto& x : l)
      if (!rhs.count(x)) {
        w = "g=" + fmt(x) + " only on the left";
        break;
      }
    if (w.empty())
      for (const auto& x : rhs)
        if (!l.count(x)) {
          w = "g=" + fmt(x) + " only on the right";
          break;
        }
    rep.items.push_back({name, w.empty(), w});
  };
  auto lattice_equals = [&](const std::string& name, const IMat& a, const IMat& b) {
    bool ok = a == b;
    rep.items.push_back({name, ok, ok ? "" : "spans differ"});
  };

  auto sh1 = intersect(ssh, g1);
  auto lg2 = intersect(slg, g2);
  IMat span_sh1 = lattice_from(sh1, g1);
  IMat span_lg2 = lattice_from(lg2, g2);
  auto all_g2 = lattice_residues(g2.empty() ? IMat(0, n) : echelon(unit_rows(g2, n, 1)), 1, g2);
  auto k_g1 = lattice_residues(g1.empty() ? IMat(0, n) : echelon(unit_rows(g1, n, 1)), k, g1);

  compare("(T1) S_sh = (S_sh n G1) + <S_lg n G2>", ssh, sumset(sh1, lattice_residues(span_lg2, 1, g2)));
  compare("(T2) S_lg = k<S_sh n G1> + (S_lg n G2)", slg, sumset(lattice_residues(span_sh1, k, g1), lg2));
  compare("(i) S_sh = (S_sh n G1) + G2", ssh, sumset(sh1, all_g2));
  compare("(ii) S_lg = k G1 + (S_lg n G2)", slg, sumset(k_g1, lg2));

  IMat g1_lat = g1.empty() ? IMat(0, n) : echelon(unit_rows(g1, n, 1));
  IMat g2_lat = g2.empty() ? IMat(0, n) : echelon(unit_rows(g2, n, 1));
  lattice_equals("(iii) <G2 n S_lg> = G2", span_lg2, g2_lat);
  lattice_equals("(iv) <G1 n S_sh> = G1", span_sh1, g1_lat);
  lattice_equals("(v) <S_sh> = G", span_of(ssh), echelon(IMat::Identity(n, n)));
  {
    std::vector<IVec> gens;
    for (int i : g1) gens.push_back(IVec::Unit(n, i) * k);
    for (int i : g2) gens.push_back(IVec::Unit(n, i));
    lattice_equals("(v) <S_lg> = k G1 + G2", span_of(slg), echelon(rows_of(gens, n)));
  }
  return rep;
}

std::pair<IVec, IVec> reflect_extended(const FiniteRootSystem& rs, const IVec& g, int alpha, const IVec& h,
                                       const IVec& lambda) {
  std::int64_t p = rs.pairing(alpha, lambda);
  return {h - p * g, lambda - p * rs.root(alpha)};
}

ExtRootSystem fully_extended(const RootSystemType& t, int n) {
  ExtRootSystem e{FiniteRootSystem::build(t), {n, {}, {}}, {}, {}, {}};
  for (int i = 0; i < n; ++i) e.g.g2.push_back(i);
  for (auto c : e.delta.length_classes()) {
    if (c == LengthClass::Short) e.s_sh = SSet::whole(n);
    if (c == LengthClass::Long) e.s_lg = SSet::whole(n);
    if (c == LengthClass::ExtraLong) e.s_ex = SSet::whole(n);
  }
  return e;
}

ExtRootSystem twisted(const RootSystemType& t, int n, const std::vector<int>& g1) {
  if (t.is_simply_laced() || !t.is_reduced()) throw std::domain_error("twisted configurations need a reduced non-simply laced type");
  ExtRootSystem e{FiniteRootSystem::build(t), {n, g1, {}}, {}, {}, {}};
  for (int i = 0; i < n; ++i)
    if (std::find(g1.begin(), g1.end(), i) == g1.end()) e.g.g2.push_back(i);
  const std::int64_t k = k_delta(t);
  IMat h = IMat::Identity(n, n);
  for (int i : g1) h(i, i) = k;
  e.s_sh = SSet::whole(n);
  e.s_lg = SSet::make(h, {IVec::Zero(n)});
  return e;
}

namespace {

// Columns: images of the simple roots of the trimmed type inside the BC root lattice.
IMat trim_lattice_map(int l) {
  IMat phi = IMat::Zero(l, l);
  if (l == 1) {
    phi(0, 0) = 2;
  } else if (l == 2) {
    phi(1, 0) = 2;  // long simple root of B2 -> 2 alpha_2
    phi(0, 1) = 1;  // short simple root of B2 -> alpha_1
  } else {
    for (int i = 0; i + 1 < l; ++i) phi(i, i) = 1;
    phi(l - 1, l - 1) = 2;
  }
  return phi;
}

RootSystemType trimmed_type(int l) {
  if (l == 1) return {Family::A, 1};
  if (l == 2) return {Family::B, 2};
  return {Family::C, l};
}

}  // namespace

TrimResult trim(const ExtRootSystem& ers) {
  const auto& d = ers.delta;
  if (d.type().family != Family::BC) throw std::domain_error("trim applies to type BC only");
  const int l = d.rank();
  const int n = ers.n();
  TrimResult out;
  out.lattice_map = trim_lattice_map(l);
  FiniteRootSystem dn = FiniteRootSystem::build(trimmed_type(l));

  // roots of the trimmed type must land exactly on the long and extra long roots
  std::set<IVec, VecLess> image, target;
  std::map<IVec, int, VecLess> image_index;
  for (int i = 0; i < dn.size(); ++i) {
    IVec v = out.lattice_map * dn.root(i);
    image.insert(v);
    image_index[v] = i;
  }
  for (int i = 0; i < d.size(); ++i)
    if (d.length(i) != LengthClass::Short) target.insert(d.root(i));
  if (image != target) throw std::logic_error("trim lattice map does not match the root sets");
  out.root_map.resize(d.size());
  for (int i = 0; i < d.size(); ++i) {
    IVec v = d.length(i) == LengthClass::Short ? IVec(2 * d.root(i)) : d.root(i);
    out.root_map[i] = image_index.at(v);
  }

  // G' is spanned by the group parts of all trimmed roots
  std::vector<IVec> gens;
  auto add_span = [&](const SSet& s, std::int64_t scale) {
    for (const auto& r : s.cosets()) gens.push_back(scale * r);
    for (Eigen::Index i = 0; i < s.h().rows(); ++i) gens.push_back(scale * s.h().row(i).transpose());
  };
  add_span(*ers.s_sh, 2);
  if (ers.s_lg) add_span(*ers.s_lg, 1);
  add_span(*ers.s_ex, 1);
  out.g_basis = echelon(rows_of(gens, n));
  if (out.g_basis.rows() != n) throw std::logic_error("trimmed group has lower rank");

  const std::int64_t m2 = 2 * ers.modulus();
  auto to_old = [&](const IVec& gp) -> IVec { return out.g_basis.transpose() * gp; };
  auto collect = [&](const std::function<bool(const IVec&)>& member) {
    std::vector<IVec> reps;
    for_each_residue(n, m2, [&](const IVec& gp) {
      if (member(to_old(gp))) reps.push_back(gp);
    });
    return SSet::make(m2 * IMat::Identity(n, n), reps);
  };
  auto ex_member = [&](const IVec& g) {
    if (ers.s_ex->contains(g)) return true;
    for (Eigen::Index i = 0; i < g.size(); ++i)
      if (g(i) % 2 != 0) return false;
    return ers.s_sh->contains(IVec(g / 2));
  };

  ExtRootSystem r{dn, {n, {}, {}}, {}, {}, {}};
  if (l == 1) {
    r.s_sh = collect(ex_member);
  } else {
    r.s_sh = collect([&](const IVec& g) { return ers.s_lg->contains(g); });
    r.s_lg = collect(ex_member);
  }
  if (l == 1) {
    for (int i = 0; i < n; ++i) r.g.g2.push_back(i);
  } else {
    // search the basis partitions for a twist decomposition
    bool found = false;
    for (unsigned mask = 0; mask < (1u << n) && !found; ++mask) {
      r.g.g1.clear();
      r.g.g2.clear();
      for (int i = 0; i < n; ++i) ((mask >> i) & 1u ? r.g.g1 : r.g.g2).push_back(i);
      found = check_twist(r).ok();
    }
    if (!found) throw std::domain_error("trimmed system has no twist decomposition along the chosen basis");
  }
  out.system = std::move(r);
  return out;
}

std::pair<IVec, int> trim_root(const TrimResult& t, const ExtRootSystem& original, const IVec& g, int alpha) {
  IVec gg = original.delta.length(alpha) == LengthClass::Short ? IVec(2 * g) : g;
  auto coords = solve_in_rows<BigInt>(cast_matrix<BigInt>(t.g_basis), cast_vector<BigInt>(gg));
  if (!coords) throw std::invalid_argument("group element is not in the trimmed group");
  return {cast_vector<std::int64_t>(*coords), t.root_map[alpha]};
}

}  // namespace extweyl
