#include "extweyl/weyl.hpp"

#include "extweyl/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace extweyl {

namespace {

IVec flatten(const IMat& k) {
  IVec v(k.size());
  for (Eigen::Index a = 0; a < k.rows(); ++a)
    for (Eigen::Index j = 0; j < k.cols(); ++j) v(a * k.cols() + j) = k(a, j);
  return v;
}

std::string key_of(const IMat& m) {
  std::string s;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) s += std::to_string(m(i, j)) + ",";
  return s;
}

// entries of an antisymmetric matrix above the diagonal
IVec upper(const IMat& z) {
  const Eigen::Index n = z.rows();
  IVec v(n * (n - 1) / 2);
  Eigen::Index p = 0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j) v(p++) = z(i, j);
  return v;
}

std::string fmt(const IVec& v) {
  std::ostringstream os;
  os << "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) os << (i ? "," : "") << v(i);
  os << ")";
  return os.str();
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Dense index of (g mod N, root) pairs.
struct ResidueIndex {
  std::int64_t modulus;
  int n, roots;
  std::size_t size() const {
    std::size_t s = static_cast<std::size_t>(roots);
    for (int i = 0; i < n; ++i) s *= static_cast<std::size_t>(modulus);
    return s;
  }
  std::size_t operator()(const IVec& g, int beta) const {
    std::size_t x = static_cast<std::size_t>(beta);
    for (int i = 0; i < n; ++i) x = x * static_cast<std::size_t>(modulus) + static_cast<std::size_t>(mod_floor(g(i), modulus));
    return x;
  }
};

IVec reduce_mod(const IVec& g, std::int64_t m) {
  IVec r(g.size());
  for (Eigen::Index i = 0; i < g.size(); ++i) r(i) = mod_floor(g(i), m);
  return r;
}

// x with A x = t over the integers, via Smith form.
std::optional<BVec> solve_integer(const BMat& a, const BVec& t) {
  auto s = smith_normal_form<BigInt>(a);
  BVec pt = s.P * t;
  BVec y = BVec::Zero(a.cols());
  for (Eigen::Index i = 0; i < pt.size(); ++i) {
    BigInt d = (i < s.D.rows() && i < s.D.cols()) ? s.D(i, i) : BigInt(0);
    if (d == 0) {
      if (pt(i) != 0) return std::nullopt;
    } else {
      if (pt(i) % d != 0) return std::nullopt;
      y(i) = pt(i) / d;
    }
  }
  return BVec(s.Q * y);
}

}  // namespace

// ----- WElement -----

WElement WElement::identity(int n, int l) { return {IMat::Zero(n, n), IMat::Zero(n, l), WeylElement::identity(l)}; }

std::string WElement::key() const { return key_of(z) + "|" + key_of(k) + "|" + key_of(v.m); }

std::string OrbitClass::describe() const {
  return to_string(length) + " h=" + fmt(label) + " mod " + fmt(modulus);
}

// ----- WeylGroup -----

WeylGroup::WeylGroup(ExtRootSystem ers) : ers_(std::move(ers)) {
  if (!ers_.delta.type().is_reduced()) throw std::domain_error("non-reduced root system: trim it first");
  Report r = validate(ers_);
  if (!r.ok()) throw std::domain_error("extended root system is not valid and tame: " + r.summary());
  form_ = boxtimes_form(ers_.delta);
}

IMat WeylGroup::cocycle(const IMat& k1, const IMat& k2) const {
  if (k1.rows() != n() || k2.rows() != n() || k1.cols() != rank() || k2.cols() != rank())
    throw std::invalid_argument("cocycle: dimension mismatch");
  IMat x = k1 * form_ * k2.transpose();
  return x - x.transpose();
}

WElement WeylGroup::mul(const WElement& a, const WElement& b) const {
  IMat vk = act_on_k(a.v, b.k);
  return {a.z + b.z + cocycle(a.k, vk), a.k + vk, a.v * b.v};
}

WElement WeylGroup::inv(const WElement& a) const {
  WeylElement vi = a.v.inverse();
  return {-a.z, -act_on_k(vi, a.k), vi};
}

WElement WeylGroup::generator(const ReflectionLabel& t) const {
  return {IMat::Zero(n(), n()), k_part(delta(), t), delta().reflection(t.alpha)};
}

WElement WeylGroup::evaluate(const Word& w) const {
  WElement acc = WElement::identity(n(), rank());
  for (const auto& t : w) acc = mul(acc, generator(t));
  return acc;
}

void WeylGroup::require_member(const ReflectionLabel& t) const {
  if (t.alpha < 0 || t.alpha >= delta().size()) throw std::invalid_argument("root index out of range");
  if (t.g.size() != n()) throw std::invalid_argument("label g has wrong length");
  if (!membership(ers_, t.g, t.alpha))
    throw std::invalid_argument("(" + fmt(t.g) + ", root " + std::to_string(t.alpha) + ") is not in R");
}

OrbitClass WeylGroup::orbit_of(const IVec& h, int beta) const { return extweyl::orbit_of(ers_, h, beta); }

UabVector WeylGroup::uab_of_word(const Word& w) const {
  UabVector u;
  for (const auto& t : w) {
    OrbitClass c = orbit_of(t.g, t.alpha);
    auto it = u.find(c);
    if (it == u.end())
      u.emplace(c, 1);
    else
      u.erase(it);
  }
  return u;
}

Decision WeylGroup::decide(const Word& w) const {
  for (const auto& t : w) require_member(t);
  Decision d;
  d.value = evaluate(w);
  d.uab = uab_of_word(w);
  if (!d.value.v.is_identity())
    d.failing_layer = "V";
  else if (!d.value.k.isZero())
    d.failing_layer = "K";
  else if (!d.value.z.isZero())
    d.failing_layer = "Z";
  else if (!d.uab.empty())
    d.failing_layer = "Uab";
  d.trivial = d.failing_layer.empty();
  return d;
}

RemarkConditions WeylGroup::remark_conditions(const Word& w) const {
  for (const auto& t : w) require_member(t);
  RemarkConditions c;
  c.c1 = evaluate(w).v.is_identity();
  // t^W composed with the section r_(0, alpha) leaves (0, t^K, 1)
  WElement acc = WElement::identity(n(), rank());
  for (const auto& t : w) acc = mul(acc, {IMat::Zero(n(), n()), k_part(delta(), t), WeylElement::identity(rank())});
  c.c2 = acc.is_identity();
  c.c3 = uab_of_word(w).empty();
  return c;
}

ReflectionLabel WeylGroup::random_label(std::mt19937_64& rng, int spread) const {
  std::uniform_int_distribution<int> root(0, delta().size() - 1);
  int a = root(rng);
  const SSet& s = ers_.s_for_root(a);
  std::uniform_int_distribution<std::size_t> rep(0, s.cosets().size() - 1);
  std::uniform_int_distribution<std::int64_t> coef(-spread, spread);
  IVec g = s.cosets()[rep(rng)];
  for (Eigen::Index i = 0; i < s.h().rows(); ++i) g += coef(rng) * s.h().row(i).transpose();
  return {g, a};
}

// ----- orbits -----

OrbitClass orbit_of(const ExtRootSystem& ers, const IVec& h, int beta) {
  const auto& t = ers.delta.type();
  if (!t.is_reduced()) throw std::domain_error("orbit_of: non-reduced root system");
  if (!membership(ers, h, beta)) throw std::invalid_argument("orbit_of: (" + fmt(h) + ", root) is not in R");
  const int n = ers.n();
  OrbitClass c;
  c.length = ers.delta.length(beta);
  c.modulus = IVec::Ones(n);
  auto on = [&](const std::vector<int>& idx, std::int64_t m) {
    for (int i : idx) c.modulus(i) = m;
  };
  const bool rank2_bc = (t.family == Family::B || t.family == Family::C) && t.rank == 2;
  if (t.family == Family::A && t.rank == 1) {
    c.modulus.setConstant(2);
  } else if (rank2_bc) {
    on(ers.g.g1, 2);
    if (c.length == LengthClass::Long) on(ers.g.g2, 2);
  } else if (t.family == Family::B) {
    on(ers.g.g1, 2);
  } else if (t.family == Family::C) {
    if (c.length == LengthClass::Long) c.modulus.setConstant(2);
  }
  c.label = IVec(n);
  for (int i = 0; i < n; ++i) c.label(i) = mod_floor(h(i), c.modulus(i));
  return c;
}

int OrbitPartition::find(const IVec& h, int beta) const {
  IVec r = reduce_mod(h, modulus);
  for (std::size_t i = 0; i < elements.size(); ++i)
    if (elements[i].second == beta && elements[i].first == r) return component[i];
  return -1;
}

namespace {

struct Closure {
  ResidueIndex index;
  std::vector<int> slot;
  std::vector<std::pair<IVec, int>> elements;

  Closure(std::int64_t m, int n, int roots) : index{m, n, roots} {
    if (index.size() > 20000000) throw std::length_error("orbit closure exceeds the size cap");
    slot.assign(index.size(), -1);
  }
  void add(const IVec& g, int beta) {
    std::size_t x = index(g, beta);
    if (slot[x] >= 0) return;
    slot[x] = static_cast<int>(elements.size());
    elements.emplace_back(reduce_mod(g, index.modulus), beta);
  }
  // union-find under every reflection r_(g, alpha) with (g, alpha) in R
  std::vector<int> components(const ExtRootSystem& ers, int& count) const {
    const auto& rs = ers.delta;
    UnionFind uf(elements.size());
    for (int a = 0; a < rs.n_positive(); ++a) {
      std::vector<IVec> gs = residues_in(ers.s_for_root(a), index.modulus);
      for (const auto& g : gs)
        for (std::size_t e = 0; e < elements.size(); ++e) {
          const auto& [h, beta] = elements[e];
          IVec h2 = h - rs.pairing_roots(a, beta) * g;
          int b2 = rs.reflect_index(a, beta);
          int target = slot[index(h2, b2)];
          if (target < 0) throw std::logic_error("orbit closure left the element set");
          uf.unite(static_cast<int>(e), target);
        }
    }
    std::vector<int> comp(elements.size());
    std::map<int, int> ids;
    for (std::size_t e = 0; e < elements.size(); ++e) {
      int r = uf.find(static_cast<int>(e));
      auto it = ids.emplace(r, static_cast<int>(ids.size())).first;
      comp[e] = it->second;
    }
    count = static_cast<int>(ids.size());
    return comp;
  }
};

}  // namespace

OrbitPartition orbit_bruteforce(const ExtRootSystem& ers, std::int64_t modulus) {
  const auto& rs = ers.delta;
  Closure cl(modulus, ers.n(), rs.size());
  for (int b = 0; b < rs.size(); ++b)
    for (const auto& g : residues_in(ers.s_for_root(b), modulus)) cl.add(g, b);
  OrbitPartition p;
  p.modulus = modulus;
  p.component = cl.components(ers, p.count);
  p.elements = std::move(cl.elements);
  return p;
}

int reflection_orbit_count_bc(const ExtRootSystem& ers, std::int64_t modulus) {
  const auto& rs = ers.delta;
  if (rs.type().is_reduced()) throw std::domain_error("reflection_orbit_count_bc: expects a BC system");
  Closure cl(modulus, ers.n(), rs.size());
  for (int b = 0; b < rs.size(); ++b) {
    LengthClass c = rs.length(b);
    if (c == LengthClass::Short) continue;
    for (const auto& g : residues_in(ers.s_for_root(b), modulus)) cl.add(g, b);
    if (c == LengthClass::ExtraLong) {
      int half = *rs.index_of_root(IVec(rs.root(b) / 2));
      for (const auto& g : residues_in(ers.s_for_root(half), modulus)) cl.add(IVec(2 * g), b);
    }
  }
  int count = 0;
  cl.components(ers, count);
  return count;
}

// ----- abelianization -----

LatticeQuotient ab_k(const ExtRootSystem& ers) {
  const auto& rs = ers.delta;
  const int n = ers.n(), l = rs.rank();
  std::vector<IMat> gens;
  for (int a = 0; a < rs.n_positive(); ++a) {
    const SSet& s = ers.s_for_root(a);
    std::vector<IVec> gs = s.cosets();
    for (Eigen::Index i = 0; i < s.h().rows(); ++i) gs.push_back(s.cosets().front() + s.h().row(i).transpose());
    for (const auto& g : gs) gens.push_back(k_part(rs, {g, a}));
  }
  BMat k(static_cast<Eigen::Index>(gens.size()), n * l);
  BMat eff(static_cast<Eigen::Index>(gens.size() * rs.basis().size()), n * l);
  Eigen::Index row = 0;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    k.row(static_cast<Eigen::Index>(i)) = cast_vector<BigInt>(flatten(gens[i])).transpose();
    for (int b : rs.basis())
      eff.row(row++) = cast_vector<BigInt>(flatten(gens[i] - act_on_k(rs.reflection(b), gens[i]))).transpose();
  }
  return lattice_quotient(k, eff);
}

namespace {

struct AabMap {
  const ExtRootSystem& ers;
  const LatticeQuotient& abk;
  std::vector<int> class_of;
  std::map<int, int> position;

  AabMap(const ExtRootSystem& e, const LatticeQuotient& q) : ers(e), abk(q), class_of(reflection_class_of_roots(e.delta)) {
    for (int c : class_of) position.emplace(c, 0);
    int i = 0;
    for (auto& [c, p] : position) p = i++;
  }
  std::vector<BigInt> operator()(const ReflectionLabel& t) const {
    std::vector<BigInt> img = abk.project(flatten(k_part(ers.delta, t)));
    std::vector<BigInt> ind(position.size(), BigInt(0));
    ind[position.at(class_of[t.alpha])] = 1;
    img.insert(img.end(), ind.begin(), ind.end());
    return img;
  }
};

}  // namespace

std::vector<BigInt> aab_image(const ExtRootSystem& ers, const LatticeQuotient& abk, const ReflectionLabel& t) {
  return AabMap(ers, abk)(t);
}

ProperReport check_aab_proper(const ExtRootSystem& ers, std::int64_t modulus) {
  ProperReport rep;
  LatticeQuotient abk = ab_k(ers);
  AabMap image(ers, abk);
  std::map<std::vector<BigInt>, OrbitClass> by_image;
  std::map<OrbitClass, std::vector<BigInt>> by_class;
  auto fail = [&](const std::string& w) {
    if (rep.ok) rep.witness = w;
    rep.ok = false;
  };
  const auto& rs = ers.delta;
  for (int a = 0; a < rs.n_positive(); ++a)
    for (const auto& g : residues_in(ers.s_for_root(a), modulus)) {
      ++rep.labels;
      ReflectionLabel t{g, a};
      auto img = image(t);
      OrbitClass c = orbit_of(ers, g, a);
      if (std::all_of(img.begin(), img.end(), [](const BigInt& x) { return x == 0; }))
        fail("trivial image for " + fmt(g) + ", root " + std::to_string(a));
      auto [ii, new_img] = by_image.emplace(img, c);
      if (!new_img && !(ii->second == c))
        fail("classes " + ii->second.describe() + " and " + c.describe() + " share an image");
      auto [ci, new_cls] = by_class.emplace(c, img);
      if (!new_cls && ci->second != img) fail("class " + c.describe() + " has two images");
    }
  rep.classes = by_class.size();
  return rep;
}

// ----- words -----

Word random_relator_product(const WeylGroup& w, std::mt19937_64& rng, int factors, int conj_len) {
  std::uniform_int_distribution<int> len(0, conj_len);
  std::bernoulli_distribution square(0.25);
  Word out;
  for (int f = 0; f < factors; ++f) {
    Word c;
    for (int i = len(rng); i > 0; --i) c.push_back(w.random_label(rng));
    out.insert(out.end(), c.begin(), c.end());
    ReflectionLabel t1 = w.random_label(rng);
    if (square(rng)) {
      out.insert(out.end(), {t1, t1});
    } else {
      ReflectionLabel t2 = w.random_label(rng);
      out.insert(out.end(), {t1, t2, t1, conj_reflect(w.delta(), t1, t2)});
    }
    out.insert(out.end(), c.rbegin(), c.rend());
  }
  return out;
}

KernelSearch kernel_search(const WeylGroup& w, std::mt19937_64& rng, std::size_t max_words) {
  KernelSearch out;
  const auto& ers = w.system();
  const auto& rs = w.delta();
  const int n = w.n();
  if (n == 0) return out;

  // translation pairs (g, a)(g', a): value (z, (g - g') (x) a^vee, 1)
  struct Pair {
    Word word;
    IMat k;
  };
  std::vector<Pair> pairs;
  for (int a = 0; a < rs.n_positive(); ++a) {
    std::vector<IVec> labels;
    for (const auto& g : residues_in(SSet::whole(n), 3))
      if (membership(ers, g, a)) labels.push_back(g);
    for (const auto& g : labels)
      for (const auto& h : labels)
        if (g != h) pairs.push_back({{{g, a}, {h, a}}, k_part(rs, {IVec(g - h), a})});
  }
  if (pairs.size() > 600) {
    std::shuffle(pairs.begin(), pairs.end(), rng);
    pairs.resize(600);
  }
  std::unordered_map<std::string, std::vector<int>> by_k;
  for (std::size_t i = 0; i < pairs.size(); ++i) by_k[key_of(pairs[i].k)].push_back(static_cast<int>(i));

  // blocks: two or three pairs whose k-parts cancel
  std::vector<Word> blocks;
  const std::size_t block_cap = 20000;
  auto add_block = [&](std::initializer_list<int> idx) {
    Word b;
    for (int i : idx) b.insert(b.end(), pairs[i].word.begin(), pairs[i].word.end());
    blocks.push_back(std::move(b));
  };
  for (std::size_t p = 0; p < pairs.size() && blocks.size() < block_cap; ++p) {
    auto it = by_k.find(key_of(IMat(-pairs[p].k)));
    if (it != by_k.end()) add_block({static_cast<int>(p), it->second.front()});
    for (std::size_t q = p + 1; q < pairs.size() && blocks.size() < block_cap; ++q) {
      auto jt = by_k.find(key_of(IMat(-pairs[p].k - pairs[q].k)));
      if (jt != by_k.end()) add_block({static_cast<int>(p), static_cast<int>(q), jt->second.front()});
    }
  }
  out.blocks = blocks.size();

  // even z-corrections from commutators of translations t (x) r_(0, a)
  struct Tau {
    Word word, inverse;
    IMat k;
  };
  std::vector<Tau> taus;
  for (int a = 0; a < rs.n_positive() && taus.size() < 16; ++a)
    for (int i = 0; i < n; ++i)
      for (std::int64_t m = 1; m <= 9; ++m) {
        IVec g = IVec::Zero(n);
        g(i) = m;
        if (!membership(ers, g, a)) continue;
        IVec zero = IVec::Zero(n);
        taus.push_back({{{g, a}, {zero, a}}, {{zero, a}, {g, a}}, k_part(rs, {g, a})});
        break;
      }
  std::vector<std::pair<int, int>> comm;
  const Eigen::Index zd = n * (n - 1) / 2;
  for (std::size_t a = 0; a < taus.size(); ++a)
    for (std::size_t b = a + 1; b < taus.size(); ++b) comm.emplace_back(static_cast<int>(a), static_cast<int>(b));
  BMat cmat(zd, static_cast<Eigen::Index>(comm.size()));
  for (std::size_t c = 0; c < comm.size(); ++c)
    cmat.col(static_cast<Eigen::Index>(c)) =
        cast_vector<BigInt>(upper(w.cocycle(taus[comm[c].first].k, taus[comm[c].second].k)));

  // commutators contribute 2 c(k_a, k_b)
  cmat *= BigInt(2);
  auto corrected = [&](Word word) -> std::optional<Word> {
    WElement v = w.evaluate(word);
    if (!v.k.isZero() || !v.v.is_identity()) return std::nullopt;
    if (v.z.isZero()) return word;
    if (comm.empty()) return std::nullopt;
    auto x = solve_integer(cmat, cast_vector<BigInt>(IVec(-upper(v.z))));
    if (!x) return std::nullopt;
    for (std::size_t c = 0; c < comm.size(); ++c) {
      auto cnt = static_cast<std::int64_t>((*x)(static_cast<Eigen::Index>(c)));
      const Tau& ta = taus[cnt >= 0 ? comm[c].first : comm[c].second];
      const Tau& tb = taus[cnt >= 0 ? comm[c].second : comm[c].first];
      for (std::int64_t r = 0; r < std::abs(cnt); ++r)
        for (const Word* part : {&ta.word, &tb.word, &ta.inverse, &tb.inverse})
          word.insert(word.end(), part->begin(), part->end());
    }
    if (!w.evaluate(word).is_identity()) return std::nullopt;
    return word;
  };

  // Blocks have k = 0, so z adds up along concatenation. An integer combination
  // x of blocks is correctable when sum x_b z_b lies in the commutator lattice;
  // its U^ab image is sum (x_b mod 2) u_b. Distinct (z, u) pairs suffice.
  std::map<std::string, std::size_t> seen;
  std::vector<std::size_t> reps;
  std::vector<IVec> zs;
  std::vector<UabVector> us;
  for (std::size_t b = 0; b < blocks.size() && reps.size() < 256; ++b) {
    IVec z = upper(w.evaluate(blocks[b]).z);
    UabVector u = w.uab_of_word(blocks[b]);
    std::string key = key_of(z) + "|";
    for (const auto& [c, one] : u) key += c.describe() + ";";
    if (seen.emplace(key, reps.size()).second) {
      reps.push_back(b);
      zs.push_back(z);
      us.push_back(std::move(u));
    }
  }
  const auto nb = static_cast<Eigen::Index>(reps.size());
  if (nb > 0) {
    BMat a(zd, nb + cmat.cols());
    for (Eigen::Index b = 0; b < nb; ++b) a.col(b) = cast_vector<BigInt>(zs[static_cast<std::size_t>(b)]);
    if (cmat.cols() > 0) a.rightCols(cmat.cols()) = cmat;
    auto snf = smith_normal_form<BigInt>(a);
    Eigen::Index rank = 0;
    while (rank < std::min(snf.D.rows(), snf.D.cols()) && snf.D(rank, rank) != 0) ++rank;
    std::optional<BVec> best;
    BigInt best_norm = 0;
    for (Eigen::Index c = rank; c < a.cols(); ++c) {
      BVec x = snf.Q.col(c).head(nb);
      UabVector u;
      for (Eigen::Index b = 0; b < nb; ++b)
        if (x(b) % 2 != 0)
          for (const auto& [cls, one] : us[static_cast<std::size_t>(b)])
            if (!u.erase(cls)) u.emplace(cls, 1);
      if (u.empty()) continue;
      BigInt norm = 0;
      for (Eigen::Index b = 0; b < nb; ++b) norm += detail::abs_value(x(b));
      if (!best || norm < best_norm) best = x, best_norm = norm;
    }
    if (best && best_norm <= 4096) {
      Word word;
      for (Eigen::Index b = 0; b < nb; ++b) {
        const Word& blk = blocks[reps[static_cast<std::size_t>(b)]];
        auto cnt = static_cast<std::int64_t>((*best)(b));
        for (std::int64_t r = 0; r < std::abs(cnt); ++r) {
          if (cnt > 0)
            word.insert(word.end(), blk.begin(), blk.end());
          else
            word.insert(word.end(), blk.rbegin(), blk.rend());
        }
      }
      if (auto fixed = corrected(std::move(word)); fixed && !w.uab_of_word(*fixed).empty()) out.witness = fixed;
    }
  }

  if (out.witness) out.trivial_words.push_back(*out.witness);
  if (!blocks.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, blocks.size() - 1);
    std::uniform_int_distribution<int> count(1, 3);
    for (std::size_t tries = 0; out.trivial_words.size() < max_words && tries < 20 * max_words; ++tries) {
      Word word;
      for (int c = count(rng); c > 0; --c) {
        const Word& b = blocks[pick(rng)];
        word.insert(word.end(), b.begin(), b.end());
      }
      if (auto fixed = corrected(std::move(word))) out.trivial_words.push_back(std::move(*fixed));
    }
  }
  return out;
}

}  // namespace extweyl
