#include "extweyl/io.hpp"

#include <stdexcept>

namespace extweyl {

namespace {

json vec_json(const IVec& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

json mat_json(const IMat& m) {
  json a = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) a.push_back(vec_json(m.row(i).transpose()));
  return a;
}

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw std::invalid_argument(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

std::vector<int> index_list(const json& j, int n) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of indices");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw std::invalid_argument("index must be an integer");
    int i = x.get<int>();
    if (i < 0 || i >= n) throw std::invalid_argument("index out of range");
    out.push_back(i);
  }
  return out;
}

}  // namespace

json to_json(const FiniteRootSystem& rs) {
  json j;
  j["schema"] = 1;
  j["type"] = to_string(rs.type().family);
  j["rank"] = rs.rank();
  j["roots"] = json::array();
  j["coroots"] = json::array();
  j["lengths"] = json::array();
  for (int i = 0; i < rs.size(); ++i) {
    j["roots"].push_back(vec_json(rs.root(i)));
    j["coroots"].push_back(vec_json(rs.coroot(i)));
    j["lengths"].push_back(to_string(rs.length(i)));
  }
  j["basis"] = rs.basis();
  return j;
}

json to_json(const SSet& s) { return {{"H", mat_json(s.h())}, {"cosets", [&] {
                                        json a = json::array();
                                        for (const auto& c : s.cosets()) a.push_back(vec_json(c));
                                        return a;
                                      }()}}; }

json to_json(const ExtRootSystem& ers) {
  json j;
  j["schema"] = 1;
  j["delta"] = {{"family", to_string(ers.delta.type().family)}, {"rank", ers.delta.rank()}};
  j["g"] = {{"rank", ers.g.rank}, {"g1", ers.g.g1}, {"g2", ers.g.g2}};
  json s = json::object();
  if (ers.s_sh) s["sh"] = to_json(*ers.s_sh);
  if (ers.s_lg) s["lg"] = to_json(*ers.s_lg);
  if (ers.s_ex) s["ex"] = to_json(*ers.s_ex);
  j["s_sets"] = s;
  return j;
}

json to_json(const ReflectionLabel& t) { return {{"g", vec_json(t.g)}, {"alpha", t.alpha}}; }

json to_json(const Word& w) {
  json a = json::array();
  for (const auto& t : w) a.push_back(to_json(t));
  return a;
}

json to_json(const OrbitClass& c) {
  return {{"length", to_string(c.length)}, {"label", vec_json(c.label)}, {"modulus", vec_json(c.modulus)}};
}

json to_json(const WElement& e) { return {{"z", mat_json(e.z)}, {"k", mat_json(e.k)}, {"v", mat_json(e.v.m)}}; }

json to_json(const Decision& d) {
  json j;
  j["schema"] = 1;
  j["trivial"] = d.trivial;
  j["failing_layer"] = d.failing_layer.empty() ? json(nullptr) : json(d.failing_layer);
  json uab = json::array();
  for (const auto& [c, one] : d.uab) uab.push_back(to_json(c));
  j["witness"] = {{"value", to_json(d.value)}, {"uab", uab}};
  return j;
}

json to_json(const Report& r) {
  json items = json::array();
  for (const auto& it : r.items) items.push_back({{"name", it.name}, {"ok", it.ok}, {"witness", it.witness}});
  return {{"ok", r.ok()}, {"items", items}};
}

IVec ivec_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an integer array");
  IVec v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer()) throw std::invalid_argument("expected an integer");
    v(static_cast<Eigen::Index>(i)) = j[i].get<std::int64_t>();
  }
  return v;
}

IMat imat_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("expected a nonempty matrix");
  IMat m(static_cast<Eigen::Index>(j.size()), static_cast<Eigen::Index>(ivec_from_json(j[0]).size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    IVec r = ivec_from_json(j[i]);
    if (r.size() != m.cols()) throw std::invalid_argument("ragged matrix");
    m.row(static_cast<Eigen::Index>(i)) = r.transpose();
  }
  return m;
}

SSet sset_from_json(const json& j, int n) {
  IMat h = imat_from_json(field(j, "H"));
  if (h.cols() != n) throw std::invalid_argument("H has the wrong number of columns");
  std::vector<IVec> reps;
  const json& c = field(j, "cosets");
  if (!c.is_array()) throw std::invalid_argument("cosets must be an array");
  for (const auto& r : c) reps.push_back(ivec_from_json(r));
  return SSet::make(h, reps);
}

ExtRootSystem ext_root_from_json(const json& j) {
  const json& d = field(j, "delta");
  RootSystemType t{parse_family(field(d, "family").get<std::string>()), field(d, "rank").get<int>()};
  t.validate();
  const json& g = field(j, "g");
  const int n = field(g, "rank").get<int>();
  if (n < 0) throw std::invalid_argument("g.rank must be nonnegative");
  ExtRootSystem e{FiniteRootSystem::build(t), {n, {}, {}}, {}, {}, {}};
  if (g.contains("g1")) e.g.g1 = index_list(g["g1"], n);
  if (g.contains("g2")) e.g.g2 = index_list(g["g2"], n);
  if (e.g.g1.empty() && e.g.g2.empty())
    for (int i = 0; i < n; ++i) e.g.g2.push_back(i);
  std::vector<bool> seen(n, false);
  for (int i : e.g.g1) seen[i] = true;
  for (int i : e.g.g2) {
    if (seen[i]) throw std::invalid_argument("g1 and g2 overlap");
    seen[i] = true;
  }
  for (bool s : seen)
    if (!s) throw std::invalid_argument("g1 and g2 must cover every basis index");
  const json& s = field(j, "s_sets");
  for (auto c : e.delta.length_classes()) {
    const char* key = c == LengthClass::Short ? "sh" : c == LengthClass::Long ? "lg" : "ex";
    SSet set = sset_from_json(field(s, key), n);
    (c == LengthClass::Short ? e.s_sh : c == LengthClass::Long ? e.s_lg : e.s_ex) = set;
  }
  return e;
}

Word word_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("a word is an array of {g, alpha} objects");
  Word w;
  for (const auto& x : j) w.push_back({ivec_from_json(field(x, "g")), field(x, "alpha").get<int>()});
  return w;
}

}  // namespace extweyl
