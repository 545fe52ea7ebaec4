#include "verify.hpp"

#include "extweyl/io.hpp"
#include "extweyl/lattice.hpp"
#include "extweyl/weyl.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

using namespace extweyl;

namespace {

struct Config {
  std::string format = "text";
  std::uint64_t seed = 0;
  int cap_rank = 6;
  std::string out;
};

// Usage and input errors map to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw UsageError(path + ": " + e.what());
  }
}

RootSystemType parse_type(const std::string& family, int rank) {
  RootSystemType t{parse_family(family), rank};
  t.validate();
  return t;
}

std::string matrix_text(const IMat& m) {
  std::ostringstream os;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    os << "  ";
    for (Eigen::Index j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << "\n";
  }
  return os.str();
}

std::string vec_text(const IVec& v) {
  std::ostringstream os;
  os << "(";
  for (Eigen::Index i = 0; i < v.size(); ++i) os << (i ? "," : "") << v(i);
  os << ")";
  return os.str();
}

int cmd_info(const Config& cfg, std::ostream& os, const std::string& family, int rank) {
  auto rs = FiniteRootSystem::build(parse_type(family, rank));
  std::optional<int> k;
  if (!rs.type().is_simply_laced()) k = k_delta(rs.type());
  std::map<LengthClass, int> counts;
  for (auto c : rs.lengths()) ++counts[c];
  if (cfg.format == "json") {
    json j = to_json(rs);
    j["k_delta"] = k ? json(*k) : json(nullptr);
    json cm = json::array();
    for (Eigen::Index i = 0; i < rs.cartan().rows(); ++i) {
      json row = json::array();
      for (Eigen::Index c = 0; c < rs.cartan().cols(); ++c) row.push_back(rs.cartan()(i, c));
      cm.push_back(row);
    }
    j["cartan"] = cm;
    os << j.dump(2) << "\n";
    return 0;
  }
  os << "type " << rs.type().name() << "\n";
  os << "roots " << rs.size() << " (" << rs.n_positive() << " positive)\n";
  os << "k_delta " << (k ? std::to_string(*k) : "n/a (simply laced)") << "\n";
  for (auto [c, n] : counts) os << to_string(c) << " roots " << n << "\n";
  os << "cartan matrix\n" << matrix_text(rs.cartan());
  for (int i = 0; i < rs.n_positive(); ++i)
    if (rs.is_divisible(i)) os << "divisible root " << vec_text(rs.root(i)) << " = 2 x " << vec_text(IVec(rs.root(i) / 2)) << "\n";
  return 0;
}

int cmd_tensor(const Config& cfg, std::ostream& os, const std::string& family, int rank, const std::string& pair,
               bool box, bool check) {
  auto t = parse_type(family, rank);
  auto comma = pair.find(',');
  if (comma == std::string::npos) throw UsageError("pair must look like root,coroot");
  Side l = parse_side(pair.substr(0, comma)), r = parse_side(pair.substr(comma + 1));
  auto rs = FiniteRootSystem::build(t);
  std::string got = box ? box_quotient(rs, l, r).group.describe() : coinvariants(rs, l, r).describe();
  std::string want = box ? "Z" : cli::expected_coinvariants(t, l, r);
  bool ok = got == want;
  if (cfg.format == "json") {
    json j{{"schema", 1}, {"type", t.name()}, {"pair", pair}, {"box", box}, {"group", got}};
    if (check) j["expected"] = want, j["ok"] = ok;
    os << j.dump(2) << "\n";
  } else {
    os << got << "\n";
    if (check && !ok) os << "mismatch: expected " << want << "\n";
  }
  return check && !ok ? 1 : 0;
}

int cmd_orbits(const Config& cfg, std::ostream& os, const std::string& path) {
  ExtRootSystem ers = ext_root_from_json(read_json(path));
  std::string note;
  if (!ers.delta.type().is_reduced()) {
    ers = trim(ers).system;
    note = "trimmed to " + ers.delta.type().name();
  }
  Report rep = validate(ers);
  if (!rep.ok()) throw UsageError("system does not validate: " + rep.summary());
  auto part = orbit_bruteforce(ers, 2 * ers.modulus());
  std::map<OrbitClass, std::set<int>> classes;
  for (std::size_t e = 0; e < part.elements.size(); ++e)
    classes[orbit_of(ers, part.elements[e].first, part.elements[e].second)].insert(part.component[e]);
  std::set<int> seen;
  bool ok = static_cast<int>(classes.size()) == part.count;
  for (const auto& [c, comps] : classes) {
    ok = ok && comps.size() == 1;
    for (int x : comps) ok = ok && seen.insert(x).second;
  }
  if (cfg.format == "json") {
    json cls = json::array();
    for (const auto& [c, comps] : classes) cls.push_back(to_json(c));
    json j{{"schema", 1}, {"type", ers.delta.type().name()}, {"classes", cls},
           {"bruteforce_orbits", part.count}, {"agree", ok}};
    if (!note.empty()) j["note"] = note;
    os << j.dump(2) << "\n";
  } else {
    if (!note.empty()) os << note << "\n";
    for (const auto& [c, comps] : classes) os << c.describe() << "\n";
    os << classes.size() << " classes, " << part.count << " orbits by closure: " << (ok ? "agree" : "DISAGREE") << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_word(const Config& cfg, std::ostream& os, const std::string& system_path, const std::string& word_path) {
  ExtRootSystem ers = ext_root_from_json(read_json(system_path));
  Word w = word_from_json(read_json(word_path));
  WeylGroup wg(ers);
  Decision d = wg.decide(w);
  if (cfg.format == "json") {
    os << to_json(d).dump(2) << "\n";
  } else {
    os << (d.trivial ? "trivial" : "nontrivial, failing layer " + d.failing_layer) << "\n";
  }
  return 0;
}

int cmd_verify(const Config& cfg, std::ostream& os, const std::string& suite) {
  if (!cli::known_suite(suite)) throw UsageError("unknown suite: " + suite);
  cli::VerifyOptions opt;
  opt.seed = cfg.seed;
  opt.cap_rank = cfg.cap_rank;
  auto results = cli::run_verify(suite, opt);
  bool ok = true;
  json arr = json::array();
  for (const auto& r : results) {
    ok = ok && r.ok;
    if (cfg.format == "json")
      arr.push_back({{"suite", r.suite}, {"name", r.name}, {"ok", r.ok}, {"detail", r.detail}});
    else
      os << (r.ok ? "PASS " : "FAIL ") << r.suite << ": " << r.name << (r.detail.empty() ? "" : " -- " + r.detail)
         << "\n";
  }
  std::string replay = "extweyl verify " + suite + " --seed " + std::to_string(cfg.seed);
  if (cfg.format == "json") {
    json j{{"schema", 1}, {"suite", suite}, {"seed", cfg.seed}, {"ok", ok}, {"results", arr}};
    if (!ok) j["replay"] = replay;
    os << j.dump(2) << "\n";
  } else if (!ok) {
    os << "replay: " << replay << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extended root systems and their Weyl groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", cfg.seed, "Seed for randomized suites");
  app.add_option("--cap-rank", cfg.cap_rank, "Largest rank in sweeps")->check(CLI::PositiveNumber);
  app.add_option("--out", cfg.out, "Write output to this file");

  std::string family, pair = "root,root", system_path, word_path, suite;
  int rank = 0;
  bool box = false, check = false;

  auto* info = app.add_subcommand("info", "Summarize a finite root system");
  info->add_option("family", family)->required();
  info->add_option("rank", rank)->required();

  auto* tensor = app.add_subcommand("tensor-type", "Invariant factors of lattice coinvariants");
  tensor->add_option("family", family)->required();
  tensor->add_option("rank", rank)->required();
  tensor->add_option("pair", pair, "root,root | root,coroot | coroot,root | coroot,coroot");
  tensor->add_flag("--box", box, "Add the perpendicularity relations");
  tensor->add_flag("--check", check, "Exit 1 if the result differs from the reference value");

  auto* orbits = app.add_subcommand("orbits", "Orbit classes of an extended root system");
  orbits->add_option("system", system_path)->required();

  auto* word = app.add_subcommand("word", "Decide a word in the presentation by conjugation");
  word->add_option("system", system_path)->required();
  word->add_option("word", word_path)->required();

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "tables | tensor | orbits | cocycle | words | all")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::ofstream file;
  if (!cfg.out.empty()) {
    file.open(cfg.out);
    if (!file) {
      std::cerr << "cannot write " << cfg.out << "\n";
      return 2;
    }
  }
  std::ostream& os = cfg.out.empty() ? std::cout : file;
  try {
    if (*info) return cmd_info(cfg, os, family, rank);
    if (*tensor) return cmd_tensor(cfg, os, family, rank, pair, box, check);
    if (*orbits) return cmd_orbits(cfg, os, system_path);
    if (*word) return cmd_word(cfg, os, system_path, word_path);
    if (*verify) return cmd_verify(cfg, os, suite);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
