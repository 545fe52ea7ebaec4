#pragma once

#include "extweyl/ext_root.hpp"
#include "extweyl/refl_groups.hpp"

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace extweyl {

using Word = std::vector<ReflectionLabel>;

// Element of the Weyl group: z is an antisymmetric n x n matrix standing for
// sum z_ij e_i ^ e_j (i < j), an element of (G ^ G) (x) (L^vee box L^vee) = Lambda^2 Z^n.
struct WElement {
  IMat z;
  IMat k;
  WeylElement v;

  static WElement identity(int n, int l);
  bool is_identity() const { return z.isZero() && k.isZero() && v.is_identity(); }
  bool operator==(const WElement& o) const { return z == o.z && k == o.k && v == o.v; }
  AElement project() const { return {k, v}; }
  std::string key() const;  // stable textual encoding, usable as a hash key
};

struct OrbitClass {
  LengthClass length = LengthClass::Short;
  IVec modulus;  // per basis index: 1 or 2
  IVec label;    // h mod modulus
  bool operator==(const OrbitClass& o) const { return length == o.length && label == o.label; }
  bool operator<(const OrbitClass& o) const {
    if (length != o.length) return length < o.length;
    return VecLess{}(label, o.label);
  }
  std::string describe() const;
};

// Finite-support map OrbitClass -> Z2; only the classes with value 1 are stored.
using UabVector = std::map<OrbitClass, int>;

struct Decision {
  bool trivial = true;
  std::string failing_layer;  // "V", "K", "Z", "Uab", or empty
  WElement value;
  UabVector uab;
};

struct RemarkConditions {
  bool c1 = true, c2 = true, c3 = true;
};

// Weyl group of a validated, reduced extended root system.
class WeylGroup {
 public:
  // Throws std::domain_error for BC input or systems failing validation.
  explicit WeylGroup(ExtRootSystem ers);

  const ExtRootSystem& system() const { return ers_; }
  const FiniteRootSystem& delta() const { return ers_.delta; }
  int n() const { return ers_.n(); }
  int rank() const { return ers_.delta.rank(); }
  const IMat& form() const { return form_; }

  IMat cocycle(const IMat& k1, const IMat& k2) const;
  WElement mul(const WElement& a, const WElement& b) const;
  WElement inv(const WElement& a) const;
  WElement generator(const ReflectionLabel& t) const;
  WElement evaluate(const Word& w) const;

  // Throws std::invalid_argument if the label is not in R.
  void require_member(const ReflectionLabel& t) const;
  OrbitClass orbit_of(const IVec& h, int beta) const;
  UabVector uab_of_word(const Word& w) const;
  Decision decide(const Word& w) const;
  RemarkConditions remark_conditions(const Word& w) const;

  ReflectionLabel random_label(std::mt19937_64& rng, int spread = 3) const;

 private:
  ExtRootSystem ers_;
  IMat form_;
};

// Closed-form orbit class for reduced systems in the standard twisted shape.
OrbitClass orbit_of(const ExtRootSystem& ers, const IVec& h, int beta);

// Partition of (G / N G) x Delta restricted to R under all reflections r_(g, alpha).
struct OrbitPartition {
  std::int64_t modulus = 0;
  std::vector<std::pair<IVec, int>> elements;
  std::vector<int> component;  // component id per element
  int count = 0;
  int find(const IVec& h, int beta) const;
};
OrbitPartition orbit_bruteforce(const ExtRootSystem& ers, std::int64_t modulus);
// Number of conjugacy classes of reflections, counted on a BC system directly
// (a short root (g, a) and (2g, 2a) give one reflection).
int reflection_orbit_count_bc(const ExtRootSystem& ers, std::int64_t modulus);

// K / K_eff, with K spanned by g (x) a^vee over R, as vectors over Z^(n l).
LatticeQuotient ab_k(const ExtRootSystem& ers);

// A^ab coordinates of a reflection: projection of t^K to ab K, then the reflection-class indicator.
std::vector<BigInt> aab_image(const ExtRootSystem& ers, const LatticeQuotient& abk, const ReflectionLabel& t);

struct ProperReport {
  bool ok = true;
  std::size_t labels = 0;
  std::size_t classes = 0;
  std::string witness;
};
// Exhaustive over labels with g in [0, modulus)^n: A^ab image is nonzero and
// separates exactly the orbit classes.
ProperReport check_aab_proper(const ExtRootSystem& ers, std::int64_t modulus);

// Random products of conjugated defining relators.
Word random_relator_product(const WeylGroup& w, std::mt19937_64& rng, int factors = 3, int conj_len = 3);

// Words trivial in W assembled from short blocks of translation pairs, plus a
// word trivial in W with nonzero U^ab image when one is found.
struct KernelSearch {
  std::vector<Word> trivial_words;
  std::optional<Word> witness;
  std::size_t blocks = 0;
};
KernelSearch kernel_search(const WeylGroup& w, std::mt19937_64& rng, std::size_t max_words = 64);

}  // namespace extweyl
