#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "l2burau/group_ring.hpp"
#include "l2burau/word.hpp"

namespace l2b {

enum class OracleKind { free, free_abelian, braid, torus_knot };

std::string to_string(OracleKind k);
OracleKind oracle_kind_from_string(const std::string& s);

/// Value description of a built-in group: enough to rebuild the oracle.
struct OracleSpec {
  OracleKind kind = OracleKind::free;
  int rank = 1;      // free / free_abelian: number of generators; braid: strand count
  int p = 2, q = 3;  // torus_knot: <a, b | a^p = b^q>
  std::vector<int> weights;  // psi on generators; empty means the default
  std::string prefix;        // optional generator spelling override ("g" for g-coordinates)

  friend bool operator==(const OracleSpec&, const OracleSpec&) = default;
};

/// Raised when an enumeration exceeds its configured size cap.
class ResourceLimit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Word-problem solver for a finitely generated group together with a weight
/// homomorphism psi to the integers.
///
/// normalize() returns a canonical freely reduced word: two words are equal in
/// the group iff their normal forms are identical. Oracles are immutable and
/// shared between matrices via shared_ptr<const GroupOracle>.
class GroupOracle {
 public:
  virtual ~GroupOracle() = default;

  int alphabet_size() const { return static_cast<int>(spec_.weights.size()); }
  const OracleSpec& spec() const { return spec_; }
  const std::vector<int>& weights() const { return spec_.weights; }
  const WordStyle& style() const { return style_; }

  /// Throws std::out_of_range on a letter outside the alphabet.
  Word normalize(const Word& w) const;
  Word multiply(const Word& a, const Word& b) const { return normalize(a * b); }
  long long weight(const Word& w) const { return w.weight(spec_.weights); }

  /// True for groups isomorphic to Z (ball-averaged determinants converge).
  virtual bool is_infinite_cyclic() const = 0;

  /// Defining relators in the oracle alphabet (used for sanity checks of psi).
  virtual std::vector<Word> relators() const = 0;

  std::string describe() const;

 protected:
  GroupOracle(OracleSpec spec, WordStyle style);
  virtual Word normalize_checked(const Word& w) const = 0;

 private:
  OracleSpec spec_;
  WordStyle style_;
};

using OraclePtr = std::shared_ptr<const GroupOracle>;

/// Builds an oracle, filling default weights (all 1; q and p for a and b of a
/// torus-knot group) and rejecting weights that do not vanish on relators.
OraclePtr make_oracle(OracleSpec spec);

OraclePtr free_group(int rank, std::vector<int> weights = {});
OraclePtr free_abelian_group(int rank, std::vector<int> weights = {});
OraclePtr braid_group(int strands, std::vector<int> weights = {});
OraclePtr torus_knot_group(int p, int q, std::vector<int> weights = {});

/// Homomorphism gamma from the free group on x_1..x_n into a built-in group.
///
/// The constructor normalizes the images and enforces psi(gamma(x_i)) = 1 for
/// every i, so that phi = psi o gamma is the map x_i -> 1.
class GammaMap {
 public:
  GammaMap(OraclePtr target, std::vector<Word> images);

  const OraclePtr& target() const { return target_; }
  const GroupOracle& oracle() const { return *target_; }
  int rank() const { return static_cast<int>(images_.size()); }
  const std::vector<Word>& images() const { return images_; }
  /// gamma(g_i) = gamma(x_1) ... gamma(x_i), normalized.
  const std::vector<Word>& g_images() const { return g_images_; }

  Word apply(const Word& x_word) const;
  Word apply_g(const Word& g_word) const;

  friend bool operator==(const GammaMap& a, const GammaMap& b) {
    return a.target_->spec() == b.target_->spec() && a.images_ == b.images_;
  }

 private:
  OraclePtr target_;
  std::vector<Word> images_;
  std::vector<Word> g_images_;
};

/// gamma = id: F_n -> F_n.
GammaMap identity_gamma(int n);
/// gamma = abelianization F_n -> Z^n.
GammaMap abelianization_gamma(int n);
/// Every x_i to the generator of Z (all meridians identified).
GammaMap cyclic_gamma(int n);

enum class Alphabet { x, g };

/// Substitutes generator images into an element of Z[F_n] written in the
/// given alphabet, normalizes every term and merges coefficients.
IntElement apply_gamma(const GammaMap& gamma, const IntElement& a, Alphabet alphabet = Alphabet::x);

/// True iff every relator maps to the identity of the target group.
bool verify_gamma(const GammaMap& gamma, const std::vector<Word>& relators, Alphabet alphabet = Alphabet::x);

/// All normal forms of word length <= radius, in shortlex order (identity
/// first). Throws ResourceLimit when more than `cap` elements are produced.
std::vector<Word> ball(const GroupOracle& oracle, int radius, std::size_t cap = 2'000'000);

}  // namespace l2b
