#include "l2burau/groups.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "l2burau/fox.hpp"
#include "l2burau/garside.hpp"

namespace l2b {

std::string to_string(OracleKind k) {
  switch (k) {
    case OracleKind::free: return "free";
    case OracleKind::free_abelian: return "free-abelian";
    case OracleKind::braid: return "braid";
    case OracleKind::torus_knot: return "torus-knot";
  }
  return "?";
}

OracleKind oracle_kind_from_string(const std::string& s) {
  if (s == "free") return OracleKind::free;
  if (s == "free-abelian") return OracleKind::free_abelian;
  if (s == "braid") return OracleKind::braid;
  if (s == "torus-knot") return OracleKind::torus_knot;
  throw std::invalid_argument("unknown oracle kind \"" + s + "\" (expected free, free-abelian, braid, torus-knot)");
}

GroupOracle::GroupOracle(OracleSpec spec, WordStyle style) : spec_(std::move(spec)), style_(std::move(style)) {}

Word GroupOracle::normalize(const Word& w) const {
  for (Letter l : w.letters()) {
    if (generator_of(l) > alphabet_size()) {
      throw std::out_of_range("letter " + std::to_string(l) + " outside the alphabet of " + describe());
    }
  }
  return normalize_checked(w);
}

std::string GroupOracle::describe() const {
  std::ostringstream out;
  out << to_string(spec_.kind);
  switch (spec_.kind) {
    case OracleKind::torus_knot: out << "(" << spec_.p << "," << spec_.q << ")"; break;
    case OracleKind::braid: out << "(B_" << spec_.rank << ")"; break;
    default: out << "(rank " << spec_.rank << ")"; break;
  }
  out << " weights [";
  for (std::size_t k = 0; k < spec_.weights.size(); ++k) out << (k ? "," : "") << spec_.weights[k];
  out << "]";
  return out.str();
}

namespace {

class FreeOracle final : public GroupOracle {
 public:
  explicit FreeOracle(OracleSpec spec)
      : GroupOracle(spec, WordStyle{spec.prefix.empty() ? "x" : spec.prefix, false}) {}
  bool is_infinite_cyclic() const override { return spec().rank == 1; }
  std::vector<Word> relators() const override { return {}; }

 protected:
  Word normalize_checked(const Word& w) const override { return w; }
};

class FreeAbelianOracle final : public GroupOracle {
 public:
  explicit FreeAbelianOracle(OracleSpec spec)
      : GroupOracle(spec, WordStyle{spec.prefix.empty() ? "x" : spec.prefix, false}) {}
  bool is_infinite_cyclic() const override { return spec().rank == 1; }
  std::vector<Word> relators() const override {
    std::vector<Word> out;
    for (int i = 1; i <= spec().rank; ++i)
      for (int j = i + 1; j <= spec().rank; ++j) out.push_back(Word::reduce({i, j, -i, -j}));
    return out;
  }

 protected:
  Word normalize_checked(const Word& w) const override {
    std::vector<long long> exps(static_cast<std::size_t>(spec().rank), 0);
    for (Letter l : w.letters()) exps[static_cast<std::size_t>(generator_of(l) - 1)] += sign_of(l);
    std::vector<Letter> raw;
    for (int i = 1; i <= spec().rank; ++i) {
      long long e = exps[static_cast<std::size_t>(i - 1)];
      for (long long k = 0; k < (e < 0 ? -e : e); ++k) raw.push_back(e < 0 ? -i : i);
    }
    return Word::reduce(raw);
  }
};

class BraidOracle final : public GroupOracle {
 public:
  explicit BraidOracle(OracleSpec spec) : GroupOracle(spec, WordStyle{spec.prefix.empty() ? "s" : spec.prefix, false}) {}
  bool is_infinite_cyclic() const override { return spec().rank == 2; }
  std::vector<Word> relators() const override {
    std::vector<Word> out;
    const int n = spec().rank;
    for (int i = 1; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (j == i + 1) {
          out.push_back(Word::reduce({i, j, i, -j, -i, -j}));
        } else {
          out.push_back(Word::reduce({i, j, -i, -j}));
        }
      }
    }
    return out;
  }

 protected:
  Word normalize_checked(const Word& w) const override {
    std::vector<Letter> letters(w.letters().begin(), w.letters().end());
    BraidWord nf_word = to_braid_word(garside_nf(BraidWord(spec().rank, std::move(letters))));
    return Word::reduce(nf_word.letters());
  }
};

// <a, b | a^p = b^q> as an amalgam over the central element c = a^p = b^q.
// Normal form c^k s_1 ... s_m with alternating syllables a^1..a^{p-1} and
// b^1..b^{q-1}, spelled as the word a^{pk} s_1 ... s_m.
class TorusKnotOracle final : public GroupOracle {
 public:
  explicit TorusKnotOracle(OracleSpec spec) : GroupOracle(spec, WordStyle{"", true}) {}
  bool is_infinite_cyclic() const override { return false; }
  std::vector<Word> relators() const override {
    std::vector<Letter> raw(static_cast<std::size_t>(spec().p), 1);
    raw.insert(raw.end(), static_cast<std::size_t>(spec().q), -2);
    return {Word::reduce(raw)};
  }

 protected:
  Word normalize_checked(const Word& w) const override {
    const int p = spec().p;
    const int q = spec().q;
    long long central = 0;
    struct Syllable {
      int gen;
      int exp;
    };
    std::vector<Syllable> syl;
    for (Letter l : w.letters()) {
      const int g = generator_of(l);
      const int order = g == 1 ? p : q;
      if (!syl.empty() && syl.back().gen == g) {
        int e = syl.back().exp + sign_of(l);
        if (e == 0) {
          syl.pop_back();
        } else if (e == order) {
          syl.pop_back();
          ++central;
        } else {
          syl.back().exp = e;
        }
      } else if (l > 0) {
        syl.push_back({g, 1});
      } else {
        // x^-1 = c^-1 x^{order-1}
        syl.push_back({g, order - 1});
        --central;
      }
    }
    std::vector<Letter> raw;
    for (long long k = 0; k < (central < 0 ? -central : central) * p; ++k) raw.push_back(central < 0 ? -1 : 1);
    for (const auto& s : syl)
      for (int k = 0; k < s.exp; ++k) raw.push_back(s.gen);
    return Word::reduce(raw);
  }
};

}  // namespace

OraclePtr make_oracle(OracleSpec spec) {
  int alphabet = 0;
  switch (spec.kind) {
    case OracleKind::free:
    case OracleKind::free_abelian:
      if (spec.rank < 1) throw std::invalid_argument("group rank must be >= 1");
      alphabet = spec.rank;
      break;
    case OracleKind::braid:
      if (spec.rank < 2) throw std::invalid_argument("braid group oracle needs at least 2 strands");
      alphabet = spec.rank - 1;
      break;
    case OracleKind::torus_knot:
      if (spec.p < 2 || spec.q < 2) throw std::invalid_argument("torus-knot group needs p, q >= 2");
      alphabet = 2;
      break;
  }
  if (spec.weights.empty()) {
    if (spec.kind == OracleKind::torus_knot) {
      spec.weights = {spec.q, spec.p};
    } else {
      spec.weights.assign(static_cast<std::size_t>(alphabet), 1);
    }
  }
  if (static_cast<int>(spec.weights.size()) != alphabet) {
    throw std::invalid_argument("expected " + std::to_string(alphabet) + " generator weights, got " +
                                std::to_string(spec.weights.size()));
  }
  OraclePtr out;
  switch (spec.kind) {
    case OracleKind::free: out = std::make_shared<FreeOracle>(spec); break;
    case OracleKind::free_abelian: out = std::make_shared<FreeAbelianOracle>(spec); break;
    case OracleKind::braid: out = std::make_shared<BraidOracle>(spec); break;
    case OracleKind::torus_knot: out = std::make_shared<TorusKnotOracle>(spec); break;
  }
  for (const Word& r : out->relators()) {
    if (out->weight(r) != 0) throw std::invalid_argument("weights are not well defined on " + out->describe());
  }
  return out;
}

OraclePtr free_group(int rank, std::vector<int> weights) {
  return make_oracle({OracleKind::free, rank, 2, 3, std::move(weights), {}});
}
OraclePtr free_abelian_group(int rank, std::vector<int> weights) {
  return make_oracle({OracleKind::free_abelian, rank, 2, 3, std::move(weights), {}});
}
OraclePtr braid_group(int strands, std::vector<int> weights) {
  return make_oracle({OracleKind::braid, strands, 2, 3, std::move(weights), {}});
}
OraclePtr torus_knot_group(int p, int q, std::vector<int> weights) {
  return make_oracle({OracleKind::torus_knot, 2, p, q, std::move(weights), {}});
}

GammaMap::GammaMap(OraclePtr target, std::vector<Word> images) : target_(std::move(target)) {
  if (!target_) throw std::invalid_argument("gamma: missing target group");
  if (images.empty()) throw std::invalid_argument("gamma: needs at least one image");
  images_.reserve(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) {
    Word img = target_->normalize(images[i]);
    if (target_->weight(img) != 1) {
      throw std::invalid_argument("gamma: psi(gamma(x" + std::to_string(i + 1) + ")) = " +
                                  std::to_string(target_->weight(img)) + ", expected 1");
    }
    images_.push_back(std::move(img));
  }
  Word acc;
  for (const Word& img : images_) {
    acc = target_->multiply(acc, img);
    g_images_.push_back(acc);
  }
}

Word GammaMap::apply(const Word& x_word) const { return target_->normalize(rewrite_alphabet(x_word, images_)); }

Word GammaMap::apply_g(const Word& g_word) const { return target_->normalize(rewrite_alphabet(g_word, g_images_)); }

GammaMap identity_gamma(int n) {
  std::vector<Word> images;
  for (int i = 1; i <= n; ++i) images.push_back(Word::generator(i));
  return GammaMap(free_group(n), std::move(images));
}

GammaMap abelianization_gamma(int n) {
  std::vector<Word> images;
  for (int i = 1; i <= n; ++i) images.push_back(Word::generator(i));
  return GammaMap(free_abelian_group(n), std::move(images));
}

GammaMap cyclic_gamma(int n) {
  return GammaMap(free_abelian_group(1), std::vector<Word>(static_cast<std::size_t>(n), Word::generator(1)));
}

IntElement apply_gamma(const GammaMap& gamma, const IntElement& a, Alphabet alphabet) {
  return a.map_words([&](const Word& w) { return alphabet == Alphabet::x ? gamma.apply(w) : gamma.apply_g(w); });
}

bool verify_gamma(const GammaMap& gamma, const std::vector<Word>& relators, Alphabet alphabet) {
  return std::all_of(relators.begin(), relators.end(), [&](const Word& r) {
    return (alphabet == Alphabet::x ? gamma.apply(r) : gamma.apply_g(r)).is_identity();
  });
}

std::vector<Word> ball(const GroupOracle& oracle, int radius, std::size_t cap) {
  if (radius < 0) throw std::invalid_argument("ball radius must be >= 0");
  std::unordered_set<Word, WordHash> seen{Word{}};
  std::vector<Word> frontier{Word{}};
  std::vector<Word> all{Word{}};
  std::vector<Word> gens;
  for (int i = 1; i <= oracle.alphabet_size(); ++i) {
    gens.push_back(Word::generator(i, 1));
    gens.push_back(Word::generator(i, -1));
  }
  for (int r = 0; r < radius && !frontier.empty(); ++r) {
    std::vector<Word> next;
    for (const Word& u : frontier) {
      for (const Word& g : gens) {
        Word v = oracle.multiply(u, g);
        if (seen.insert(v).second) {
          if (seen.size() > cap) {
            throw ResourceLimit("ball of radius " + std::to_string(radius) + " in " + oracle.describe() +
                                " exceeds the cap of " + std::to_string(cap) + " elements");
          }
          next.push_back(v);
        }
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  std::sort(all.begin(), all.end(), ShortlexLess{});
  return all;
}

}  // namespace l2b
