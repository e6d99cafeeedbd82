#include "l2burau/garside.hpp"

#include <algorithm>

namespace l2b {

namespace {

using Perm = std::vector<int>;

Perm identity_perm(int n) {
  Perm p(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) p[static_cast<std::size_t>(x)] = x;
  return p;
}

Perm delta_perm(int n) {
  Perm p(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) p[static_cast<std::size_t>(x)] = n - 1 - x;
  return p;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[x] = a[static_cast<std::size_t>(b[x])];
  return out;
}

Perm invert(const Perm& a) {
  Perm out(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) out[static_cast<std::size_t>(a[x])] = static_cast<int>(x);
  return out;
}

bool is_identity(const Perm& p) {
  for (std::size_t x = 0; x < p.size(); ++x)
    if (p[x] != static_cast<int>(x)) return false;
  return true;
}

// i (0-based) is a right descent: the factor ends with sigma_{i+1}.
bool right_descent(const Perm& p, std::size_t i) { return p[i] > p[i + 1]; }

// i is a left descent: the factor starts with sigma_{i+1}.
bool left_descent(const Perm& p, std::size_t i) {
  std::size_t pi = 0, pj = 0;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (p[x] == static_cast<int>(i)) pi = x;
    if (p[x] == static_cast<int>(i + 1)) pj = x;
  }
  return pi > pj;
}

// p * s_i and s_i * p.
void right_mul_simple(Perm& p, std::size_t i) { std::swap(p[i], p[i + 1]); }
void left_mul_simple(Perm& p, std::size_t i) {
  for (int& v : p) {
    if (v == static_cast<int>(i)) v = static_cast<int>(i + 1);
    else if (v == static_cast<int>(i + 1)) v = static_cast<int>(i);
  }
}

// Moves letters from the front of b to the back of a until the pair is
// left-weighted (starting set of b inside finishing set of a).
bool slide(Perm& a, Perm& b) {
  bool changed = false;
  const std::size_t n = a.size();
  for (bool moved = true; moved;) {
    moved = false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (left_descent(b, i) && !right_descent(a, i)) {
        right_mul_simple(a, i);
        left_mul_simple(b, i);
        moved = changed = true;
      }
    }
  }
  return changed;
}

std::vector<Letter> least_reduced_word(Perm p) {
  std::vector<Letter> out;
  for (bool found = true; found;) {
    found = false;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
      if (left_descent(p, i)) {
        out.push_back(static_cast<Letter>(i + 1));
        left_mul_simple(p, i);
        found = true;
        break;
      }
    }
  }
  return out;
}

}  // namespace

GarsideNF garside_nf(const BraidWord& beta) {
  const int n = beta.strands();
  const Perm delta = delta_perm(n);
  GarsideNF nf;
  nf.strands = n;
  if (n == 1) return nf;

  auto tau = [&delta](const Perm& p) { return compose(compose(delta, p), delta); };
  std::vector<Perm> factors;
  int inf = 0;
  for (Letter l : beta.letters()) {
    auto i = static_cast<std::size_t>(generator_of(l) - 1);
    Perm s = identity_perm(n);
    right_mul_simple(s, i);
    if (l > 0) {
      factors.push_back(std::move(s));
    } else {
      // sigma^-1 = (sigma^-1 Delta) Delta^-1 and y Delta^-1 = Delta^-1 tau(y).
      Perm complement = compose(invert(s), delta);
      for (auto& f : factors) f = tau(f);
      factors.push_back(tau(complement));
      --inf;
    }
  }

  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t k = factors.size(); k-- > 1;) {
      if (slide(factors[k - 1], factors[k])) changed = true;
    }
    std::erase_if(factors, [](const Perm& p) { return is_identity(p); });
  }
  std::size_t lead = 0;
  while (lead < factors.size() && factors[lead] == delta) ++lead;
  inf += static_cast<int>(lead);
  factors.erase(factors.begin(), factors.begin() + static_cast<std::ptrdiff_t>(lead));

  nf.infimum = inf;
  nf.factors = std::move(factors);
  return nf;
}

BraidWord to_braid_word(const GarsideNF& nf) {
  const int n = nf.strands;
  std::vector<Letter> out;
  if (n > 1) {
    const std::vector<Letter> delta_word = least_reduced_word(delta_perm(n));
    for (int k = 0; k < std::abs(nf.infimum); ++k) {
      if (nf.infimum > 0) {
        out.insert(out.end(), delta_word.begin(), delta_word.end());
      } else {
        for (auto it = delta_word.rbegin(); it != delta_word.rend(); ++it) out.push_back(-*it);
      }
    }
    for (const auto& f : nf.factors) {
      auto w = least_reduced_word(f);
      out.insert(out.end(), w.begin(), w.end());
    }
  }
  return BraidWord(n, std::move(out));
}

}  // namespace l2b
