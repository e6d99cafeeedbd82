#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <unordered_map>
#include <utility>
#include <vector>

#include "l2burau/word.hpp"

namespace l2b {

using Integer = mpz_class;
using Rational = mpq_class;

/// Finite formal sum of words with coefficients in C: an element of C[G].
///
/// Keys are whatever canonical words the caller supplies (freely reduced for
/// free groups, oracle normal forms otherwise). Zero coefficients are never
/// stored. Multiplication with operator* is in the free group; use the
/// overload taking a word product for quotient groups.
template <class C>
class GroupRingElement {
 public:
  using Map = std::unordered_map<Word, C, WordHash>;

  GroupRingElement() = default;
  explicit GroupRingElement(const Word& w, C c = C(1)) { add_term(w, std::move(c)); }

  static GroupRingElement one() { return GroupRingElement(Word{}); }

  void add_term(const Word& w, const C& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  C coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? C(0) : it->second;
  }

  /// Terms in shortlex order of their words, for deterministic output.
  std::vector<std::pair<Word, C>> sorted_terms() const {
    std::vector<std::pair<Word, C>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return shortlex_less(a.first, b.first); });
    return out;
  }

  GroupRingElement& operator+=(const GroupRingElement& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  GroupRingElement& operator-=(const GroupRingElement& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, C(-c));
    return *this;
  }
  GroupRingElement& operator*=(const C& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [w, c] : terms_) c *= s;
    }
    return *this;
  }

  friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
  friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
  friend GroupRingElement operator-(GroupRingElement a) { return a *= C(-1); }
  friend GroupRingElement operator*(GroupRingElement a, const C& s) { return a *= s; }

  /// Bilinear extension of a word product `mul(u, v)`.
  template <class WordProduct>
  static GroupRingElement multiply(const GroupRingElement& a, const GroupRingElement& b, WordProduct&& mul) {
    GroupRingElement out;
    out.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [u, cu] : a.terms_) {
      for (const auto& [v, cv] : b.terms_) {
        out.add_term(mul(u, v), C(cu * cv));
      }
    }
    return out;
  }

  friend GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) {
    return multiply(a, b, [](const Word& u, const Word& v) { return u * v; });
  }

  /// Bar involution sum c_w w -> sum c_w w^-1.
  GroupRingElement conjugate() const {
    GroupRingElement out;
    out.terms_.reserve(terms_.size());
    for (const auto& [w, c] : terms_) out.terms_.emplace(w.inverse(), c);
    return out;
  }

  /// Applies a word map term by term, merging coefficients.
  template <class WordMap>
  GroupRingElement map_words(WordMap&& f) const {
    GroupRingElement out;
    for (const auto& [w, c] : terms_) out.add_term(f(w), c);
    return out;
  }

  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) { return a.terms_ == b.terms_; }

 private:
  Map terms_;
};

using IntElement = GroupRingElement<Integer>;

}  // namespace l2b
