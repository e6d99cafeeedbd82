#include "l2burau/braid.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace l2b {

BraidWord::BraidWord(int strands, std::vector<Letter> letters) : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw std::invalid_argument("braid: strand count must be >= 1");
  for (Letter l : letters_) {
    if (l == 0 || generator_of(l) >= strands_) {
      throw std::invalid_argument("braid: generator index " + std::to_string(generator_of(l)) + " out of range for B_" +
                                  std::to_string(strands_));
    }
  }
}

BraidWord BraidWord::inverse() const {
  std::vector<Letter> inv(letters_.rbegin(), letters_.rend());
  for (Letter& l : inv) l = -l;
  return BraidWord(strands_, std::move(inv));
}

BraidWord BraidWord::power(int k) const {
  const BraidWord base = k < 0 ? inverse() : *this;
  std::vector<Letter> out;
  for (int r = 0; r < (k < 0 ? -k : k); ++r) out.insert(out.end(), base.letters_.begin(), base.letters_.end());
  return BraidWord(strands_, std::move(out));
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
  if (a.strands_ != b.strands_) throw std::invalid_argument("braid product: strand counts differ");
  std::vector<Letter> out = a.letters_;
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return BraidWord(a.strands_, std::move(out));
}

BraidWord parse_braid(std::string_view text, int strands) {
  std::vector<Letter> letters;
  // The word grammar is shared with group words; braid words are not reduced.
  std::istringstream in{std::string(text)};
  std::string token;
  std::size_t offset = 0;
  std::string all(text);
  while (in >> token) {
    offset = all.find(token, offset);
    // Only s<i> and signed integers; single letters would parse as lettered generators.
    const std::size_t lead = token[0] == '-' ? 1 : 0;
    if (lead >= token.size() || !(token[lead] == 's' || std::isdigit(static_cast<unsigned char>(token[lead])))) {
      throw ParseError("braid: bad generator \"" + token + "\"", 0, static_cast<int>(offset + lead) + 1);
    }
    Word w;
    try {
      w = parse_word(token);
    } catch (const ParseError& e) {
      throw ParseError("braid: bad generator \"" + token + "\"", 0, static_cast<int>(offset) + e.column());
    }
    // parse_word reduces, which is harmless for a single token ("s1^-2").
    letters.insert(letters.end(), w.letters().begin(), w.letters().end());
    offset += token.size();
  }
  int max_index = 0;
  for (Letter l : letters) max_index = std::max(max_index, generator_of(l));
  if (strands <= 0) strands = max_index + 1;
  if (max_index >= strands) {
    throw ParseError("braid: generator s" + std::to_string(max_index) + " needs at least " +
                         std::to_string(max_index + 1) + " strands",
                     0, 1);
  }
  return BraidWord(strands, std::move(letters));
}

std::string format_braid(const BraidWord& b) {
  if (b.letters().empty()) return "e";
  std::ostringstream out;
  bool first = true;
  for (Letter l : b.letters()) {
    if (!first) out << ' ';
    first = false;
    out << (l < 0 ? "-s" : "s") << generator_of(l);
  }
  return out.str();
}

namespace {

// Image of one letter under the automorphism of a single braid generator.
// `g_alphabet` selects the table on g_i = x_1...x_i instead of the x_i.
void push_image(std::vector<Letter>& out, Letter letter, Letter sigma, bool g_alphabet) {
  const int i = generator_of(sigma);
  const int j = generator_of(letter);
  std::vector<Letter> img;
  if (!g_alphabet) {
    if (sigma > 0) {
      if (j == i) img = {i, i + 1, -i};
      else if (j == i + 1) img = {i};
      else img = {j};
    } else {
      if (j == i) img = {i + 1};
      else if (j == i + 1) img = {-(i + 1), i, i + 1};
      else img = {j};
    }
  } else {
    if (j != i) {
      img = {j};
    } else if (sigma > 0) {
      img = {i + 1, -i};
      if (i > 1) img.push_back(i - 1);
    } else {
      if (i > 1) img.push_back(i - 1);
      img.push_back(-i);
      img.push_back(i + 1);
    }
  }
  auto emit = [&out](Letter l) {
    if (!out.empty() && out.back() == -l) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  };
  if (letter > 0) {
    for (Letter l : img) emit(l);
  } else {
    for (auto it = img.rbegin(); it != img.rend(); ++it) emit(-*it);
  }
}

std::vector<Word> act(const BraidWord& beta, bool g_alphabet) {
  const int n = beta.strands();
  std::vector<std::vector<Letter>> images(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) images[static_cast<std::size_t>(j - 1)] = {j};
  // h_{s1 s2 ... sk} = h_sk o ... o h_s1: substitute the first letter first.
  std::vector<Letter> next;
  for (Letter sigma : beta.letters()) {
    for (auto& w : images) {
      next.clear();
      next.reserve(w.size() + 4);
      for (Letter l : w) push_image(next, l, sigma, g_alphabet);
      w.swap(next);
    }
  }
  std::vector<Word> out;
  out.reserve(images.size());
  for (const auto& w : images) out.push_back(Word::reduce(w));
  return out;
}

void check_index(const BraidWord& beta, int j) {
  if (j < 1 || j > beta.strands()) throw std::out_of_range("generator index out of range for the braid's strands");
}

}  // namespace

std::vector<Word> act_on_x(const BraidWord& beta) { return act(beta, false); }

Word act_on_x(const BraidWord& beta, int j) {
  check_index(beta, j);
  return act(beta, false)[static_cast<std::size_t>(j - 1)];
}

std::vector<Word> act_on_g(const BraidWord& beta) { return act(beta, true); }

Word act_on_g(const BraidWord& beta, int j) {
  check_index(beta, j);
  return act(beta, true)[static_cast<std::size_t>(j - 1)];
}

std::vector<int> permutation(const BraidWord& beta) {
  const int n = beta.strands();
  std::vector<int> occupant(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) occupant[static_cast<std::size_t>(p)] = p;
  for (Letter l : beta.letters()) {
    auto k = static_cast<std::size_t>(generator_of(l) - 1);
    std::swap(occupant[k], occupant[k + 1]);
  }
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) perm[static_cast<std::size_t>(occupant[static_cast<std::size_t>(p)])] = p + 1;
  return perm;
}

int closure_components(const BraidWord& beta) {
  auto perm = permutation(beta);
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (std::size_t c = s; !seen[c]; c = static_cast<std::size_t>(perm[c] - 1)) seen[c] = true;
  }
  return cycles;
}

BraidWord longpaton() {
  // One entry per floor; letters on a floor commute.
  static const std::vector<std::vector<Letter>> floors = {
      {-1, 5}, {2, -4}, {3},     {4, -2}, {-5, 1}, {-5, 1}, {-5, 1}, {4, -2}, {3},     {2, -4}, {-1, 5}, {-1, 5},
      {-1, 5}, {2, -4}, {-3},    {4, -2}, {-5, 1}, {-5, 1}, {-5, 1}, {4, -2}, {-3},    {2, -4}, {-1, 5}, {-1, 5},
  };
  std::vector<Letter> letters;
  for (const auto& f : floors) letters.insert(letters.end(), f.begin(), f.end());
  return BraidWord(6, std::move(letters));
}

}  // namespace l2b
