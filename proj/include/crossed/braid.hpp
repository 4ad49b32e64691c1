#pragma once

// The braid group operad: words in the Artin generators, equality through
// the Artin action on the free group, composition by cabling.

#include <cstdlib>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "perm.hpp"

namespace crossed {

/// Reduced word in the free group on x_1..x_n; letter +i is x_i, -i its inverse.
class FreeWord {
 public:
  FreeWord() = default;
  explicit FreeWord(const std::vector<int>& letters) {
    for (int l : letters) push(l);
  }
  static FreeWord generator(int i) { return FreeWord({i}); }

  void push(int letter) {
    if (!letters_.empty() && letters_.back() == -letter) {
      letters_.pop_back();
    } else {
      letters_.push_back(letter);
    }
  }
  void append(const FreeWord& w) {
    for (int l : w.letters_) push(l);
  }
  void append_inverse(const FreeWord& w) {
    for (auto it = w.letters_.rbegin(); it != w.letters_.rend(); ++it) push(-*it);
  }
  FreeWord inverse() const {
    FreeWord out;
    out.append_inverse(*this);
    return out;
  }

  const std::vector<int>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  friend bool operator==(const FreeWord&, const FreeWord&) = default;

  std::string to_string() const {
    if (letters_.empty()) return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < letters_.size(); ++i) {
      os << (i ? " " : "") << "x" << std::abs(letters_[i]) << (letters_[i] < 0 ? "^-1" : "");
    }
    return os.str();
  }

 private:
  std::vector<int> letters_;
};

/// sigma_{l_1} sigma_{l_2} ... on a fixed number of strands; negative letters are inverses.
struct BraidWord {
  int strands = 0;
  std::vector<int> letters;

  BraidWord() = default;
  BraidWord(int n, std::vector<int> ls) : strands(n), letters(std::move(ls)) {
    if (n < 0) throw std::invalid_argument("BraidWord: negative strand count");
    for (int l : letters) {
      if (l == 0 || std::abs(l) >= n) {
        throw std::invalid_argument("BraidWord: letter " + std::to_string(l) + " out of range for " +
                                    std::to_string(n) + " strands");
      }
    }
  }
  static BraidWord identity(int n) { return BraidWord(n, {}); }

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

  std::string to_string() const {
    std::ostringstream os;
    os << "B" << strands << "[";
    for (std::size_t i = 0; i < letters.size(); ++i) os << (i ? " " : "") << letters[i];
    os << "]";
    return os.str();
  }
};

/// Space-separated signed generator indices, e.g. "1 2 -1".
inline BraidWord parse_braid_word(int strands, const std::string& text) {
  std::istringstream in(text);
  std::vector<int> letters;
  int l = 0;
  while (in >> l) letters.push_back(l);
  if (!in.eof()) throw std::runtime_error("braid word: expected signed integers, got '" + text + "'");
  return BraidWord(strands, std::move(letters));
}

/// Images of x_1..x_n under the automorphism of the free group attached to the word.
inline std::vector<FreeWord> artin_action(const BraidWord& b) {
  std::vector<FreeWord> images;
  images.reserve(static_cast<std::size_t>(b.strands));
  for (int j = 1; j <= b.strands; ++j) images.push_back(FreeWord::generator(j));
  for (int letter : b.letters) {
    const auto i = static_cast<std::size_t>(std::abs(letter) - 1);
    FreeWord a = std::move(images[i]), c = std::move(images[i + 1]);
    if (letter > 0) {
      // x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i
      FreeWord first = a;
      first.append(c);
      first.append_inverse(a);
      images[i] = std::move(first);
      images[i + 1] = std::move(a);
    } else {
      // x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
      FreeWord second = c.inverse();
      second.append(a);
      second.append(c);
      images[i] = std::move(c);
      images[i + 1] = std::move(second);
    }
  }
  return images;
}

inline bool braid_equal(const BraidWord& b1, const BraidWord& b2) {
  if (b1.strands != b2.strands) throw std::invalid_argument("braid_equal: strand count mismatch");
  if (b1.letters == b2.letters) return true;
  return artin_action(b1) == artin_action(b2);
}

/// The underlying permutation; the image of uv is compose(image u, image v).
inline Permutation braid_to_perm(const BraidWord& b) {
  std::vector<int> images(static_cast<std::size_t>(b.strands));
  for (int i = 0; i < b.strands; ++i) images[static_cast<std::size_t>(i)] = i + 1;
  // Letters act right to left: p = s_{l_1} o s_{l_2} o ...
  for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it) {
    const int a = std::abs(*it);
    for (int& v : images) {
      if (v == a) {
        v = a + 1;
      } else if (v == a + 1) {
        v = a;
      }
    }
  }
  return Permutation(std::move(images));
}

inline bool is_pure_braid(const BraidWord& b) { return braid_to_perm(b).is_identity(); }

inline BraidWord braid_mul(const BraidWord& a, const BraidWord& b) {
  if (a.strands != b.strands) throw std::invalid_argument("braid_mul: strand count mismatch");
  BraidWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

inline BraidWord braid_inverse(const BraidWord& b) {
  BraidWord out(b.strands, {});
  for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it) out.letters.push_back(-*it);
  return out;
}

namespace detail {

/// Positive word crossing the block of width a (strands offset+1..offset+a)
/// over the following block of width b.
inline std::vector<int> block_crossing(int offset, int a, int b) {
  std::vector<int> applied;
  for (int t = a; t >= 1; --t) {
    for (int s = offset + t; s <= offset + t + b - 1; ++s) applied.push_back(s);
  }
  return {applied.rbegin(), applied.rend()};
}

}  // namespace detail

/// The cable of b with strand i replaced by k_i parallel strands.
inline BraidWord braid_cable(const BraidWord& b, const std::vector<int>& widths) {
  if (static_cast<int>(widths.size()) != b.strands) throw std::invalid_argument("braid_cable: width count mismatch");
  std::vector<int> w = widths;
  int total = 0;
  for (int k : widths) total += k;
  std::vector<std::vector<int>> blocks(b.letters.size());
  for (std::size_t idx = b.letters.size(); idx-- > 0;) {
    const int letter = b.letters[idx];
    const auto j = static_cast<std::size_t>(std::abs(letter) - 1);
    int offset = 0;
    for (std::size_t t = 0; t < j; ++t) offset += w[t];
    if (letter > 0) {
      blocks[idx] = detail::block_crossing(offset, w[j], w[j + 1]);
    } else {
      const auto crossing = detail::block_crossing(offset, w[j + 1], w[j]);
      for (auto it = crossing.rbegin(); it != crossing.rend(); ++it) blocks[idx].push_back(-*it);
    }
    std::swap(w[j], w[j + 1]);
  }
  BraidWord out(total, {});
  for (const auto& blk : blocks) out.letters.insert(out.letters.end(), blk.begin(), blk.end());
  return out;
}

/// gamma(b; b_1, ..., b_n): the inputs side by side, followed by the cable of b.
inline BraidWord braid_gamma(const BraidWord& b, const std::vector<BraidWord>& inputs) {
  if (static_cast<int>(inputs.size()) != b.strands) throw std::invalid_argument("braid_gamma: wrong number of inputs");
  std::vector<int> widths;
  for (const auto& in : inputs) widths.push_back(in.strands);
  BraidWord out = braid_cable(b, widths);
  int offset = 0;
  for (const auto& in : inputs) {
    for (int l : in.letters) out.letters.push_back(l > 0 ? l + offset : l - offset);
    offset += in.strands;
  }
  return out;
}

/// The braid group operad with its projection to S.
class BraidOperad {
 public:
  using element_type = BraidWord;

  std::string name() const { return "braid"; }
  BraidWord gamma(const BraidWord& x, const std::vector<BraidWord>& xs) const { return braid_gamma(x, xs); }
  BraidWord identity() const { return BraidWord::identity(1); }
  int arity(const BraidWord& x) const { return x.strands; }
  bool equal(const BraidWord& a, const BraidWord& b) const { return braid_equal(a, b); }
  std::string describe(const BraidWord& x) const { return x.to_string(); }
  BraidWord unit(int n) const { return BraidWord::identity(n); }
  Permutation to_sym(const BraidWord& x) const { return braid_to_perm(x); }
  BraidWord mul(const BraidWord& a, const BraidWord& b) const { return braid_mul(a, b); }
  BraidWord inv(const BraidWord& a) const { return braid_inverse(a); }

  /// A random word of length at most maxlen.
  BraidWord sample(int n, std::mt19937_64& rng, int maxlen) const {
    BraidWord out(n, {});
    if (n < 2) return out;
    const int len = std::uniform_int_distribution<int>(0, maxlen)(rng);
    std::uniform_int_distribution<int> gen(1, n - 1), sign(0, 1);
    for (int i = 0; i < len; ++i) out.letters.push_back(sign(rng) ? gen(rng) : -gen(rng));
    return out;
  }
};

inline BraidOperad braid_operad() { return {}; }

}  // namespace crossed
