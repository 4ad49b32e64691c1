#pragma once

// Permutations of <n> = {1, ..., n} in one-line notation and the operad
// structure of the symmetric groups.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace crossed {

class Permutation {
 public:
  Permutation() = default;

  /// images[i - 1] is the image of i; must be a bijection of {1, ..., n}.
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
      if (v < 1 || static_cast<std::size_t>(v) > images_.size() || seen[v - 1]) {
        throw std::invalid_argument("Permutation: images are not a bijection of <n>");
      }
      seen[v - 1] = true;
    }
  }

  static Permutation identity(std::size_t n) {
    std::vector<int> images(n);
    std::iota(images.begin(), images.end(), 1);
    return Permutation(std::move(images), unchecked{});
  }

  std::size_t degree() const { return images_.size(); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != static_cast<int>(i + 1)) return false;
    }
    return true;
  }

  Permutation inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i] - 1] = static_cast<int>(i + 1);
    return Permutation(std::move(inv), unchecked{});
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

  std::string to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < images_.size(); ++i) os << (i ? "," : "") << images_[i];
    os << ']';
    return os.str();
  }

  // Construction from already-validated images, used by the operations below.
  struct unchecked {};
  Permutation(std::vector<int> images, unchecked) : images_(std::move(images)) {}

 private:
  std::vector<int> images_;
};

/// p after q: result(i) = p(q(i)).
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> out;
  out.reserve(p.degree());
  for (std::size_t i = 0; i < p.degree(); ++i) out.push_back(p(q(static_cast<int>(i + 1))));
  return Permutation(std::move(out), Permutation::unchecked{});
}

inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

/// Order reversal i -> n - i + 1.
inline Permutation beta(std::size_t n) {
  std::vector<int> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<int>(n - i);
  return Permutation(std::move(images), Permutation::unchecked{});
}

/// beta(n) when flip is set, the identity otherwise.
inline Permutation beta_power(std::size_t n, bool flip) { return flip ? beta(n) : Permutation::identity(n); }

/// Operad composition of the symmetric groups. Each block i of width
/// blocks[i].degree() is permuted internally by blocks[i], then the blocks are
/// rearranged so that block i sits at block position sigma(i).
inline Permutation gamma_sym(const Permutation& sigma, const std::vector<Permutation>& blocks) {
  const std::size_t n = sigma.degree();
  if (blocks.size() != n) throw std::invalid_argument("gamma_sym: need one block per input");
  std::vector<std::size_t> width(n), source_offset(n), target_offset(n, 0);
  std::size_t total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    width[i] = blocks[i].degree();
    source_offset[i] = total;
    total += width[i];
  }
  // Block i lands after every block j with sigma(j) < sigma(i).
  std::vector<std::size_t> by_position(n);
  for (std::size_t i = 0; i < n; ++i) by_position[sigma(static_cast<int>(i + 1)) - 1] = i;
  std::size_t acc = 0;
  for (std::size_t pos = 0; pos < n; ++pos) {
    target_offset[by_position[pos]] = acc;
    acc += width[by_position[pos]];
  }
  std::vector<int> out(total);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t t = 1; t <= width[i]; ++t) {
      out[source_offset[i] + t - 1] =
          static_cast<int>(target_offset[i]) + blocks[i](static_cast<int>(t));
    }
  }
  return Permutation(std::move(out), Permutation::unchecked{});
}

/// gamma_sym(sigma; id_{w_1}, ..., id_{w_n}).
inline Permutation block_induced(const Permutation& sigma, const std::vector<std::size_t>& widths) {
  if (widths.size() != sigma.degree()) throw std::invalid_argument("block_induced: length mismatch");
  std::vector<Permutation> blocks;
  blocks.reserve(widths.size());
  for (std::size_t w : widths) blocks.push_back(Permutation::identity(w));
  return gamma_sym(sigma, blocks);
}

inline std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

/// Lexicographic rank in [0, n!).
inline std::uint64_t rank(const Permutation& p) {
  const std::size_t n = p.degree();
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t smaller = 0;
    for (std::size_t j = i + 1; j < n; ++j) smaller += p.images()[j] < p.images()[i];
    r = r * (n - i) + smaller;
  }
  return r;
}

inline Permutation unrank(std::size_t n, std::uint64_t r) {
  std::vector<std::size_t> digits(n);
  for (std::size_t i = n; i-- > 0;) {
    const std::size_t base = n - i;
    digits[i] = static_cast<std::size_t>(r % base);
    r /= base;
  }
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> images(n);
  for (std::size_t i = 0; i < n; ++i) {
    images[i] = pool[digits[i]];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digits[i]));
  }
  return Permutation(std::move(images), Permutation::unchecked{});
}

/// All n! permutations in lexicographic (rank) order.
inline std::vector<Permutation> all_permutations(std::size_t n) {
  std::vector<int> images(n);
  std::iota(images.begin(), images.end(), 1);
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  do {
    out.emplace_back(images, Permutation::unchecked{});
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

}  // namespace crossed
