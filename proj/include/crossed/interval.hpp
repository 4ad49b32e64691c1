#pragma once

// The interval category: objects <<n>> = {-inf, 1, ..., n, +inf}, morphisms
// stored as count vectors (k_-inf, k_1, ..., k_n, k_+inf).

#include <climits>
#include <cstddef>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "perm.hpp"

namespace crossed {

inline constexpr int neg_inf = INT_MIN;
inline constexpr int pos_inf = INT_MAX;

inline bool is_infinite(int point) { return point == neg_inf || point == pos_inf; }

inline std::string point_to_string(int point) {
  if (point == neg_inf) return "-inf";
  if (point == pos_inf) return "+inf";
  return std::to_string(point);
}

struct SignedPermutation {
  Permutation perm;
  bool flip = false;

  static SignedPermutation identity(std::size_t n) { return {Permutation::identity(n), false}; }
  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
};

/// (tau; d)(sigma; e) = (tau sigma; d + e).
inline SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b) {
  return {compose(a.perm, b.perm), a.flip != b.flip};
}

class IntervalMorphism {
 public:
  IntervalMorphism() : IntervalMorphism(std::vector<int>{0, 0}) {}

  /// counts = (k_-inf, k_1, ..., k_n, k_+inf); the domain is their sum.
  explicit IntervalMorphism(std::vector<int> counts) : counts_(std::move(counts)) {
    if (counts_.size() < 2) throw std::invalid_argument("IntervalMorphism: need at least two counts");
    domain_ = 0;
    for (int c : counts_) {
      if (c < 0) throw std::invalid_argument("IntervalMorphism: negative count");
      domain_ += c;
    }
  }

  static IntervalMorphism identity(int n) {
    std::vector<int> counts(static_cast<std::size_t>(n) + 2, 1);
    counts.front() = 0;
    counts.back() = 0;
    return IntervalMorphism(std::move(counts));
  }

  /// Build from the images of the interior points 1..m, which must be weakly increasing.
  static IntervalMorphism from_values(int n, const std::vector<int>& values) {
    std::vector<int> counts(static_cast<std::size_t>(n) + 2, 0);
    int previous = neg_inf;
    for (int v : values) {
      if (v < previous) throw std::invalid_argument("IntervalMorphism::from_values: not order-preserving");
      previous = v;
      if (v == neg_inf) {
        ++counts.front();
      } else if (v == pos_inf) {
        ++counts.back();
      } else if (v >= 1 && v <= n) {
        ++counts[static_cast<std::size_t>(v)];
      } else {
        throw std::invalid_argument("IntervalMorphism::from_values: value out of range");
      }
    }
    return IntervalMorphism(std::move(counts));
  }

  int domain() const { return domain_; }
  int codomain() const { return static_cast<int>(counts_.size()) - 2; }
  const std::vector<int>& counts() const { return counts_; }
  int k_neg() const { return counts_.front(); }
  int k_pos() const { return counts_.back(); }
  /// k_j for 1 <= j <= n.
  int k(int j) const { return counts_[static_cast<std::size_t>(j)]; }
  std::vector<int> interior_counts() const { return {counts_.begin() + 1, counts_.end() - 1}; }

  int operator()(int i) const {
    if (i == neg_inf || i == pos_inf) return i;
    if (i < 1 || i > domain_) throw std::out_of_range("IntervalMorphism: point outside <<m>>");
    int acc = counts_.front();
    if (i <= acc) return neg_inf;
    for (int j = 1; j <= codomain(); ++j) {
      acc += counts_[static_cast<std::size_t>(j)];
      if (i <= acc) return j;
    }
    return pos_inf;
  }

  /// Images of 1..m.
  std::vector<int> values() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(domain_));
    for (std::size_t j = 0; j < counts_.size(); ++j) {
      const int image = j == 0 ? neg_inf : (j + 1 == counts_.size() ? pos_inf : static_cast<int>(j));
      out.insert(out.end(), static_cast<std::size_t>(counts_[j]), image);
    }
    return out;
  }

  friend bool operator==(const IntervalMorphism& a, const IntervalMorphism& b) { return a.counts_ == b.counts_; }
  friend auto operator<=>(const IntervalMorphism& a, const IntervalMorphism& b) {
    if (auto c = a.codomain() <=> b.codomain(); c != 0) return c;
    if (auto c = a.domain_ <=> b.domain_; c != 0) return c;
    return a.counts_ <=> b.counts_;
  }

  std::string to_string() const {
    std::ostringstream os;
    os << "<<" << domain_ << ">>-><<" << codomain() << ">>(";
    for (std::size_t j = 0; j < counts_.size(); ++j) os << (j ? "," : "") << counts_[j];
    os << ')';
    return os.str();
  }

 private:
  std::vector<int> counts_;
  int domain_ = 0;
};

/// phi after psi.
inline IntervalMorphism compose(const IntervalMorphism& phi, const IntervalMorphism& psi) {
  if (psi.codomain() != phi.domain()) throw std::invalid_argument("compose: psi.codomain != phi.domain");
  std::vector<int> values = psi.values();
  for (int& v : values) v = phi(v);
  return IntervalMorphism::from_values(phi.codomain(), values);
}

/// Every morphism <<m>> -> <<n>>, in lexicographic order of count vectors.
inline std::vector<IntervalMorphism> hom_enumerate(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("hom_enumerate: negative degree");
  std::vector<IntervalMorphism> out;
  std::vector<int> counts(static_cast<std::size_t>(n) + 2, 0);
  auto rec = [&](auto& self, std::size_t slot, int remaining) -> void {
    if (slot + 1 == counts.size()) {
      counts[slot] = remaining;
      out.emplace_back(counts);
      return;
    }
    for (int c = 0; c <= remaining; ++c) {
      counts[slot] = c;
      self(self, slot + 1, remaining - c);
    }
  };
  rec(rec, 0, m);
  return out;
}

/// Left action of S_n x Z/2 on hom(<<m>>, <<n>>).
inline IntervalMorphism act(const IntervalMorphism& phi, const SignedPermutation& g) {
  const int n = phi.codomain();
  if (static_cast<int>(g.perm.degree()) != n) throw std::invalid_argument("act: degree mismatch");
  std::vector<int> counts(phi.counts().size());
  counts.front() = g.flip ? phi.k_pos() : phi.k_neg();
  counts.back() = g.flip ? phi.k_neg() : phi.k_pos();
  const Permutation inv = g.perm.inverse();
  for (int j = 1; j <= n; ++j) counts[static_cast<std::size_t>(j)] = phi.k(inv(j));
  return IntervalMorphism(std::move(counts));
}

inline bool is_active(const IntervalMorphism& phi) { return phi.k_neg() == 0 && phi.k_pos() == 0; }

inline bool is_inert(const IntervalMorphism& phi) {
  for (int j = 1; j <= phi.codomain(); ++j) {
    if (phi.k(j) != 1) return false;
  }
  return true;
}

struct InertActive {
  IntervalMorphism rho;  // inert
  IntervalMorphism mu;   // active
};

/// phi = mu rho with rho inert and mu active.
inline InertActive inert_active_factorize(const IntervalMorphism& phi) {
  const int interior = phi.domain() - phi.k_neg() - phi.k_pos();
  std::vector<int> rho_counts(static_cast<std::size_t>(interior) + 2, 1);
  rho_counts.front() = phi.k_neg();
  rho_counts.back() = phi.k_pos();
  std::vector<int> mu_counts = phi.counts();
  mu_counts.front() = 0;
  mu_counts.back() = 0;
  return {IntervalMorphism(std::move(rho_counts)), IntervalMorphism(std::move(mu_counts))};
}

/// The unique delta with rho delta = id.
inline IntervalMorphism inert_section(const IntervalMorphism& rho) {
  if (!is_inert(rho)) throw std::invalid_argument("inert_section: morphism is not inert");
  const int k = rho.codomain();
  std::vector<int> values(static_cast<std::size_t>(k));
  for (int j = 1; j <= k; ++j) values[static_cast<std::size_t>(j - 1)] = rho.k_neg() + j;
  return IntervalMorphism::from_values(rho.domain(), values);
}

inline bool dissociated(const IntervalMorphism& phi1, const IntervalMorphism& phi2) {
  if (phi1.domain() != phi2.domain()) throw std::invalid_argument("dissociated: domain mismatch");
  for (int i = 1; i <= phi1.domain(); ++i) {
    if (!is_infinite(phi1(i)) && !is_infinite(phi2(i))) return false;
  }
  return true;
}

/// The active morphism <<k_1+...+k_n>> -> <<n>> with fibers of sizes k.
inline IntervalMorphism mu_of(const std::vector<int>& k) {
  std::vector<int> counts;
  counts.reserve(k.size() + 2);
  counts.push_back(0);
  counts.insert(counts.end(), k.begin(), k.end());
  counts.push_back(0);
  return IntervalMorphism(std::move(counts));
}

/// The inert morphism <<k_1+...+k_n>> -> <<k_j>> keeping the j-th block.
inline IntervalMorphism rho_of(const std::vector<int>& k, int j) {
  if (j < 1 || j > static_cast<int>(k.size())) throw std::out_of_range("rho_of: block index out of range");
  const auto jj = static_cast<std::size_t>(j);
  const int before = std::accumulate(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(jj - 1), 0);
  const int after = std::accumulate(k.begin() + static_cast<std::ptrdiff_t>(jj), k.end(), 0);
  std::vector<int> counts(static_cast<std::size_t>(k[jj - 1]) + 2, 1);
  counts.front() = before;
  counts.back() = after;
  return IntervalMorphism(std::move(counts));
}

inline bool is_augmented_simplicial(const IntervalMorphism& phi) { return is_active(phi); }

/// Join of augmented simplicial morphisms.
inline IntervalMorphism join(const IntervalMorphism& phi1, const IntervalMorphism& phi2) {
  if (!is_augmented_simplicial(phi1) || !is_augmented_simplicial(phi2)) {
    throw std::invalid_argument("join: inputs must be augmented simplicial");
  }
  std::vector<int> k = phi1.interior_counts();
  const std::vector<int> k2 = phi2.interior_counts();
  k.insert(k.end(), k2.begin(), k2.end());
  return mu_of(k);
}

inline IntervalMorphism join(const std::vector<IntervalMorphism>& parts) {
  std::vector<int> k;
  for (const auto& p : parts) {
    if (!is_augmented_simplicial(p)) throw std::invalid_argument("join: inputs must be augmented simplicial");
    const auto ki = p.interior_counts();
    k.insert(k.end(), ki.begin(), ki.end());
  }
  return mu_of(k);
}

}  // namespace crossed
