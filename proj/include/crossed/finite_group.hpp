#pragma once

// Finite groups as multiplication tables over the indices 0..order-1, with
// index 0 the unit.

#include <cstdint>
#include <deque>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "perm.hpp"

namespace crossed {

class FiniteGroup {
 public:
  using index = std::uint32_t;

  FiniteGroup() : FiniteGroup(1, {0}) {}

  /// Row-major table: mul(a, b) = table[a * order + b]. Validates the group axioms.
  FiniteGroup(std::size_t order, std::vector<index> table) : FiniteGroup(order, std::move(table), true) {}

  /// Skips the cubic associativity scan, for tables produced by code that is
  /// already a group law (degreewise groups of crossed interval groups).
  static FiniteGroup from_trusted_table(std::size_t order, std::vector<index> table) {
    return FiniteGroup(order, std::move(table), false);
  }

  std::size_t order() const { return order_; }

 private:
  FiniteGroup(std::size_t order, std::vector<index> table, bool check_associativity)
      : order_(order), table_(std::move(table)) {
    if (order_ == 0) throw std::invalid_argument("FiniteGroup: order must be positive");
    if (table_.size() != order_ * order_) throw std::invalid_argument("FiniteGroup: table has wrong size");
    for (index v : table_) {
      if (v >= order_) throw std::invalid_argument("FiniteGroup: table entry out of range");
    }
    for (index a = 0; a < order_; ++a) {
      if (mul(0, a) != a || mul(a, 0) != a) {
        throw std::invalid_argument("FiniteGroup: index 0 is not a two-sided unit (element " + std::to_string(a) + ")");
      }
    }
    inv_.assign(order_, 0);
    for (index a = 0; a < order_; ++a) {
      std::optional<index> found;
      for (index b = 0; b < order_; ++b) {
        if (mul(a, b) == 0 && mul(b, a) == 0) {
          found = b;
          break;
        }
      }
      if (!found) throw std::invalid_argument("FiniteGroup: element " + std::to_string(a) + " has no inverse");
      inv_[a] = *found;
    }
    if (!check_associativity) return;
    for (index a = 0; a < order_; ++a) {
      for (index b = 0; b < order_; ++b) {
        for (index c = 0; c < order_; ++c) {
          if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
            throw std::invalid_argument("FiniteGroup: not associative at (" + std::to_string(a) + "," +
                                        std::to_string(b) + "," + std::to_string(c) + ")");
          }
        }
      }
    }
  }

 public:
  index mul(index a, index b) const { return table_[a * order_ + b]; }
  index inv(index a) const { return inv_[a]; }
  index unit() const { return 0; }
  const std::vector<index>& table() const { return table_; }

  bool is_abelian() const {
    for (index a = 0; a < order_; ++a) {
      for (index b = 0; b < a; ++b) {
        if (mul(a, b) != mul(b, a)) return false;
      }
    }
    return true;
  }

  index commutator(index a, index b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }

  /// Membership vector of the subgroup generated by gens.
  std::vector<bool> generated(const std::vector<index>& gens) const {
    std::vector<bool> in(order_, false);
    std::deque<index> queue{0};
    in[0] = true;
    while (!queue.empty()) {
      const index a = queue.front();
      queue.pop_front();
      for (index g : gens) {
        const index b = mul(a, g);
        if (!in[b]) {
          in[b] = true;
          queue.push_back(b);
        }
      }
    }
    return in;
  }

  /// Membership vector of the normal closure of the subset.
  std::vector<bool> normal_closure(const std::vector<bool>& subset) const {
    std::vector<index> gens;
    for (index a = 0; a < order_; ++a) {
      if (!subset[a]) continue;
      for (index g = 0; g < order_; ++g) gens.push_back(mul(mul(g, a), inv(g)));
    }
    return generated(gens);
  }

  /// A small generating set, found greedily.
  std::vector<index> generators() const {
    std::vector<index> gens;
    std::vector<bool> span = generated(gens);
    for (index a = 0; a < order_; ++a) {
      if (!span[a]) {
        gens.push_back(a);
        span = generated(gens);
      }
    }
    return gens;
  }

  bool is_homomorphism_to(const FiniteGroup& target, const std::vector<index>& f) const {
    if (f.size() != order_) return false;
    for (index a = 0; a < order_; ++a) {
      if (f[a] >= target.order()) return false;
      for (index b = 0; b < order_; ++b) {
        if (f[mul(a, b)] != target.mul(f[a], f[b])) return false;
      }
    }
    return true;
  }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.table_ == b.table_; }

 private:
  std::size_t order_;
  std::vector<index> table_;
  std::vector<index> inv_;
};

inline FiniteGroup trivial_group() { return FiniteGroup(); }

inline FiniteGroup cyclic_group(std::size_t n) {
  std::vector<FiniteGroup::index> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<FiniteGroup::index>((a + b) % n);
  }
  return FiniteGroup(n, std::move(table));
}

/// S_n with elements indexed by lexicographic rank and compose(p, q) as product.
inline FiniteGroup symmetric_group(std::size_t n) {
  const auto perms = all_permutations(n);
  const std::size_t order = perms.size();
  std::vector<FiniteGroup::index> table(order * order);
  for (std::size_t a = 0; a < order; ++a) {
    for (std::size_t b = 0; b < order; ++b) {
      table[a * order + b] = static_cast<FiniteGroup::index>(rank(compose(perms[a], perms[b])));
    }
  }
  return FiniteGroup(order, std::move(table));
}

/// Text format: "order N" then N rows of N indices.
inline FiniteGroup parse_group(std::istream& in) {
  std::string word;
  std::size_t order = 0;
  if (!(in >> word) || word != "order" || !(in >> order) || order == 0) {
    throw std::runtime_error("group file: expected header 'order N'");
  }
  std::vector<FiniteGroup::index> table(order * order);
  for (auto& v : table) {
    long long value = 0;
    if (!(in >> value)) throw std::runtime_error("group file: multiplication table is truncated");
    if (value < 0 || static_cast<std::size_t>(value) >= order) {
      throw std::runtime_error("group file: entry " + std::to_string(value) + " out of range");
    }
    v = static_cast<FiniteGroup::index>(value);
  }
  try {
    return FiniteGroup(order, std::move(table));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("group file: ") + e.what());
  }
}

inline FiniteGroup parse_group(const std::string& text) {
  std::istringstream in(text);
  return parse_group(in);
}

inline void write_group(std::ostream& out, const FiniteGroup& g) {
  out << "order " << g.order() << '\n';
  for (std::size_t a = 0; a < g.order(); ++a) {
    for (std::size_t b = 0; b < g.order(); ++b) {
      out << (b ? " " : "") << g.mul(static_cast<FiniteGroup::index>(a), static_cast<FiniteGroup::index>(b));
    }
    out << '\n';
  }
}

inline std::string group_to_text(const FiniteGroup& g) {
  std::ostringstream os;
  write_group(os, g);
  return os.str();
}

/// Homomorphisms are index lists f[0..order-1].
inline std::vector<FiniteGroup::index> parse_hom(std::istream& in, std::size_t count) {
  std::vector<FiniteGroup::index> out(count);
  for (auto& v : out) {
    long long value = 0;
    if (!(in >> value) || value < 0) throw std::runtime_error("homomorphism: expected " + std::to_string(count) + " indices");
    v = static_cast<FiniteGroup::index>(value);
  }
  return out;
}

/// Whether two groups are isomorphic, by searching generator images.
inline bool isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order()) return false;
  const auto gens = a.generators();
  std::vector<FiniteGroup::index> images(gens.size());
  auto extend = [&]() -> std::optional<std::vector<FiniteGroup::index>> {
    std::vector<std::int64_t> f(a.order(), -1);
    f[0] = 0;
    std::deque<FiniteGroup::index> queue{0};
    while (!queue.empty()) {
      const auto x = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const auto y = a.mul(x, gens[i]);
        const auto fy = b.mul(static_cast<FiniteGroup::index>(f[x]), images[i]);
        if (f[y] < 0) {
          f[y] = fy;
          queue.push_back(y);
        } else if (f[y] != fy) {
          return std::nullopt;
        }
      }
    }
    std::vector<FiniteGroup::index> out(a.order());
    std::vector<bool> hit(b.order(), false);
    for (std::size_t x = 0; x < a.order(); ++x) {
      out[x] = static_cast<FiniteGroup::index>(f[x]);
      if (hit[out[x]]) return std::nullopt;
      hit[out[x]] = true;
    }
    if (!a.is_homomorphism_to(b, out)) return std::nullopt;
    return out;
  };
  auto rec = [&](auto& self, std::size_t i) -> bool {
    if (i == gens.size()) return extend().has_value();
    for (FiniteGroup::index y = 0; y < b.order(); ++y) {
      images[i] = y;
      if (self(self, i + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace crossed
