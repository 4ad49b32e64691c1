#pragma once

// Operads with composition gamma(x; x_1, ..., x_n), group operads with the
// interchange identity, and the semidirect product over S.

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "perm.hpp"
#include "report.hpp"

namespace crossed {

template <class O>
concept Operad = requires(const O& o, const typename O::element_type& x,
                          const std::vector<typename O::element_type>& xs) {
  { o.name() } -> std::convertible_to<std::string>;
  { o.gamma(x, xs) } -> std::same_as<typename O::element_type>;
  { o.identity() } -> std::same_as<typename O::element_type>;
  { o.arity(x) } -> std::convertible_to<int>;
  { o.equal(x, x) } -> std::convertible_to<bool>;
  { o.describe(x) } -> std::convertible_to<std::string>;
};

template <class O>
concept FiniteOperad = Operad<O> && requires(const O& o, int n) {
  { o.elements_at(n) } -> std::same_as<std::vector<typename O::element_type>>;
};

template <class O>
concept SampledOperad = Operad<O> && requires(const O& o, int n, std::mt19937_64& rng, int maxlen) {
  { o.sample(n, rng, maxlen) } -> std::same_as<typename O::element_type>;
};

/// Base points e_n with gamma(e_n; e_k1, ..., e_kn) = e_{k1+...+kn}.
template <class O>
concept PointedOperad = Operad<O> && requires(const O& o, int n) {
  { o.unit(n) } -> std::same_as<typename O::element_type>;
};

/// A map of operads to S.
template <class O>
concept OverSym = Operad<O> && requires(const O& o, const typename O::element_type& x) {
  { o.to_sym(x) } -> std::same_as<Permutation>;
};

template <class O>
concept GroupOperad = PointedOperad<O> && OverSym<O> && requires(const O& o, const typename O::element_type& x) {
  { o.mul(x, x) } -> std::same_as<typename O::element_type>;
  { o.inv(x) } -> std::same_as<typename O::element_type>;
};

/// The operad S of permutation groups.
class SymOperad {
 public:
  using element_type = Permutation;

  std::string name() const { return "sym"; }
  Permutation gamma(const Permutation& x, const std::vector<Permutation>& xs) const { return gamma_sym(x, xs); }
  Permutation identity() const { return Permutation::identity(1); }
  int arity(const Permutation& x) const { return static_cast<int>(x.degree()); }
  bool equal(const Permutation& a, const Permutation& b) const { return a == b; }
  std::string describe(const Permutation& x) const { return x.to_string(); }
  std::vector<Permutation> elements_at(int n) const { return all_permutations(static_cast<std::size_t>(n)); }
  Permutation sample(int n, std::mt19937_64& rng, int /*maxlen*/) const {
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) images[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(images.begin(), images.end(), rng);
    return Permutation(std::move(images));
  }
  Permutation unit(int n) const { return Permutation::identity(static_cast<std::size_t>(n)); }
  Permutation to_sym(const Permutation& x) const { return x; }
  Permutation mul(const Permutation& a, const Permutation& b) const { return compose(a, b); }
  Permutation inv(const Permutation& a) const { return a.inverse(); }
};

struct TrivialElement {
  int n = 0;
  friend bool operator==(const TrivialElement&, const TrivialElement&) = default;
  std::string to_string() const { return "*" + std::to_string(n); }
};

/// The terminal operad: one element in each arity.
class TrivialOperad {
 public:
  using element_type = TrivialElement;

  std::string name() const { return "trivial"; }
  TrivialElement gamma(const TrivialElement& x, const std::vector<TrivialElement>& xs) const {
    if (static_cast<int>(xs.size()) != x.n) throw std::invalid_argument("trivial gamma: wrong number of inputs");
    int total = 0;
    for (const auto& xi : xs) total += xi.n;
    return {total};
  }
  TrivialElement identity() const { return {1}; }
  int arity(const TrivialElement& x) const { return x.n; }
  bool equal(const TrivialElement& a, const TrivialElement& b) const { return a == b; }
  std::string describe(const TrivialElement& x) const { return x.to_string(); }
  std::vector<TrivialElement> elements_at(int n) const { return {{n}}; }
  TrivialElement sample(int n, std::mt19937_64&, int) const { return {n}; }
  TrivialElement unit(int n) const { return {n}; }
  Permutation to_sym(const TrivialElement& x) const { return Permutation::identity(static_cast<std::size_t>(x.n)); }
  TrivialElement mul(const TrivialElement& a, const TrivialElement&) const { return a; }
  TrivialElement inv(const TrivialElement& a) const { return a; }
};

inline SymOperad sym_operad() { return {}; }
inline TrivialOperad trivial_operad() { return {}; }

template <class A, class B>
struct PairElement {
  A x;
  B y;
  friend bool operator==(const PairElement&, const PairElement&) = default;
};

/// X semidirect Y for a map rho: Y -> S:
/// gamma((x,y); (x_i,y_i)) = (gamma(x; x_{rho(y)^-1(1)}, ...), gamma(y; y_1, ...)).
template <Operad X, OverSym Y>
class Semidirect {
 public:
  using element_type = PairElement<typename X::element_type, typename Y::element_type>;

  Semidirect(X x, Y y) : x_(std::move(x)), y_(std::move(y)) {}

  std::string name() const { return "(" + x_.name() + " x| " + y_.name() + ")"; }

  element_type gamma(const element_type& a, const std::vector<element_type>& as) const {
    const Permutation r = y_.to_sym(a.y).inverse();
    std::vector<typename X::element_type> xs;
    std::vector<typename Y::element_type> ys;
    xs.reserve(as.size());
    ys.reserve(as.size());
    for (std::size_t j = 1; j <= as.size(); ++j) xs.push_back(as[static_cast<std::size_t>(r(static_cast<int>(j)) - 1)].x);
    for (const auto& ai : as) ys.push_back(ai.y);
    return {x_.gamma(a.x, xs), y_.gamma(a.y, ys)};
  }
  element_type identity() const { return {x_.identity(), y_.identity()}; }
  int arity(const element_type& a) const { return y_.arity(a.y); }
  bool equal(const element_type& a, const element_type& b) const { return x_.equal(a.x, b.x) && y_.equal(a.y, b.y); }
  std::string describe(const element_type& a) const { return "(" + x_.describe(a.x) + "," + y_.describe(a.y) + ")"; }

  std::vector<element_type> elements_at(int n) const
    requires FiniteOperad<X> && FiniteOperad<Y>
  {
    std::vector<element_type> out;
    const auto ys = y_.elements_at(n);
    for (const auto& x : x_.elements_at(n)) {
      for (const auto& y : ys) out.push_back({x, y});
    }
    return out;
  }
  element_type sample(int n, std::mt19937_64& rng, int maxlen) const
    requires SampledOperad<X> && SampledOperad<Y>
  {
    auto x = x_.sample(n, rng, maxlen);
    return {std::move(x), y_.sample(n, rng, maxlen)};
  }
  element_type unit(int n) const
    requires PointedOperad<X> && PointedOperad<Y>
  {
    return {x_.unit(n), y_.unit(n)};
  }
  /// The composite through mul: S x| S -> S.
  Permutation to_sym(const element_type& a) const
    requires OverSym<X>
  {
    return compose(x_.to_sym(a.x), y_.to_sym(a.y));
  }

  const X& left() const { return x_; }
  const Y& right() const { return y_; }

 private:
  X x_;
  Y y_;
};

template <Operad X, OverSym Y>
Semidirect<X, Y> semidirect(X x, Y y) {
  return Semidirect<X, Y>(std::move(x), std::move(y));
}

/// Negative control: gamma is replaced wherever the override returns a value.
template <Operad O>
class CorruptedOperad : public O {
 public:
  using element_type = typename O::element_type;
  using Override = std::function<std::optional<element_type>(const element_type&, const std::vector<element_type>&)>;

  CorruptedOperad(O base, Override override_gamma) : O(std::move(base)), override_(std::move(override_gamma)) {}

  std::string name() const { return O::name() + "[corrupted]"; }
  element_type gamma(const element_type& x, const std::vector<element_type>& xs) const {
    if (auto v = override_(x, xs)) return *v;
    return O::gamma(x, xs);
  }

 private:
  Override override_;
};

namespace detail {

/// Calls f(ks) for every vector of n arities in [0, bound].
template <class F>
void for_each_arity_vector(int n, int bound, F&& f) {
  std::vector<int> ks(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto& self, std::size_t i) -> void {
    if (i == ks.size()) {
      f(ks);
      return;
    }
    for (int k = 0; k <= bound; ++k) {
      ks[i] = k;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
}

/// Calls f(ks) for every vector of n arities with sum <= bound.
template <class F>
void for_each_bounded_arity_vector(int n, int bound, F&& f) {
  std::vector<int> ks(static_cast<std::size_t>(n), 0);
  auto rec = [&](auto& self, std::size_t i, int left) -> void {
    if (i == ks.size()) {
      f(ks);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      ks[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, bound);
}

/// Calls f(xs) for every tuple with xs[i] drawn from pools[i].
template <class E, class F>
void for_each_tuple(const std::vector<const std::vector<E>*>& pools, F&& f) {
  std::vector<E> xs;
  xs.reserve(pools.size());
  auto rec = [&](auto& self, std::size_t i) -> void {
    if (i == pools.size()) {
      f(xs);
      return;
    }
    for (const auto& e : *pools[i]) {
      xs.push_back(e);
      self(self, i + 1);
      xs.pop_back();
    }
  };
  rec(rec, 0);
}

template <class O>
std::string describe_all(const O& o, const std::vector<typename O::element_type>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + o.describe(xs[i]);
  return s + "]";
}

template <class O>
int total_arity(const O& o, const std::vector<typename O::element_type>& xs) {
  int t = 0;
  for (const auto& x : xs) t += o.arity(x);
  return t;
}

/// Cache of elements_at for a finite operad.
template <FiniteOperad O>
class ElementCache {
 public:
  ElementCache(const O& o, int bound) {
    for (int n = 0; n <= bound; ++n) pools_.push_back(o.elements_at(n));
  }
  const std::vector<typename O::element_type>& at(int n) const { return pools_[static_cast<std::size_t>(n)]; }
  std::vector<const std::vector<typename O::element_type>*> pools(const std::vector<int>& ks) const {
    std::vector<const std::vector<typename O::element_type>*> out;
    for (int k : ks) out.push_back(&at(k));
    return out;
  }

 private:
  std::vector<std::vector<typename O::element_type>> pools_;
};

template <GroupOperad O>
void check_interchange(const O& g, const typename O::element_type& x, const typename O::element_type& y,
                       const std::vector<typename O::element_type>& xs, const std::vector<typename O::element_type>& ys,
                       Report& r) {
  using E = typename O::element_type;
  const int n = g.arity(x);
  ++r.checked;
  std::vector<E> prods;
  prods.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) prods.push_back(g.mul(xs[i], ys[i]));
  const Permutation yinv = g.to_sym(y).inverse();
  std::vector<E> permuted;
  permuted.reserve(xs.size());
  for (int j = 1; j <= n; ++j) permuted.push_back(xs[static_cast<std::size_t>(yinv(j) - 1)]);
  const E lhs = g.gamma(g.mul(x, y), prods);
  const E rhs = g.mul(g.gamma(x, permuted), g.gamma(y, ys));
  if (!g.equal(lhs, rhs)) {
    r.add("interchange", {n, total_arity(g, xs)},
          {"x=" + g.describe(x), "y=" + g.describe(y), "xs=" + describe_all(g, xs), "ys=" + describe_all(g, ys),
           "lhs=" + g.describe(lhs), "rhs=" + g.describe(rhs)});
  }
}

template <class O>
void check_to_sym_map(const O& g, const typename O::element_type& x, const std::vector<typename O::element_type>& xs,
                      Report& r) {
  ++r.checked;
  std::vector<Permutation> ps;
  ps.reserve(xs.size());
  for (const auto& xi : xs) ps.push_back(g.to_sym(xi));
  if (!(g.to_sym(g.gamma(x, xs)) == gamma_sym(g.to_sym(x), ps))) {
    r.add("to-sym-operad-map", {g.arity(x), total_arity(g, xs)}, {"x=" + g.describe(x), "xs=" + describe_all(g, xs)});
  }
}

template <GroupOperad O>
void check_group_law(const O& g, const typename O::element_type& x, const typename O::element_type& y, Report& r) {
  const int n = g.arity(x);
  ++r.checked;
  if (!(g.to_sym(g.mul(x, y)) == compose(g.to_sym(x), g.to_sym(y)))) {
    r.add("to-sym-homomorphism", {n}, {"x=" + g.describe(x), "y=" + g.describe(y)});
  }
  if (!g.equal(g.mul(x, g.inv(x)), g.unit(n)) || !g.equal(g.mul(g.inv(x), x), g.unit(n))) {
    r.add("group-inverse", {n}, {"x=" + g.describe(x)});
  }
  if (!g.equal(g.mul(x, g.unit(n)), x) || !g.equal(g.mul(g.unit(n), x), x)) {
    r.add("group-unit", {n}, {"x=" + g.describe(x)});
  }
}

}  // namespace detail

/// The interchange identity, the projection to S being an operad map and
/// degreewise homomorphism, and the group laws, exhaustively: x, y at arity
/// n <= arity_bound and inputs at arities <= input_bound.
template <class O>
  requires GroupOperad<O> && FiniteOperad<O>
Report verify_group_operad(const O& g, int arity_bound, int input_bound) {
  using E = typename O::element_type;
  Report report("group-operad:" + g.name(), arity_bound);
  ScopedTimer timer(report);
  const detail::ElementCache<O> cache(g, std::max(arity_bound, input_bound));
  for (int n = 0; n <= arity_bound; ++n) {
    const auto& elems = cache.at(n);
    for (const auto& x : elems) {
      for (const auto& y : elems) {
        detail::check_group_law(g, x, y, report);
        for (const auto& z : elems) {
          ++report.checked;
          if (!g.equal(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)))) {
            report.add("group-associativity", {n}, {"x=" + g.describe(x), "y=" + g.describe(y), "z=" + g.describe(z)});
          }
        }
      }
    }
    detail::for_each_arity_vector(n, input_bound, [&](const std::vector<int>& ks) {
      const auto pools = cache.pools(ks);
      std::vector<std::vector<E>> tuples;
      detail::for_each_tuple<E>(pools, [&](const std::vector<E>& xs) { tuples.push_back(xs); });
      for (const auto& x : elems) {
        for (const auto& xs : tuples) detail::check_to_sym_map(g, x, xs, report);
        for (const auto& y : elems) {
          for (const auto& xs : tuples) {
            for (const auto& ys : tuples) detail::check_interchange(g, x, y, xs, ys, report);
          }
        }
      }
    });
  }
  return report;
}

/// The same laws on seeded random instances.
template <class O>
  requires GroupOperad<O> && SampledOperad<O>
Report verify_group_operad_sampled(const O& g, int arity_bound, int input_bound, std::size_t samples,
                                   std::uint64_t seed, int maxlen) {
  using E = typename O::element_type;
  Report report("group-operad:" + g.name(), arity_bound, "sampled");
  ScopedTimer timer(report);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> arity(0, arity_bound), inner(0, input_bound);
  for (std::size_t s = 0; s < samples; ++s) {
    const int n = arity(rng);
    const E x = g.sample(n, rng, maxlen), y = g.sample(n, rng, maxlen);
    std::vector<E> xs, ys;
    for (int i = 0; i < n; ++i) {
      const int k = inner(rng);
      xs.push_back(g.sample(k, rng, maxlen));
      ys.push_back(g.sample(k, rng, maxlen));
    }
    detail::check_group_law(g, x, y, report);
    detail::check_to_sym_map(g, x, xs, report);
    detail::check_interchange(g, x, y, xs, ys, report);
  }
  report.notes.push_back("seed " + std::to_string(seed) + ", " + std::to_string(samples) + " samples, word length <= " +
                         std::to_string(maxlen));
  return report;
}

namespace detail {

template <class O>
void check_associativity(const O& o, const typename O::element_type& x, const std::vector<typename O::element_type>& xs,
                         const std::vector<std::vector<typename O::element_type>>& xss, Report& r) {
  using E = typename O::element_type;
  ++r.checked;
  std::vector<E> inner;
  std::vector<E> flat;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    inner.push_back(o.gamma(xs[i], xss[i]));
    flat.insert(flat.end(), xss[i].begin(), xss[i].end());
  }
  const E lhs = o.gamma(x, inner);
  const E rhs = o.gamma(o.gamma(x, xs), flat);
  if (!o.equal(lhs, rhs)) {
    std::string nested;
    for (const auto& v : xss) nested += describe_all(o, v);
    r.add("operad-associativity", {o.arity(x), total_arity(o, xs), static_cast<int>(flat.size())},
          {"x=" + o.describe(x), "xs=" + describe_all(o, xs), "xss=" + nested, "lhs=" + o.describe(lhs),
           "rhs=" + o.describe(rhs)});
  }
}

template <class O>
void check_operad_units(const O& o, const typename O::element_type& x, Report& r) {
  using E = typename O::element_type;
  ++r.checked;
  if (!o.equal(o.gamma(o.identity(), {x}), x)) r.add("operad-left-unit", {o.arity(x)}, {"x=" + o.describe(x)});
  const std::vector<E> ids(static_cast<std::size_t>(o.arity(x)), o.identity());
  if (!o.equal(o.gamma(x, ids), x)) r.add("operad-right-unit", {o.arity(x)}, {"x=" + o.describe(x)});
}

}  // namespace detail

/// Associativity and unit laws of gamma: outer arity <= outer, middle and
/// inner arities <= inner.
template <FiniteOperad O>
Report verify_operad_laws(const O& o, int outer, int inner) {
  using E = typename O::element_type;
  Report report("operad-laws:" + o.name(), outer);
  ScopedTimer timer(report);
  const detail::ElementCache<O> cache(o, std::max(outer, inner));
  for (int n = 0; n <= std::max(outer, inner); ++n) {
    for (const auto& x : cache.at(n)) detail::check_operad_units(o, x, report);
  }
  for (int n = 0; n <= outer; ++n) {
    detail::for_each_arity_vector(n, inner, [&](const std::vector<int>& ks) {
      const auto pools = cache.pools(ks);
      for (const auto& x : cache.at(n)) {
        detail::for_each_tuple<E>(pools, [&](const std::vector<E>& xs) {
          int total = 0;
          for (int k : ks) total += k;
          detail::for_each_arity_vector(total, inner, [&](const std::vector<int>& ls) {
            const auto inner_pools = cache.pools(ls);
            detail::for_each_tuple<E>(inner_pools, [&](const std::vector<E>& flat) {
              std::vector<std::vector<E>> xss;
              std::size_t pos = 0;
              for (int k : ks) {
                xss.emplace_back(flat.begin() + static_cast<std::ptrdiff_t>(pos),
                                 flat.begin() + static_cast<std::ptrdiff_t>(pos + static_cast<std::size_t>(k)));
                pos += static_cast<std::size_t>(k);
              }
              detail::check_associativity(o, x, xs, xss, report);
            });
          });
        });
      }
    });
  }
  return report;
}

/// Associativity and unit laws with the outer arity and both total arities at most bound.
template <FiniteOperad O>
Report verify_operad_laws_total(const O& o, int bound) {
  using E = typename O::element_type;
  Report report("operad-laws-total:" + o.name(), bound);
  ScopedTimer timer(report);
  const detail::ElementCache<O> cache(o, bound);
  for (int n = 0; n <= bound; ++n) {
    for (const auto& x : cache.at(n)) detail::check_operad_units(o, x, report);
  }
  for (int n = 0; n <= bound; ++n) {
    detail::for_each_bounded_arity_vector(n, bound, [&](const std::vector<int>& ks) {
      const auto pools = cache.pools(ks);
      int total = 0;
      for (int k : ks) total += k;
      detail::for_each_bounded_arity_vector(total, bound, [&](const std::vector<int>& ls) {
        const auto inner_pools = cache.pools(ls);
        for (const auto& x : cache.at(n)) {
          detail::for_each_tuple<E>(pools, [&](const std::vector<E>& xs) {
            detail::for_each_tuple<E>(inner_pools, [&](const std::vector<E>& flat) {
              std::vector<std::vector<E>> xss;
              std::size_t pos = 0;
              for (int k : ks) {
                xss.emplace_back(flat.begin() + static_cast<std::ptrdiff_t>(pos),
                                 flat.begin() + static_cast<std::ptrdiff_t>(pos + static_cast<std::size_t>(k)));
                pos += static_cast<std::size_t>(k);
              }
              detail::check_associativity(o, x, xs, xss, report);
            });
          });
        }
      });
    });
  }
  return report;
}

template <SampledOperad O>
Report verify_operad_laws_sampled(const O& o, int outer, int inner, std::size_t samples, std::uint64_t seed, int maxlen) {
  using E = typename O::element_type;
  Report report("operad-laws:" + o.name(), outer, "sampled");
  ScopedTimer timer(report);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> outer_arity(0, outer), inner_arity(0, inner);
  for (std::size_t s = 0; s < samples; ++s) {
    const int n = outer_arity(rng);
    const E x = o.sample(n, rng, maxlen);
    detail::check_operad_units(o, x, report);
    std::vector<E> xs;
    std::vector<std::vector<E>> xss;
    for (int i = 0; i < n; ++i) {
      const int k = inner_arity(rng);
      xs.push_back(o.sample(k, rng, maxlen));
      std::vector<E> row;
      for (int j = 0; j < k; ++j) row.push_back(o.sample(inner_arity(rng), rng, maxlen));
      xss.push_back(std::move(row));
    }
    detail::check_associativity(o, x, xs, xss, report);
  }
  report.notes.push_back("seed " + std::to_string(seed) + ", " + std::to_string(samples) + " samples");
  return report;
}

namespace detail {

template <GroupOperad O>
void check_units_at(const O& g, const std::vector<typename O::element_type>& g1, int bound, Report& r) {
  using E = typename O::element_type;
  if (!g.equal(g.unit(1), g.identity())) r.add("unit-is-identity", {1}, {"e1=" + g.describe(g.unit(1))});
  for (const auto& x : g1) {
    for (const auto& y : g1) {
      ++r.checked;
      if (!g.equal(g.gamma(x, {y}), g.mul(x, y))) {
        r.add("arity-one-gamma-is-product", {1}, {"x=" + g.describe(x), "y=" + g.describe(y)});
      }
      if (!g.equal(g.mul(x, y), g.mul(y, x))) r.add("arity-one-abelian", {1}, {"x=" + g.describe(x), "y=" + g.describe(y)});
    }
  }
  for (int n = 0; n <= bound; ++n) {
    for_each_arity_vector(n, bound, [&](const std::vector<int>& ks) {
      ++r.checked;
      std::vector<E> units;
      int total = 0;
      for (int k : ks) {
        units.push_back(g.unit(k));
        total += k;
      }
      if (!g.equal(g.gamma(g.unit(n), units), g.unit(total))) {
        r.add("units-compose", {n, total}, {"ks=" + describe_all(g, units)});
      }
    });
    for (const auto& x : g1) {
      for (const auto& y : g1) {
        ++r.checked;
        const E lhs = g.gamma(g.mul(x, y), {g.unit(n)});
        const E rhs = g.mul(g.gamma(x, {g.unit(n)}), g.gamma(y, {g.unit(n)}));
        if (!g.equal(lhs, rhs)) r.add("arity-one-homomorphism", {n}, {"x=" + g.describe(x), "y=" + g.describe(y)});
      }
    }
  }
}

}  // namespace detail

/// The three unit statements: gamma on arity one is the product and G(1) is
/// abelian; gamma(e_n; e_k...) = e_{sum k}; x -> gamma(x; e_n) is a homomorphism.
template <class O>
  requires GroupOperad<O> && FiniteOperad<O>
Report unit_structure_checks(const O& g, int bound) {
  Report report("unit-structure:" + g.name(), bound);
  ScopedTimer timer(report);
  detail::check_units_at(g, g.elements_at(1), bound, report);
  return report;
}

template <class O>
  requires GroupOperad<O> && SampledOperad<O>
Report unit_structure_checks_sampled(const O& g, int bound, std::size_t samples, std::uint64_t seed, int maxlen) {
  using E = typename O::element_type;
  Report report("unit-structure:" + g.name(), bound, "sampled");
  ScopedTimer timer(report);
  std::mt19937_64 rng(seed);
  std::vector<E> g1;
  for (std::size_t s = 0; s < samples; ++s) g1.push_back(g.sample(1, rng, maxlen));
  detail::check_units_at(g, g1, bound, report);
  report.notes.push_back("seed " + std::to_string(seed) + ", " + std::to_string(samples) + " arity-one samples");
  return report;
}

/// Whether f: source -> target commutes with gamma on the given instances.
template <FiniteOperad S, Operad T, class F>
Report check_operad_map(const S& source, const T& target, F&& f, int outer, int inner, std::string subject) {
  using E = typename S::element_type;
  using TE = typename T::element_type;
  Report report(std::move(subject), outer);
  ScopedTimer timer(report);
  const detail::ElementCache<S> cache(source, std::max(outer, inner));
  for (int n = 0; n <= outer; ++n) {
    detail::for_each_arity_vector(n, inner, [&](const std::vector<int>& ks) {
      const auto pools = cache.pools(ks);
      for (const auto& x : cache.at(n)) {
        detail::for_each_tuple<E>(pools, [&](const std::vector<E>& xs) {
          ++report.checked;
          std::vector<TE> images;
          for (const auto& xi : xs) images.push_back(f(xi));
          if (!target.equal(f(source.gamma(x, xs)), target.gamma(f(x), images))) {
            report.add("operad-map", {n}, {"x=" + source.describe(x), "xs=" + detail::describe_all(source, xs)});
          }
        });
      }
    });
  }
  if (!target.equal(f(source.identity()), target.identity())) report.add("operad-map-identity", {1}, {});
  return report;
}

}  // namespace crossed
