#pragma once

// Crossed interval groups: degreewise groups G_n with restrictions
// phi^*: G_n -> G_m and an action x . phi = phi^x on hom(<<m>>, <<n>>).

#include <algorithm>
#include <climits>
#include <concepts>
#include <cstdint>
#include <deque>
#include <functional>
#include <istream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "finite_group.hpp"
#include "interval.hpp"
#include "parallel.hpp"
#include "perm.hpp"
#include "report.hpp"

namespace crossed {

/// An element (sigma; x_1..x_n; u) of W(Z/2, Z/2)_n, the terminal crossed interval group.
struct WeylElement {
  Permutation sigma;
  std::vector<int> x;
  int u = 0;

  static WeylElement identity(std::size_t n) { return {Permutation::identity(n), std::vector<int>(n, 0), 0}; }

  SignedPermutation signed_perm() const { return {sigma, u != 0}; }

  bool over_sym() const {
    return u == 0 && std::all_of(x.begin(), x.end(), [](int b) { return b == 0; });
  }

  std::string to_string() const {
    std::ostringstream os;
    os << '(' << sigma.to_string() << ";";
    for (std::size_t i = 0; i < x.size(); ++i) os << (i ? "," : "") << x[i];
    os << ";" << u << ')';
    return os.str();
  }

  friend bool operator==(const WeylElement&, const WeylElement&) = default;
};

/// The permutation part of the wreath restriction:
/// gamma(beta_3^u; beta^u_{k_-inf}, gamma(sigma; beta^{x_j}_{k_j}), beta^u_{k_+inf}).
inline Permutation wreath_restriction_permutation(const IntervalMorphism& phi, const Permutation& sigma,
                                                  const std::vector<int>& x_flips, bool u_flip) {
  const int n = phi.codomain();
  std::vector<Permutation> inner;
  inner.reserve(static_cast<std::size_t>(n));
  for (int j = 1; j <= n; ++j) inner.push_back(beta_power(static_cast<std::size_t>(phi.k(j)), x_flips[j - 1] != 0));
  const Permutation middle = gamma_sym(sigma, inner);
  return gamma_sym(beta_power(3, u_flip), {beta_power(static_cast<std::size_t>(phi.k_neg()), u_flip), middle,
                                            beta_power(static_cast<std::size_t>(phi.k_pos()), u_flip)});
}

/// The same permutation described through fibers: the unique bijection making
/// (sigma;u) phi = phi^(sigma;u) tilde-sigma commute, monotone on each fiber in
/// the direction given by the flips.
inline Permutation conceptual_restriction_permutation(const IntervalMorphism& phi, const Permutation& sigma,
                                                      const std::vector<int>& x_flips, bool u_flip) {
  const IntervalMorphism target = act(phi, {sigma, u_flip});
  const int m = phi.domain();
  auto fiber = [m](const IntervalMorphism& f, int j) {
    std::vector<int> pts;
    for (int i = 1; i <= m; ++i) {
      if (f(i) == j) pts.push_back(i);
    }
    return pts;
  };
  auto at_infinity = [m](const IntervalMorphism& f) {
    std::vector<int> pts;
    for (int i = 1; i <= m; ++i) {
      if (is_infinite(f(i))) pts.push_back(i);
    }
    return pts;
  };
  std::vector<int> images(static_cast<std::size_t>(m), 0);
  auto assign = [&images](const std::vector<int>& from, const std::vector<int>& to, bool reverse) {
    for (std::size_t t = 0; t < from.size(); ++t) {
      images[static_cast<std::size_t>(from[t] - 1)] = reverse ? to[to.size() - 1 - t] : to[t];
    }
  };
  assign(at_infinity(phi), at_infinity(target), u_flip);
  for (int j = 1; j <= phi.codomain(); ++j) assign(fiber(phi, j), fiber(target, sigma(j)), x_flips[j - 1] != 0);
  return Permutation(images);
}

inline WeylElement weyl_mul(const WeylElement& a, const WeylElement& b) {
  const std::size_t n = a.sigma.degree();
  WeylElement out{compose(a.sigma, b.sigma), std::vector<int>(n), a.u ^ b.u};
  for (std::size_t i = 0; i < n; ++i) out.x[i] = a.x[b.sigma(static_cast<int>(i + 1)) - 1] ^ b.x[i];
  return out;
}

inline WeylElement weyl_restrict(const IntervalMorphism& phi, const WeylElement& w) {
  WeylElement out{wreath_restriction_permutation(phi, w.sigma, w.x, w.u != 0), {}, w.u};
  out.x.reserve(static_cast<std::size_t>(phi.domain()));
  for (int i = 1; i <= phi.domain(); ++i) {
    const int j = phi(i);
    out.x.push_back(is_infinite(j) ? w.u : w.x[static_cast<std::size_t>(j - 1)]);
  }
  return out;
}

template <class G>
concept CrossedGroup = requires(const G& g, int n, const typename G::element_type& x, const IntervalMorphism& phi) {
  { g.name() } -> std::convertible_to<std::string>;
  { g.mul(n, x, x) } -> std::same_as<typename G::element_type>;
  { g.inv(n, x) } -> std::same_as<typename G::element_type>;
  { g.unit(n) } -> std::same_as<typename G::element_type>;
  { g.restrict(phi, x) } -> std::same_as<typename G::element_type>;
  { g.action(phi, x) } -> std::same_as<IntervalMorphism>;
  { g.to_weyl(n, x) } -> std::same_as<WeylElement>;
  { g.equal(n, x, x) } -> std::convertible_to<bool>;
  { g.describe(n, x) } -> std::convertible_to<std::string>;
};

template <class G>
concept FiniteCrossedGroup = CrossedGroup<G> && requires(const G& g, int n) {
  { g.elements(n) } -> std::same_as<std::vector<typename G::element_type>>;
};

template <class G>
concept SampledCrossedGroup = CrossedGroup<G> && requires(const G& g, int n, std::mt19937_64& rng) {
  { g.sample(n, rng) } -> std::same_as<typename G::element_type>;
};

/// Whether the group admits the morphism (views restricted to a subcategory refuse some).
template <class G>
bool admits(const G& g, const IntervalMorphism& phi) {
  if constexpr (requires { g.admits(phi); }) {
    return g.admits(phi);
  } else {
    return true;
  }
}

/// Finite crossed interval group with elements indexed 0..order(n)-1 and 0 the unit.
class CrossedIntervalGroup {
 public:
  using element_type = std::uint64_t;

  virtual ~CrossedIntervalGroup() = default;

  virtual std::string name() const = 0;
  virtual std::uint64_t order(int n) const = 0;
  virtual element_type mul(int n, element_type a, element_type b) const = 0;
  virtual element_type inv(int n, element_type a) const = 0;
  virtual element_type unit(int /*n*/) const { return 0; }
  /// phi^*(x) for x in G at the codomain of phi.
  virtual element_type restrict(const IntervalMorphism& phi, element_type x) const = 0;
  virtual WeylElement to_weyl(int n, element_type x) const = 0;
  virtual IntervalMorphism action(const IntervalMorphism& phi, element_type x) const {
    return act(phi, to_weyl(phi.codomain(), x).signed_perm());
  }
  virtual std::string describe(int n, element_type x) const {
    return "g" + std::to_string(x) + "@" + std::to_string(n);
  }
  /// Degrees above this are not defined (quotients computed up to a bound).
  virtual int max_degree() const { return INT_MAX; }

  bool equal(int /*n*/, element_type a, element_type b) const { return a == b; }

  std::vector<element_type> elements(int n) const {
    std::vector<element_type> out(order(n));
    for (std::uint64_t i = 0; i < out.size(); ++i) out[i] = i;
    return out;
  }

  element_type sample(int n, std::mt19937_64& rng) const {
    return std::uniform_int_distribution<std::uint64_t>(0, order(n) - 1)(rng);
  }

  /// The multiplication table at degree n, built once and shared.
  const FiniteGroup& group_at(int n) const {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = cache_.find(n);
    if (it != cache_.end()) return *it->second;
    const std::uint64_t ord = order(n);
    if (ord > group_table_limit) {
      throw std::length_error("group_at: order " + std::to_string(ord) + " too large for a table");
    }
    std::vector<FiniteGroup::index> table(ord * ord);
    for (std::uint64_t a = 0; a < ord; ++a) {
      for (std::uint64_t b = 0; b < ord; ++b) table[a * ord + b] = static_cast<FiniteGroup::index>(mul(n, a, b));
    }
    auto group = std::make_unique<FiniteGroup>(FiniteGroup::from_trusted_table(ord, std::move(table)));
    return *cache_.emplace(n, std::move(group)).first->second;
  }

  static constexpr std::uint64_t group_table_limit = 6000;

 private:
  mutable std::mutex cache_mutex_;
  mutable std::map<int, std::unique_ptr<FiniteGroup>> cache_;
};

using CrossedPtr = std::shared_ptr<const CrossedIntervalGroup>;

/// W(H0, H1) for a commuting triangle theta: H0 -> H1, eps0: H0 -> Z/2, eps1: H1 -> Z/2.
class WreathCrossed final : public CrossedIntervalGroup {
 public:
  using index = FiniteGroup::index;

  struct Element {
    Permutation sigma;
    std::vector<index> x;
    index u = 0;
  };

  WreathCrossed(std::string name, FiniteGroup h0, FiniteGroup h1, std::vector<index> theta, std::vector<int> eps0,
                std::vector<int> eps1)
      : name_(std::move(name)),
        h0_(std::move(h0)),
        h1_(std::move(h1)),
        theta_(std::move(theta)),
        eps0_(std::move(eps0)),
        eps1_(std::move(eps1)) {
    const FiniteGroup z2 = cyclic_group(2);
    auto to_index = [](const std::vector<int>& e) {
      std::vector<index> out;
      for (int b : e) {
        if (b != 0 && b != 1) throw std::invalid_argument("wreath: parity maps must take values 0 or 1");
        out.push_back(static_cast<index>(b));
      }
      return out;
    };
    if (!h0_.is_homomorphism_to(h1_, theta_)) throw std::invalid_argument("wreath: theta is not a homomorphism H0 -> H1");
    if (eps0_.size() != h0_.order() || !h0_.is_homomorphism_to(z2, to_index(eps0_))) {
      throw std::invalid_argument("wreath: eps0 is not a homomorphism H0 -> Z/2");
    }
    if (eps1_.size() != h1_.order() || !h1_.is_homomorphism_to(z2, to_index(eps1_))) {
      throw std::invalid_argument("wreath: eps1 is not a homomorphism H1 -> Z/2");
    }
    for (index u = 0; u < h0_.order(); ++u) {
      if (eps1_[theta_[u]] != eps0_[u]) throw std::invalid_argument("wreath: eps1 theta != eps0, the triangle does not commute");
    }
  }

  std::string name() const override { return name_; }

  std::uint64_t order(int n) const override {
    std::uint64_t o = factorial(static_cast<std::size_t>(n)) * h0_.order();
    for (int i = 0; i < n; ++i) o *= h1_.order();
    return o;
  }

  Element decode(int n, element_type e) const {
    Element out;
    out.u = static_cast<index>(e % h0_.order());
    e /= h0_.order();
    out.x.assign(static_cast<std::size_t>(n), 0);
    for (int i = n; i-- > 0;) {
      out.x[static_cast<std::size_t>(i)] = static_cast<index>(e % h1_.order());
      e /= h1_.order();
    }
    out.sigma = unrank(static_cast<std::size_t>(n), e);
    return out;
  }

  element_type encode(const Element& el) const {
    element_type e = rank(el.sigma);
    for (index xi : el.x) e = e * h1_.order() + xi;
    return e * h0_.order() + el.u;
  }

  element_type mul(int n, element_type a, element_type b) const override {
    const Element t = decode(n, a), s = decode(n, b);
    Element out{compose(t.sigma, s.sigma), std::vector<index>(static_cast<std::size_t>(n)), h0_.mul(t.u, s.u)};
    for (int i = 0; i < n; ++i) {
      const auto ii = static_cast<std::size_t>(i);
      out.x[ii] = h1_.mul(t.x[static_cast<std::size_t>(s.sigma(i + 1) - 1)], s.x[ii]);
    }
    return encode(out);
  }

  element_type inv(int n, element_type a) const override {
    const Element s = decode(n, a);
    const Permutation sinv = s.sigma.inverse();
    Element out{sinv, std::vector<index>(static_cast<std::size_t>(n)), h0_.inv(s.u)};
    for (int j = 1; j <= n; ++j) {
      out.x[static_cast<std::size_t>(j - 1)] = h1_.inv(s.x[static_cast<std::size_t>(sinv(j) - 1)]);
    }
    return encode(out);
  }

  element_type restrict(const IntervalMorphism& phi, element_type e) const override {
    const Element s = decode(phi.codomain(), e);
    std::vector<int> flips(s.x.size());
    for (std::size_t j = 0; j < s.x.size(); ++j) flips[j] = eps1_[s.x[j]];
    const bool u_flip = eps0_[s.u] != 0;
    Element out{wreath_restriction_permutation(phi, s.sigma, flips, u_flip), {}, s.u};
    out.x.reserve(static_cast<std::size_t>(phi.domain()));
    for (int i = 1; i <= phi.domain(); ++i) {
      const int j = phi(i);
      out.x.push_back(is_infinite(j) ? theta_[s.u] : s.x[static_cast<std::size_t>(j - 1)]);
    }
    return encode(out);
  }

  WeylElement to_weyl(int n, element_type e) const override {
    const Element s = decode(n, e);
    WeylElement w{s.sigma, std::vector<int>(s.x.size()), eps0_[s.u]};
    for (std::size_t j = 0; j < s.x.size(); ++j) w.x[j] = eps1_[s.x[j]];
    return w;
  }

  std::string describe(int n, element_type e) const override {
    const Element s = decode(n, e);
    std::ostringstream os;
    os << '(' << s.sigma.to_string() << ";";
    for (std::size_t i = 0; i < s.x.size(); ++i) os << (i ? "," : "") << s.x[i];
    os << ";" << s.u << ")@" << n;
    return os.str();
  }

  const FiniteGroup& h0() const { return h0_; }
  const FiniteGroup& h1() const { return h1_; }

 private:
  std::string name_;
  FiniteGroup h0_, h1_;
  std::vector<index> theta_;
  std::vector<int> eps0_, eps1_;
};

inline std::shared_ptr<const WreathCrossed> wreath_construct(FiniteGroup h0, FiniteGroup h1,
                                                             std::vector<FiniteGroup::index> theta,
                                                             std::vector<int> eps0, std::vector<int> eps1,
                                                             std::string name = "wreath") {
  return std::make_shared<const WreathCrossed>(std::move(name), std::move(h0), std::move(h1), std::move(theta),
                                               std::move(eps0), std::move(eps1));
}

inline std::shared_ptr<const WreathCrossed> symmetric() {
  return wreath_construct(trivial_group(), trivial_group(), {0}, {0}, {0}, "sym");
}

inline std::shared_ptr<const WreathCrossed> hyperoctahedral() {
  return wreath_construct(trivial_group(), cyclic_group(2), {0}, {0}, {0, 1}, "hyperoctahedral");
}

inline std::shared_ptr<const WreathCrossed> weyl() {
  return wreath_construct(cyclic_group(2), cyclic_group(2), {0, 1}, {0, 1}, {0, 1}, "weyl");
}

/// Z/2 in every degree, identity restrictions; the generator acts by order reversal.
class ReflCrossed final : public CrossedIntervalGroup {
 public:
  std::string name() const override { return "refl"; }
  std::uint64_t order(int) const override { return 2; }
  element_type mul(int, element_type a, element_type b) const override { return a ^ b; }
  element_type inv(int, element_type a) const override { return a; }
  element_type restrict(const IntervalMorphism&, element_type x) const override { return x; }
  WeylElement to_weyl(int n, element_type x) const override {
    const auto nn = static_cast<std::size_t>(n);
    if (x == 0) return WeylElement::identity(nn);
    return {beta(nn), std::vector<int>(nn, 1), 1};
  }
};

inline CrossedPtr refl() { return std::make_shared<const ReflCrossed>(); }

/// Q in every degree with identity restrictions, trivial action and trivial map to the Weyl group.
class ConstantCrossed final : public CrossedIntervalGroup {
 public:
  ConstantCrossed(FiniteGroup q, std::string name) : q_(std::move(q)), name_(std::move(name)) {}
  std::string name() const override { return name_; }
  std::uint64_t order(int) const override { return q_.order(); }
  element_type mul(int, element_type a, element_type b) const override {
    return q_.mul(static_cast<FiniteGroup::index>(a), static_cast<FiniteGroup::index>(b));
  }
  element_type inv(int, element_type a) const override { return q_.inv(static_cast<FiniteGroup::index>(a)); }
  element_type restrict(const IntervalMorphism&, element_type x) const override { return x; }
  WeylElement to_weyl(int n, element_type) const override { return WeylElement::identity(static_cast<std::size_t>(n)); }
  const FiniteGroup& group() const { return q_; }

 private:
  FiniteGroup q_;
  std::string name_;
};

inline CrossedPtr constant(FiniteGroup q, std::string name = "constant") {
  return std::make_shared<const ConstantCrossed>(std::move(q), std::move(name));
}

/// Negative control: one multiplication entry at one degree is replaced.
class CorruptedMultiplication final : public CrossedIntervalGroup {
 public:
  CorruptedMultiplication(CrossedPtr base, int degree, element_type a, element_type b, element_type replacement)
      : base_(std::move(base)), degree_(degree), a_(a), b_(b), replacement_(replacement) {}
  std::string name() const override { return base_->name() + "[corrupted]"; }
  std::uint64_t order(int n) const override { return base_->order(n); }
  element_type mul(int n, element_type a, element_type b) const override {
    if (n == degree_ && a == a_ && b == b_) return replacement_;
    return base_->mul(n, a, b);
  }
  element_type inv(int n, element_type a) const override { return base_->inv(n, a); }
  element_type restrict(const IntervalMorphism& phi, element_type x) const override { return base_->restrict(phi, x); }
  WeylElement to_weyl(int n, element_type x) const override { return base_->to_weyl(n, x); }
  IntervalMorphism action(const IntervalMorphism& phi, element_type x) const override { return base_->action(phi, x); }
  std::string describe(int n, element_type x) const override { return base_->describe(n, x); }

 private:
  CrossedPtr base_;
  int degree_;
  element_type a_, b_, replacement_;
};

/// Restriction to the augmented simplex category: only morphisms sending no
/// interior point to infinity are admitted.
template <CrossedGroup G>
class AugmentedView {
 public:
  using element_type = typename G::element_type;

  explicit AugmentedView(const G& g) : g_(g) {}

  static bool admits(const IntervalMorphism& phi) { return is_augmented_simplicial(phi); }

  std::string name() const { return g_.name() + "|aug"; }
  element_type mul(int n, const element_type& a, const element_type& b) const { return g_.mul(n, a, b); }
  element_type inv(int n, const element_type& a) const { return g_.inv(n, a); }
  element_type unit(int n) const { return g_.unit(n); }
  element_type restrict(const IntervalMorphism& phi, const element_type& x) const {
    require(phi);
    return g_.restrict(phi, x);
  }
  IntervalMorphism action(const IntervalMorphism& phi, const element_type& x) const {
    require(phi);
    return g_.action(phi, x);
  }
  WeylElement to_weyl(int n, const element_type& x) const { return g_.to_weyl(n, x); }
  bool equal(int n, const element_type& a, const element_type& b) const { return g_.equal(n, a, b); }
  std::string describe(int n, const element_type& x) const { return g_.describe(n, x); }
  std::vector<element_type> elements(int n) const
    requires FiniteCrossedGroup<G>
  {
    return g_.elements(n);
  }

 private:
  static void require(const IntervalMorphism& phi) {
    if (!admits(phi)) throw std::invalid_argument("augmented view: morphism " + phi.to_string() + " is not augmented simplicial");
  }
  const G& g_;
};

template <CrossedGroup G>
AugmentedView<G> restrict_to_augmented(const G& g) {
  return AugmentedView<G>(g);
}

template <class E>
struct TotalMorphism {
  IntervalMorphism phi;
  E x;  // element of G at the domain of phi
};

/// (phi, x) o (psi, y) = (phi psi^x, psi^*(x) y).
template <CrossedGroup G>
TotalMorphism<typename G::element_type> total_compose(const G& g, const TotalMorphism<typename G::element_type>& a,
                                                      const TotalMorphism<typename G::element_type>& b) {
  if (b.phi.codomain() != a.phi.domain()) throw std::invalid_argument("total_compose: morphisms are not composable");
  return {compose(a.phi, g.action(b.phi, a.x)), g.mul(b.phi.domain(), g.restrict(b.phi, a.x), b.x)};
}

namespace detail {

inline std::vector<int> degree_range(int maxdeg) {
  std::vector<int> out;
  for (int n = 0; n <= maxdeg; ++n) out.push_back(n);
  return out;
}

/// All hom-sets with domain and codomain at most maxdeg, cached by (m, n).
class HomTable {
 public:
  explicit HomTable(int maxdeg) : maxdeg_(maxdeg) {
    homs_.resize(static_cast<std::size_t>((maxdeg + 1) * (maxdeg + 1)));
    for (int m = 0; m <= maxdeg; ++m) {
      for (int n = 0; n <= maxdeg; ++n) homs_[idx(m, n)] = hom_enumerate(m, n);
    }
  }
  const std::vector<IntervalMorphism>& operator()(int m, int n) const { return homs_[idx(m, n)]; }
  int maxdeg() const { return maxdeg_; }

 private:
  std::size_t idx(int m, int n) const { return static_cast<std::size_t>(m * (maxdeg_ + 1) + n); }
  int maxdeg_;
  std::vector<std::vector<IntervalMorphism>> homs_;
};

/// The checks attached to one (phi, x) pair, plus the psi and y loops.
template <CrossedGroup G>
void check_axioms_at(const G& g, const IntervalMorphism& phi, const typename G::element_type& x,
                     const std::vector<IntervalMorphism>& psis, const std::vector<typename G::element_type>& ys,
                     Report& r) {
  const int n = phi.codomain(), m = phi.domain();
  const auto phi_x = g.action(phi, x);
  const auto rx = g.restrict(phi, x);
  const WeylElement wx = g.to_weyl(n, x);
  ++r.checked;
  if (!(phi_x == act(phi, wx.signed_perm()))) {
    r.add("action-via-weyl", {m, n}, {"phi=" + phi.to_string(), "x=" + g.describe(n, x), "got " + phi_x.to_string()});
  }
  if (!(g.to_weyl(m, rx) == weyl_restrict(phi, wx))) {
    r.add("weyl-natural", {m, n}, {"phi=" + phi.to_string(), "x=" + g.describe(n, x)});
  }
  for (const auto& psi : psis) {
    if (!admits(g, psi)) continue;
    const int l = psi.domain();
    const IntervalMorphism phipsi = compose(phi, psi);
    ++r.checked;
    const IntervalMorphism lhs = g.action(phipsi, x);
    const IntervalMorphism rhs = compose(phi_x, g.action(psi, rx));
    if (!(lhs == rhs)) {
      r.add("axiom-i", {l, m, n},
            {"phi=" + phi.to_string(), "psi=" + psi.to_string(), "x=" + g.describe(n, x),
             "lhs=" + lhs.to_string(), "rhs=" + rhs.to_string()});
    }
    if (!g.equal(l, g.restrict(psi, rx), g.restrict(phipsi, x))) {
      r.add("functoriality", {l, m, n}, {"phi=" + phi.to_string(), "psi=" + psi.to_string(), "x=" + g.describe(n, x)});
    }
  }
  for (const auto& y : ys) {
    ++r.checked;
    const auto xy = g.mul(n, x, y);
    const auto lhs = g.restrict(phi, xy);
    const auto rhs = g.mul(m, g.restrict(g.action(phi, y), x), g.restrict(phi, y));
    if (!g.equal(m, lhs, rhs)) {
      r.add("axiom-ii", {m, n},
            {"phi=" + phi.to_string(), "x=" + g.describe(n, x), "y=" + g.describe(n, y), "lhs=" + g.describe(m, lhs),
             "rhs=" + g.describe(m, rhs)});
    }
    if (!(g.to_weyl(n, xy) == weyl_mul(wx, g.to_weyl(n, y)))) {
      r.add("weyl-hom", {n}, {"x=" + g.describe(n, x), "y=" + g.describe(n, y)});
    }
  }
}

}  // namespace detail

/// Axioms (i) and (ii), functoriality, and the structure map to the Weyl
/// group, for every phi, psi, x, y with degrees at most maxdeg.
template <FiniteCrossedGroup G>
Report verify_crossed_axioms(const G& g, int maxdeg) {
  Report report("crossed-axioms:" + g.name(), maxdeg);
  ScopedTimer timer(report);
  const detail::HomTable homs(maxdeg);
  struct Task {
    int n;
    typename G::element_type x;
  };
  std::vector<Task> tasks;
  std::vector<std::vector<typename G::element_type>> elements;
  for (int n = 0; n <= maxdeg; ++n) {
    elements.push_back(g.elements(n));
    for (const auto& x : elements.back()) tasks.push_back({n, x});
  }
  std::vector<Report> partial(tasks.size());
  parallel_for(tasks.size(), worker_count(), [&](std::size_t t, std::size_t) {
    const auto& [n, x] = tasks[t];
    Report& r = partial[t];
    const auto& ys = elements[static_cast<std::size_t>(n)];
    ++r.checked;
    if (!g.equal(n, g.restrict(IntervalMorphism::identity(n), x), x)) {
      r.add("identity", {n}, {"x=" + g.describe(n, x)});
    }
    for (int m = 0; m <= maxdeg; ++m) {
      std::vector<IntervalMorphism> psis;
      for (int l = 0; l <= maxdeg; ++l) {
        const auto& h = homs(l, m);
        psis.insert(psis.end(), h.begin(), h.end());
      }
      for (const auto& phi : homs(m, n)) {
        if (!admits(g, phi)) continue;
        detail::check_axioms_at(g, phi, x, psis, ys, r);
      }
    }
  });
  for (const auto& r : partial) report.merge(r);
  return report;
}

/// The same checks on random (phi, psi, x, y) drawn with a fixed seed.
template <SampledCrossedGroup G>
Report verify_crossed_axioms_sampled(const G& g, int maxdeg, std::size_t samples, std::uint64_t seed) {
  Report report("crossed-axioms:" + g.name(), maxdeg, "sampled");
  ScopedTimer timer(report);
  const detail::HomTable homs(maxdeg);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> deg(0, maxdeg);
  auto pick = [&rng](const std::vector<IntervalMorphism>& v) {
    return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
  };
  for (std::size_t s = 0; s < samples; ++s) {
    const int n = deg(rng), m = deg(rng), l = deg(rng);
    const IntervalMorphism phi = pick(homs(m, n));
    const IntervalMorphism psi = pick(homs(l, m));
    if (!admits(g, phi) || !admits(g, psi)) continue;
    const auto x = g.sample(n, rng);
    const auto y = g.sample(n, rng);
    detail::check_axioms_at(g, phi, x, {psi}, {y}, report);
  }
  report.notes.push_back("seed " + std::to_string(seed) + ", " + std::to_string(samples) + " samples");
  return report;
}

/// Whether every inert rho is fixed by every x; if so also checks that each
/// rho^* is an injective homomorphism.
template <FiniteCrossedGroup G>
Report inert_trivial_action(const G& g, int maxdeg) {
  Report report("inert-action:" + g.name(), maxdeg);
  ScopedTimer timer(report);
  for (int n = 0; n <= maxdeg; ++n) {
    for (int k = 0; k <= n; ++k) {
      const auto xs = g.elements(k);
      for (const auto& rho : hom_enumerate(n, k)) {
        if (!is_inert(rho)) continue;
        for (const auto& x : xs) {
          ++report.checked;
          const IntervalMorphism moved = g.action(rho, x);
          if (!(moved == rho)) {
            report.add("inert-action", {n, k},
                       {"rho=" + rho.to_string(), "x=" + g.describe(k, x), "rho^x=" + moved.to_string()});
          }
        }
      }
    }
  }
  if (!report.passed()) return report;
  for (int n = 0; n <= maxdeg; ++n) {
    for (int k = 0; k <= n; ++k) {
      const auto xs = g.elements(k);
      for (const auto& rho : hom_enumerate(n, k)) {
        if (!is_inert(rho)) continue;
        std::vector<typename G::element_type> images;
        for (const auto& x : xs) images.push_back(g.restrict(rho, x));
        for (std::size_t a = 0; a < xs.size(); ++a) {
          for (std::size_t b = 0; b < xs.size(); ++b) {
            ++report.checked;
            if (!g.equal(n, g.restrict(rho, g.mul(k, xs[a], xs[b])), g.mul(n, images[a], images[b]))) {
              report.add("inert-hom", {n, k},
                         {"rho=" + rho.to_string(), "x=" + g.describe(k, xs[a]), "y=" + g.describe(k, xs[b])});
            }
            if (a < b && g.equal(n, images[a], images[b])) {
              report.add("inert-injective", {n, k},
                         {"rho=" + rho.to_string(), "x=" + g.describe(k, xs[a]), "y=" + g.describe(k, xs[b])});
            }
          }
        }
      }
    }
  }
  return report;
}

/// Whether every point phi1 sends to the interior lands in a single one of
/// phi2^{-1}(-inf), phi2^{-1}(+inf).
inline bool one_sided(const IntervalMorphism& phi1, const IntervalMorphism& phi2) {
  bool neg = false, pos = false;
  for (int i = 1; i <= phi1.domain(); ++i) {
    if (is_infinite(phi1(i))) continue;
    (phi2(i) == neg_inf ? neg : pos) = true;
  }
  return !(neg && pos);
}

enum class DissociationScope { all_pairs, one_sided_pairs };

/// For dissociated phi1, phi2 and x in G at the codomain of phi1:
/// phi2 psi^{phi1^*(x)} == phi2 psi for every psi. With one_sided_pairs only
/// pairs where phi1's interior support sits over one end of phi2 are checked.
template <FiniteCrossedGroup G>
Report check_dissociated_stabilizer(const G& g, int maxdeg, DissociationScope scope = DissociationScope::all_pairs) {
  Report report(std::string(scope == DissociationScope::all_pairs ? "dissociated-stabilizer:" : "dissociated-stabilizer-one-sided:") +
                    g.name(),
                maxdeg);
  ScopedTimer timer(report);
  for (int n = 0; n <= maxdeg; ++n) {
    for (int k1 = 0; k1 <= maxdeg; ++k1) {
      for (int k2 = 0; k2 <= maxdeg; ++k2) {
        for (const auto& phi1 : hom_enumerate(n, k1)) {
          for (const auto& phi2 : hom_enumerate(n, k2)) {
            if (!dissociated(phi1, phi2)) continue;
            if (scope == DissociationScope::one_sided_pairs && !one_sided(phi1, phi2)) continue;
            for (const auto& x : g.elements(k1)) {
              const auto moved_by = g.restrict(phi1, x);
              for (int m = 0; m <= maxdeg; ++m) {
                for (const auto& psi : hom_enumerate(m, n)) {
                  ++report.checked;
                  if (!(compose(phi2, g.action(psi, moved_by)) == compose(phi2, psi))) {
                    report.add("dissociated-stabilizer", {m, n, k1, k2},
                               {"phi1=" + phi1.to_string(), "phi2=" + phi2.to_string(), "psi=" + psi.to_string(),
                                "x=" + g.describe(k1, x)});
                  }
                }
              }
            }
          }
        }
      }
    }
  }
  return report;
}

/// Whether G lands in S inside the Weyl group (no flips) at degrees <= maxdeg.
template <FiniteCrossedGroup G>
std::optional<std::string> not_over_sym_witness(const G& g, int maxdeg) {
  for (int n = 0; n <= maxdeg; ++n) {
    for (const auto& x : g.elements(n)) {
      if (!g.to_weyl(n, x).over_sym()) return g.describe(n, x) + " maps to " + g.to_weyl(n, x).to_string();
    }
  }
  return std::nullopt;
}

struct WeylSubfamily {
  std::string name;
  std::function<bool(const WeylElement&)> contains;
};

/// The six named crossed subgroups of the Weyl group, as membership predicates.
inline std::vector<WeylSubfamily> weyl_subfamilies() {
  auto all_x = [](const WeylElement& w, int bit) {
    return std::all_of(w.x.begin(), w.x.end(), [bit](int b) { return b == bit; });
  };
  return {
      {"trivial", [all_x](const WeylElement& w) { return w.sigma.is_identity() && all_x(w, 0) && w.u == 0; }},
      {"C2",
       [all_x](const WeylElement& w) {
         return (w.sigma.is_identity() && all_x(w, 0) && w.u == 0) ||
                (w.sigma == beta(w.sigma.degree()) && all_x(w, 1) && w.u == 1);
       }},
      {"sym", [all_x](const WeylElement& w) { return all_x(w, 0) && w.u == 0; }},
      {"sym x C2", [all_x](const WeylElement& w) { return (all_x(w, 0) && w.u == 0) || (all_x(w, 1) && w.u == 1); }},
      {"hyperoctahedral", [](const WeylElement& w) { return w.u == 0; }},
      {"weyl", [](const WeylElement&) { return true; }},
  };
}

/// Each subfamily is closed under products, inverses and every restriction.
inline Report check_weyl_subfamilies(int maxdeg) {
  const auto w = weyl();
  Report report("weyl-subfamilies", maxdeg);
  ScopedTimer timer(report);
  for (const auto& fam : weyl_subfamilies()) {
    for (int n = 0; n <= maxdeg; ++n) {
      std::vector<std::uint64_t> members;
      for (auto x : w->elements(n)) {
        if (fam.contains(w->to_weyl(n, x))) members.push_back(x);
      }
      for (auto a : members) {
        ++report.checked;
        if (!fam.contains(w->to_weyl(n, w->inv(n, a)))) report.add("inverse-closed:" + fam.name, {n}, {w->describe(n, a)});
        for (auto b : members) {
          if (!fam.contains(w->to_weyl(n, w->mul(n, a, b)))) {
            report.add("product-closed:" + fam.name, {n}, {w->describe(n, a), w->describe(n, b)});
          }
        }
        for (int m = 0; m <= maxdeg; ++m) {
          for (const auto& phi : hom_enumerate(m, n)) {
            if (!fam.contains(w->to_weyl(m, w->restrict(phi, a)))) {
              report.add("restriction-closed:" + fam.name, {m, n}, {phi.to_string(), w->describe(n, a)});
            }
          }
        }
      }
    }
  }
  return report;
}

/// Degreewise homomorphism families G_n -> H_n, natural in every phi and
/// compatible with the actions, enumerated up to a truncation degree.
struct MapEnumeration {
  int bound = 0;
  std::vector<std::vector<std::vector<FiniteGroup::index>>> families;  // family -> degree -> images
  std::string label() const { return "consistent up to degree " + std::to_string(bound); }
};

inline MapEnumeration enumerate_crossed_maps(const CrossedIntervalGroup& g, const CrossedIntervalGroup& h, int maxdeg) {
  using index = FiniteGroup::index;
  MapEnumeration out;
  out.bound = maxdeg;
  const detail::HomTable homs(maxdeg);
  std::vector<std::vector<index>> current;

  auto action_compatible = [&](int n, std::uint64_t x, std::uint64_t y) {
    for (int m = 0; m <= maxdeg; ++m) {
      for (const auto& phi : homs(m, n)) {
        if (!(g.action(phi, x) == h.action(phi, y))) return false;
      }
    }
    return true;
  };

  auto natural = [&](int d, const std::vector<index>& f) {
    for (int e = 0; e <= d; ++e) {
      const std::vector<index>& fe = e == d ? f : current[static_cast<std::size_t>(e)];
      for (const auto& phi : homs(e, d)) {
        for (std::uint64_t x = 0; x < g.order(d); ++x) {
          if (fe[g.restrict(phi, x)] != h.restrict(phi, f[x])) return false;
        }
      }
      if (e == d) continue;
      for (const auto& phi : homs(d, e)) {
        for (std::uint64_t y = 0; y < g.order(e); ++y) {
          if (f[g.restrict(phi, y)] != h.restrict(phi, fe[y])) return false;
        }
      }
    }
    return true;
  };

  auto homs_at = [&](int d) {
    std::vector<std::vector<index>> found;
    const FiniteGroup& gd = g.group_at(d);
    const FiniteGroup& hd = h.group_at(d);
    const auto gens = gd.generators();
    std::vector<std::vector<index>> candidates(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) {
      for (index y = 0; y < hd.order(); ++y) {
        if (action_compatible(d, gens[i], y)) candidates[i].push_back(y);
      }
    }
    std::vector<index> images(gens.size());
    auto extend = [&]() -> std::optional<std::vector<index>> {
      std::vector<std::int64_t> f(gd.order(), -1);
      f[0] = 0;
      std::deque<index> queue{0};
      while (!queue.empty()) {
        const index a = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < gens.size(); ++i) {
          const index b = gd.mul(a, gens[i]);
          const index fb = hd.mul(static_cast<index>(f[a]), images[i]);
          if (f[b] < 0) {
            f[b] = fb;
            queue.push_back(b);
          } else if (f[b] != fb) {
            return std::nullopt;
          }
        }
      }
      std::vector<index> out_f(gd.order());
      for (std::size_t a = 0; a < out_f.size(); ++a) out_f[a] = static_cast<index>(f[a]);
      if (!gd.is_homomorphism_to(hd, out_f)) return std::nullopt;
      return out_f;
    };
    auto rec = [&](auto& self, std::size_t i) -> void {
      if (i == gens.size()) {
        if (auto f = extend()) found.push_back(std::move(*f));
        return;
      }
      for (index y : candidates[i]) {
        images[i] = y;
        self(self, i + 1);
      }
    };
    rec(rec, 0);
    return found;
  };

  auto search = [&](auto& self, int d) -> void {
    if (d > maxdeg) {
      out.families.push_back(current);
      return;
    }
    for (auto& f : homs_at(d)) {
      bool ok = true;
      for (std::uint64_t x = 0; x < g.order(d) && ok; ++x) ok = action_compatible(d, x, f[x]);
      if (!ok || !natural(d, f)) continue;
      current.push_back(std::move(f));
      self(self, d + 1);
      current.pop_back();
    }
  };
  search(search, 0);
  return out;
}

/// Whether the given family is a map of crossed interval groups up to maxdeg.
inline Report check_crossed_map(const CrossedIntervalGroup& g, const CrossedIntervalGroup& h,
                                const std::vector<std::vector<FiniteGroup::index>>& f, int maxdeg) {
  Report report("crossed-map:" + g.name() + "->" + h.name(), maxdeg);
  for (int n = 0; n <= maxdeg; ++n) {
    const auto& fn = f[static_cast<std::size_t>(n)];
    for (std::uint64_t x = 0; x < g.order(n); ++x) {
      for (std::uint64_t y = 0; y < g.order(n); ++y) {
        ++report.checked;
        if (fn[g.mul(n, x, y)] != h.mul(n, fn[x], fn[y])) report.add("homomorphism", {n}, {g.describe(n, x), g.describe(n, y)});
      }
      for (int m = 0; m <= maxdeg; ++m) {
        for (const auto& phi : hom_enumerate(m, n)) {
          ++report.checked;
          if (f[static_cast<std::size_t>(m)][g.restrict(phi, x)] != h.restrict(phi, fn[x])) {
            report.add("naturality", {m, n}, {phi.to_string(), g.describe(n, x)});
          }
          if (!(g.action(phi, x) == h.action(phi, fn[x]))) report.add("action", {m, n}, {phi.to_string(), g.describe(n, x)});
        }
      }
    }
  }
  return report;
}

/// Text format for W(H0, H1):
///   wreath
///   H0
///   <group>
///   H1
///   <group>
///   theta <|H0| indices>
///   eps0 <|H0| bits>
///   eps1 <|H1| bits>
inline std::shared_ptr<const WreathCrossed> parse_wreath_spec(std::istream& in, std::string name = "wreath") {
  std::string word;
  auto expect = [&](const std::string& w) {
    if (!(in >> word) || word != w) throw std::runtime_error("wreath spec: expected '" + w + "'");
  };
  expect("wreath");
  expect("H0");
  FiniteGroup h0 = parse_group(in);
  expect("H1");
  FiniteGroup h1 = parse_group(in);
  expect("theta");
  auto theta = parse_hom(in, h0.order());
  auto bits = [&](std::size_t count) {
    std::vector<int> out(count);
    for (auto& b : out) {
      if (!(in >> b)) throw std::runtime_error("wreath spec: parity map is truncated");
    }
    return out;
  };
  expect("eps0");
  auto eps0 = bits(h0.order());
  expect("eps1");
  auto eps1 = bits(h1.order());
  try {
    return wreath_construct(std::move(h0), std::move(h1), std::move(theta), std::move(eps0), std::move(eps1),
                            std::move(name));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("wreath spec: ") + e.what());
  }
}

}  // namespace crossed
