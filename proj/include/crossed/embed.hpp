#pragma once

// The interval set Psi(X) of a pointed operad, the crossed interval group
// attached to a group operad, and the semidirect product of interval sets.

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <map>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "crossed.hpp"
#include "interval.hpp"
#include "operad.hpp"
#include "report.hpp"

namespace crossed {

/// Degreewise sets with contravariant restriction along interval morphisms.
template <class S>
concept IntervalSet = requires(const S& s, int n, const typename S::element_type& x, const IntervalMorphism& phi) {
  { s.name() } -> std::convertible_to<std::string>;
  { s.restrict(phi, x) } -> std::same_as<typename S::element_type>;
  { s.equal(n, x, x) } -> std::convertible_to<bool>;
  { s.describe(n, x) } -> std::convertible_to<std::string>;
};

template <class S>
concept FiniteIntervalSet = IntervalSet<S> && requires(const S& s, int n) {
  { s.elements(n) } -> std::same_as<std::vector<typename S::element_type>>;
};

class PointednessError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Violations of gamma(e_n; e_k1, ..., e_kn) = e_{k1+...+kn} with n and every k_i at most bound.
template <PointedOperad X>
Report check_pointedness(const X& x, int bound) {
  Report report("pointedness:" + x.name(), bound);
  for (int n = 0; n <= bound; ++n) {
    detail::for_each_arity_vector(n, bound, [&](const std::vector<int>& ks) {
      ++report.checked;
      std::vector<typename X::element_type> units;
      int total = 0;
      for (int k : ks) {
        units.push_back(x.unit(k));
        total += k;
      }
      const auto lhs = x.gamma(x.unit(n), units);
      if (!x.equal(lhs, x.unit(total))) {
        std::string kstr;
        for (int k : ks) kstr += (kstr.empty() ? "" : ",") + std::to_string(k);
        report.add("pointedness", {n, total}, {"ks=(" + kstr + ")", "gamma=" + x.describe(lhs),
                                               "e=" + x.describe(x.unit(total))});
      }
    });
  }
  return report;
}

/// Psi(X): degree n is X(n); phi^*(x) = gamma(e_3; e_{k_-inf}, gamma(x; e_{k_1}, ..., e_{k_n}), e_{k_+inf}).
template <PointedOperad X>
class Psi {
 public:
  using element_type = typename X::element_type;

  /// Validates the base points up to validate_bound; a negative bound skips validation.
  explicit Psi(X x, int validate_bound = 3) : x_(std::move(x)) {
    if (validate_bound >= 0) {
      const Report r = check_pointedness(x_, validate_bound);
      if (!r.passed()) {
        const auto& v = r.violations.front();
        std::string w;
        for (const auto& s : v.witnesses) w += " " + s;
        throw PointednessError("psi: base points of " + x_.name() + " violate pointedness:" + w);
      }
    }
  }

  std::string name() const { return "psi(" + x_.name() + ")"; }

  element_type restrict(const IntervalMorphism& phi, const element_type& a) const {
    if (x_.arity(a) != phi.codomain()) throw std::invalid_argument("psi restrict: element degree does not match codomain");
    std::vector<element_type> units;
    units.reserve(static_cast<std::size_t>(phi.codomain()));
    for (int j = 1; j <= phi.codomain(); ++j) units.push_back(x_.unit(phi.k(j)));
    const element_type middle = x_.gamma(a, units);
    return x_.gamma(x_.unit(3), {x_.unit(phi.k_neg()), middle, x_.unit(phi.k_pos())});
  }

  bool equal(int, const element_type& a, const element_type& b) const { return x_.equal(a, b); }
  std::string describe(int n, const element_type& a) const { return x_.describe(a) + "@" + std::to_string(n); }

  std::vector<element_type> elements(int n) const
    requires FiniteOperad<X>
  {
    return x_.elements_at(n);
  }

  /// phi^y = phi^{(rho(y); 0)}.
  IntervalMorphism action(const IntervalMorphism& phi, const element_type& y) const
    requires OverSym<X>
  {
    return act(phi, {x_.to_sym(y), false});
  }

  Permutation to_sym(const element_type& a) const
    requires OverSym<X>
  {
    return x_.to_sym(a);
  }

  const X& operad() const { return x_; }

 private:
  X x_;
};

template <PointedOperad X>
Psi<X> psi(X x, int validate_bound = 3) {
  return Psi<X>(std::move(x), validate_bound);
}

/// The crossed interval group of a group operad: groups G(n), restrictions of
/// Psi(G), action through the projection to S, no flips.
template <GroupOperad G>
class PsiCrossed : public Psi<G> {
 public:
  using element_type = typename G::element_type;

  explicit PsiCrossed(G g, int validate_bound = 3, int sample_length = 3)
      : Psi<G>(std::move(g), validate_bound), sample_length_(sample_length) {}

  std::string name() const { return "psi-crossed(" + this->operad().name() + ")"; }
  element_type mul(int, const element_type& a, const element_type& b) const { return this->operad().mul(a, b); }
  element_type inv(int, const element_type& a) const { return this->operad().inv(a); }
  element_type unit(int n) const { return this->operad().unit(n); }
  WeylElement to_weyl(int n, const element_type& a) const {
    return {this->operad().to_sym(a), std::vector<int>(static_cast<std::size_t>(n), 0), 0};
  }
  element_type sample(int n, std::mt19937_64& rng) const
    requires SampledOperad<G>
  {
    return this->operad().sample(n, rng, sample_length_);
  }

 private:
  int sample_length_;
};

template <GroupOperad G>
PsiCrossed<G> psi_crossed(G g, int validate_bound = 3, int sample_length = 3) {
  return PsiCrossed<G>(std::move(g), validate_bound, sample_length);
}

/// A finite crossed group re-indexed as 0..|G_n|-1 per degree, so that the
/// table-based algorithms apply. Degrees above max_degree are refused.
template <FiniteCrossedGroup G>
class IndexedCrossed final : public CrossedIntervalGroup {
 public:
  using base_element = typename G::element_type;

  IndexedCrossed(G g, int maxdeg) : g_(std::move(g)), maxdeg_(maxdeg) {
    for (int n = 0; n <= maxdeg; ++n) {
      elements_.push_back(g_.elements(n));
      if constexpr (std::totally_ordered<base_element>) {
        std::map<base_element, std::uint64_t> idx;
        for (std::uint64_t i = 0; i < elements_.back().size(); ++i) idx.emplace(elements_.back()[i], i);
        lookup_.push_back(std::move(idx));
      }
      if (elements_.back().empty() || !g_.equal(n, elements_.back().front(), g_.unit(n))) {
        throw std::invalid_argument("IndexedCrossed: the first element at each degree must be the unit");
      }
    }
  }

  std::string name() const override { return g_.name(); }
  int max_degree() const override { return maxdeg_; }
  std::uint64_t order(int n) const override { return at(n).size(); }
  element_type mul(int n, element_type a, element_type b) const override { return index_of(n, g_.mul(n, get(n, a), get(n, b))); }
  element_type inv(int n, element_type a) const override { return index_of(n, g_.inv(n, get(n, a))); }
  element_type restrict(const IntervalMorphism& phi, element_type x) const override {
    return index_of(phi.domain(), g_.restrict(phi, get(phi.codomain(), x)));
  }
  IntervalMorphism action(const IntervalMorphism& phi, element_type x) const override {
    return g_.action(phi, get(phi.codomain(), x));
  }
  WeylElement to_weyl(int n, element_type x) const override { return g_.to_weyl(n, get(n, x)); }
  std::string describe(int n, element_type x) const override { return g_.describe(n, get(n, x)); }

  const base_element& get(int n, element_type i) const { return at(n).at(i); }
  element_type index_of(int n, const base_element& e) const {
    if constexpr (std::totally_ordered<base_element>) {
      const auto& m = lookup_.at(static_cast<std::size_t>(n));
      auto it = m.find(e);
      if (it != m.end()) return it->second;
    } else {
      const auto& v = at(n);
      for (std::uint64_t i = 0; i < v.size(); ++i) {
        if (g_.equal(n, v[i], e)) return i;
      }
    }
    throw std::out_of_range("IndexedCrossed: element not found at degree " + std::to_string(n));
  }

 private:
  const std::vector<base_element>& at(int n) const {
    if (n < 0 || n > maxdeg_) throw std::out_of_range("IndexedCrossed: degree " + std::to_string(n) + " above bound");
    return elements_[static_cast<std::size_t>(n)];
  }

  G g_;
  int maxdeg_;
  std::vector<std::vector<base_element>> elements_;
  std::vector<std::map<base_element, std::uint64_t>> lookup_;
};

template <FiniteCrossedGroup G>
std::shared_ptr<const IndexedCrossed<G>> indexed(G g, int maxdeg) {
  return std::make_shared<const IndexedCrossed<G>>(std::move(g), maxdeg);
}

/// X x| Y: phi^*(x, y) = ((phi^y)^*(x), phi^*(y)).
template <IntervalSet X, IntervalSet Y>
  requires requires(const Y& y, const IntervalMorphism& phi, const typename Y::element_type& e) {
    { y.action(phi, e) } -> std::same_as<IntervalMorphism>;
  }
class RtimesInterval {
 public:
  using element_type = PairElement<typename X::element_type, typename Y::element_type>;

  RtimesInterval(X x, Y y) : x_(std::move(x)), y_(std::move(y)) {}

  std::string name() const { return "(" + x_.name() + " x| " + y_.name() + ")"; }
  element_type restrict(const IntervalMorphism& phi, const element_type& a) const {
    return {x_.restrict(y_.action(phi, a.y), a.x), y_.restrict(phi, a.y)};
  }
  bool equal(int n, const element_type& a, const element_type& b) const { return x_.equal(n, a.x, b.x) && y_.equal(n, a.y, b.y); }
  std::string describe(int n, const element_type& a) const {
    return "(" + x_.describe(n, a.x) + "," + y_.describe(n, a.y) + ")";
  }
  std::vector<element_type> elements(int n) const
    requires FiniteIntervalSet<X> && FiniteIntervalSet<Y>
  {
    std::vector<element_type> out;
    const auto ys = y_.elements(n);
    for (const auto& a : x_.elements(n)) {
      for (const auto& b : ys) out.push_back({a, b});
    }
    return out;
  }
  /// The projection to the second factor.
  typename Y::element_type project(const element_type& a) const { return a.y; }

  const X& left() const { return x_; }
  const Y& right() const { return y_; }

 private:
  X x_;
  Y y_;
};

template <IntervalSet X, IntervalSet Y>
RtimesInterval<X, Y> rtimes_interval(X x, Y y) {
  return RtimesInterval<X, Y>(std::move(x), std::move(y));
}

/// psi^* phi^* == (phi psi)^* and id^* == id for every element at degrees <= maxdeg.
template <FiniteIntervalSet S>
Report check_interval_functoriality(const S& s, int maxdeg) {
  Report report("functoriality:" + s.name(), maxdeg);
  ScopedTimer timer(report);
  const detail::HomTable homs(maxdeg);
  for (int n = 0; n <= maxdeg; ++n) {
    for (const auto& x : s.elements(n)) {
      ++report.checked;
      if (!s.equal(n, s.restrict(IntervalMorphism::identity(n), x), x)) report.add("identity", {n}, {s.describe(n, x)});
      for (int m = 0; m <= maxdeg; ++m) {
        for (const auto& phi : homs(m, n)) {
          const auto rx = s.restrict(phi, x);
          for (int l = 0; l <= maxdeg; ++l) {
            for (const auto& psi_ : homs(l, m)) {
              ++report.checked;
              if (!s.equal(l, s.restrict(psi_, rx), s.restrict(compose(phi, psi_), x))) {
                report.add("functoriality", {l, m, n}, {"phi=" + phi.to_string(), "psi=" + psi_.to_string(), s.describe(n, x)});
              }
            }
          }
        }
      }
    }
  }
  return report;
}

/// Psi(X x| Y) == Psi(X) x| Psi(Y) along every phi at degrees <= maxdeg, the
/// structure maps to S agree, and both factors satisfy pointedness.
template <class X, class Y>
  requires PointedOperad<X> && PointedOperad<Y> && OverSym<X> && OverSym<Y> && FiniteOperad<X> && FiniteOperad<Y>
Report check_strict_monoidality(const X& x, const Y& y, int maxdeg) {
  Report report("strict-monoidality:" + x.name() + "," + y.name(), maxdeg);
  ScopedTimer timer(report);
  report.merge(check_pointedness(x, maxdeg));
  report.merge(check_pointedness(y, maxdeg));
  const auto product = semidirect(x, y);
  const Psi<Semidirect<X, Y>> lhs(product, -1);
  const auto rhs = rtimes_interval(Psi<X>(x, -1), Psi<Y>(y, -1));
  const detail::HomTable homs(maxdeg);
  for (int n = 0; n <= maxdeg; ++n) {
    for (const auto& e : product.elements_at(n)) {
      ++report.checked;
      if (!(lhs.operad().to_sym(e) == compose(x.to_sym(e.x), y.to_sym(e.y)))) {
        report.add("structure-map", {n}, {lhs.describe(n, e)});
      }
      for (int m = 0; m <= maxdeg; ++m) {
        for (const auto& phi : homs(m, n)) {
          ++report.checked;
          const auto a = lhs.restrict(phi, e);
          const auto b = rhs.restrict(phi, e);
          if (!lhs.equal(m, a, b)) {
            report.add("monoidality", {m, n},
                       {"phi=" + phi.to_string(), "element=" + lhs.describe(n, e), "psi(XxY)=" + lhs.describe(m, a),
                        "psi(X)xpsi(Y)=" + lhs.describe(m, b)});
          }
        }
      }
    }
  }
  return report;
}

template <class E>
struct MuRhoSides {
  E gamma;    // gamma(x; x_1, ..., x_n)
  E product;  // mu^*(x) rho_1^*(x_1) ... rho_n^*(x_n)
};

/// Both sides of gamma(x; x_1..x_n) = mu_k^*(x) rho_1^*(x_1) ... rho_n^*(x_n).
template <GroupOperad G>
MuRhoSides<typename G::element_type> mu_rho_decompose(const PsiCrossed<G>& g, const typename G::element_type& x,
                                                      const std::vector<typename G::element_type>& inputs) {
  const G& op = g.operad();
  if (op.arity(x) != static_cast<int>(inputs.size())) throw std::invalid_argument("mu_rho_decompose: arity mismatch");
  std::vector<int> ks;
  for (const auto& xi : inputs) ks.push_back(op.arity(xi));
  int total = 0;
  for (int k : ks) total += k;
  auto prod = g.restrict(mu_of(ks), x);
  for (std::size_t j = 0; j < inputs.size(); ++j) {
    prod = g.mul(total, prod, g.restrict(rho_of(ks, static_cast<int>(j + 1)), inputs[j]));
  }
  return {op.gamma(x, inputs), prod};
}

/// Degreewise homomorphisms G(n) -> H(n) over S commuting with gamma for all
/// arities whose total is at most bound.
template <class G, class H>
  requires GroupOperad<G> && FiniteOperad<G> && GroupOperad<H> && FiniteOperad<H>
std::vector<std::vector<std::vector<FiniteGroup::index>>> enumerate_group_operad_maps(const G& g, const H& h, int bound) {
  using index = FiniteGroup::index;
  const auto pg = indexed(psi_crossed(g, bound), bound);
  const auto ph = indexed(psi_crossed(h, bound), bound);
  std::vector<std::vector<std::vector<index>>> per_degree;
  for (int n = 0; n <= bound; ++n) {
    const FiniteGroup& gn = pg->group_at(n);
    const FiniteGroup& hn = ph->group_at(n);
    std::vector<std::vector<index>> homs;
    const auto gens = gn.generators();
    std::vector<index> images(gens.size());
    auto rec = [&](auto& self, std::size_t i) -> void {
      if (i == gens.size()) {
        std::vector<std::int64_t> f(gn.order(), -1);
        f[0] = 0;
        std::vector<index> queue{0};
        for (std::size_t q = 0; q < queue.size(); ++q) {
          const index a = queue[q];
          for (std::size_t t = 0; t < gens.size(); ++t) {
            const index b = gn.mul(a, gens[t]);
            const index fb = hn.mul(static_cast<index>(f[a]), images[t]);
            if (f[b] < 0) {
              f[b] = fb;
              queue.push_back(b);
            } else if (f[b] != fb) {
              return;
            }
          }
        }
        std::vector<index> out(gn.order());
        for (std::size_t a = 0; a < out.size(); ++a) out[a] = static_cast<index>(f[a]);
        if (!gn.is_homomorphism_to(hn, out)) return;
        for (index a = 0; a < gn.order(); ++a) {
          if (!(pg->to_weyl(n, a) == ph->to_weyl(n, out[a]))) return;
        }
        homs.push_back(std::move(out));
        return;
      }
      for (index y = 0; y < hn.order(); ++y) {
        if (!(pg->to_weyl(n, gens[i]) == ph->to_weyl(n, y))) continue;
        images[i] = y;
        self(self, i + 1);
      }
    };
    rec(rec, 0);
    per_degree.push_back(std::move(homs));
  }
  std::vector<std::vector<std::vector<index>>> out;
  std::vector<std::vector<index>> current;
  auto compatible = [&](const std::vector<std::vector<index>>& f) {
    const int top = static_cast<int>(f.size()) - 1;
    // Every gamma whose output and all arities lie in 0..top and which involves degree top.
    for (int n = 0; n <= top; ++n) {
      bool ok = true;
      detail::for_each_arity_vector(n, top, [&](const std::vector<int>& ks) {
        if (!ok) return;
        int total = 0;
        for (int k : ks) total += k;
        if (total > top || (n != top && total != top && std::find(ks.begin(), ks.end(), top) == ks.end())) return;
        std::vector<const std::vector<typename G::element_type>*> pools;
        std::vector<std::vector<typename G::element_type>> storage;
        for (int k : ks) storage.push_back(g.elements_at(k));
        for (const auto& s : storage) pools.push_back(&s);
        for (std::uint64_t xi = 0; xi < pg->order(n) && ok; ++xi) {
          detail::for_each_tuple<typename G::element_type>(pools, [&](const std::vector<typename G::element_type>& xs) {
            if (!ok) return;
            std::vector<typename H::element_type> images_h;
            for (std::size_t j = 0; j < xs.size(); ++j) {
              const int k = ks[j];
              images_h.push_back(ph->get(k, f[static_cast<std::size_t>(k)][pg->index_of(k, xs[j])]));
            }
            const auto lhs = f[static_cast<std::size_t>(total)][pg->index_of(total, g.gamma(pg->get(n, xi), xs))];
            const auto rhs = ph->index_of(total, h.gamma(ph->get(n, f[static_cast<std::size_t>(n)][xi]), images_h));
            if (lhs != rhs) ok = false;
          });
        }
      });
      if (!ok) return false;
    }
    return true;
  };
  auto search = [&](auto& self, int d) -> void {
    if (d > bound) {
      out.push_back(current);
      return;
    }
    for (const auto& f : per_degree[static_cast<std::size_t>(d)]) {
      current.push_back(f);
      if (compatible(current)) self(self, d + 1);
      current.pop_back();
    }
  };
  search(search, 0);
  return out;
}

}  // namespace crossed
