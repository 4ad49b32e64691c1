#pragma once

// Operadicity and tameness of crossed interval groups, the operad O_G, and the
// degreewise quotients by K(G) (operadification) and L(G) (taming).

#include <algorithm>
#include <cstdint>
#include <memory>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "crossed.hpp"
#include "embed.hpp"
#include "interval.hpp"
#include "operad.hpp"
#include "report.hpp"

namespace crossed {

class NotOverSymError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotOperadicError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::vector<IntervalMorphism> inert_from(int n, int k) {
  std::vector<IntervalMorphism> out;
  for (const auto& rho : hom_enumerate(n, k)) {
    if (is_inert(rho)) out.push_back(rho);
  }
  return out;
}

/// Calls f(rho1, rho2) for every ordered dissociated pair of inert morphisms out of <<n>>.
template <class F>
void for_each_dissociated_inert_pair(int n, F&& f) {
  std::vector<IntervalMorphism> inert;
  for (int k = 0; k <= n; ++k) {
    for (auto& rho : inert_from(n, k)) inert.push_back(std::move(rho));
  }
  for (const auto& r1 : inert) {
    for (const auto& r2 : inert) {
      if (dissociated(r1, r2)) f(r1, r2);
    }
  }
}

inline std::string ks_string(const std::vector<int>& ks) {
  std::string s = "(";
  for (std::size_t i = 0; i < ks.size(); ++i) s += (i ? "," : "") + std::to_string(ks[i]);
  return s + ")";
}

/// x_*(k) = (k_{sigma^-1(1)}, ..., k_{sigma^-1(n)}).
inline std::vector<int> permute_arities(const Permutation& sigma, const std::vector<int>& ks) {
  std::vector<int> out(ks.size());
  for (std::size_t j = 0; j < ks.size(); ++j) out[static_cast<std::size_t>(sigma(static_cast<int>(j + 1)) - 1)] = ks[j];
  return out;
}

template <CrossedGroup G>
typename G::element_type commutator(const G& g, int n, const typename G::element_type& a,
                                    const typename G::element_type& b) {
  return g.mul(n, g.mul(n, a, b), g.inv(n, g.mul(n, b, a)));
}

}  // namespace detail

/// (i) inert morphisms are fixed by the action; (ii) images of dissociated
/// inert restrictions commute.
template <FiniteCrossedGroup G>
Report is_operadic(const G& g, int maxdeg) {
  Report report("operadic:" + g.name(), maxdeg);
  ScopedTimer timer(report);
  report.merge(inert_trivial_action(g, maxdeg));
  for (int n = 0; n <= maxdeg; ++n) {
    detail::for_each_dissociated_inert_pair(n, [&](const IntervalMorphism& r1, const IntervalMorphism& r2) {
      const auto xs1 = g.elements(r1.codomain());
      const auto xs2 = g.elements(r2.codomain());
      for (const auto& x1 : xs1) {
        const auto a = g.restrict(r1, x1);
        for (const auto& x2 : xs2) {
          ++report.checked;
          const auto b = g.restrict(r2, x2);
          if (!g.equal(n, g.mul(n, a, b), g.mul(n, b, a))) {
            report.add("dissociated-commute", {n},
                       {"rho1=" + r1.to_string(), "rho2=" + r2.to_string(), "x1=" + g.describe(r1.codomain(), x1),
                        "x2=" + g.describe(r2.codomain(), x2)});
          }
        }
      }
    });
  }
  report.subject = "operadic:" + g.name();
  return report;
}

/// mu^*(x) rho_j^*(x_j) == (rho^{x_*(k)}_{x(j)})^*(x_j) mu^*(x) for all k with sum <= maxdeg.
template <FiniteCrossedGroup G>
Report is_tame(const G& g, int maxdeg) {
  if (auto w = not_over_sym_witness(g, maxdeg)) throw NotOverSymError("is_tame: " + g.name() + " is not over S: " + *w);
  Report report("tame:" + g.name(), maxdeg);
  ScopedTimer timer(report);
  for (int n = 0; n <= maxdeg; ++n) {
    const auto xs = g.elements(n);
    detail::for_each_bounded_arity_vector(n, maxdeg, [&](const std::vector<int>& ks) {
      int total = 0;
      for (int k : ks) total += k;
      const IntervalMorphism mu = mu_of(ks);
      for (const auto& x : xs) {
        const Permutation sigma = g.to_weyl(n, x).sigma;
        const auto moved = detail::permute_arities(sigma, ks);
        const auto mx = g.restrict(mu, x);
        for (int j = 1; j <= n; ++j) {
          const IntervalMorphism rho = rho_of(ks, j);
          const IntervalMorphism rho_moved = rho_of(moved, sigma(j));
          for (const auto& xj : g.elements(ks[static_cast<std::size_t>(j - 1)])) {
            ++report.checked;
            const auto lhs = g.mul(total, mx, g.restrict(rho, xj));
            const auto rhs = g.mul(total, g.restrict(rho_moved, xj), mx);
            if (!g.equal(total, lhs, rhs)) {
              report.add("tame", {n, total},
                         {"k=" + detail::ks_string(ks), "j=" + std::to_string(j), "x=" + g.describe(n, x),
                          "xj=" + g.describe(ks[static_cast<std::size_t>(j - 1)], xj)});
            }
          }
        }
      }
    });
  }
  return report;
}

struct OperadicElement {
  int n = 0;
  std::uint64_t idx = 0;
  friend bool operator==(const OperadicElement&, const OperadicElement&) = default;
  friend auto operator<=>(const OperadicElement&, const OperadicElement&) = default;
};

/// O_G: O_G(n) = G_n, gamma(x; x_1..x_n) = mu_k^*(x) rho_1^*(x_1) ... rho_n^*(x_n), identity e_1.
class OperadFromCrossed {
 public:
  using element_type = OperadicElement;

  /// Refuses G unless is_operadic passes at the given bound.
  OperadFromCrossed(CrossedPtr g, int bound) : g_(std::move(g)), bound_(bound) {
    const Report r = is_operadic(*g_, bound);
    if (!r.passed()) {
      const auto& v = r.violations.front();
      std::string w;
      for (const auto& s : v.witnesses) w += " " + s;
      throw NotOperadicError("operad_from_crossed: " + g_->name() + " is not operadic (" + v.law + "):" + w);
    }
  }

  std::string name() const { return "O(" + g_->name() + ")"; }
  int bound() const { return bound_; }
  const CrossedIntervalGroup& group() const { return *g_; }
  CrossedPtr group_ptr() const { return g_; }

  OperadicElement gamma(const OperadicElement& x, const std::vector<OperadicElement>& xs) const {
    if (static_cast<int>(xs.size()) != x.n) throw std::invalid_argument("O_G gamma: wrong number of inputs");
    std::vector<int> ks;
    int total = 0;
    for (const auto& xi : xs) {
      ks.push_back(xi.n);
      total += xi.n;
    }
    std::uint64_t prod = g_->restrict(mu_of(ks), x.idx);
    for (std::size_t j = 0; j < xs.size(); ++j) {
      prod = g_->mul(total, prod, g_->restrict(rho_of(ks, static_cast<int>(j + 1)), xs[j].idx));
    }
    return {total, prod};
  }
  OperadicElement identity() const { return {1, g_->unit(1)}; }
  OperadicElement unit(int n) const { return {n, g_->unit(n)}; }
  int arity(const OperadicElement& x) const { return x.n; }
  bool equal(const OperadicElement& a, const OperadicElement& b) const { return a == b; }
  std::string describe(const OperadicElement& x) const { return g_->describe(x.n, x.idx); }
  std::vector<OperadicElement> elements_at(int n) const {
    std::vector<OperadicElement> out;
    for (std::uint64_t i = 0; i < g_->order(n); ++i) out.push_back({n, i});
    return out;
  }
  OperadicElement sample(int n, std::mt19937_64& rng, int) const { return {n, g_->sample(n, rng)}; }
  OperadicElement mul(const OperadicElement& a, const OperadicElement& b) const { return {a.n, g_->mul(a.n, a.idx, b.idx)}; }
  OperadicElement inv(const OperadicElement& a) const { return {a.n, g_->inv(a.n, a.idx)}; }
  Permutation to_sym(const OperadicElement& x) const {
    const WeylElement w = g_->to_weyl(x.n, x.idx);
    if (!w.over_sym()) throw NotOverSymError("O_G to_sym: " + describe(x) + " maps to " + w.to_string());
    return w.sigma;
  }

 private:
  CrossedPtr g_;
  int bound_;
};

inline OperadFromCrossed operad_from_crossed(CrossedPtr g, int bound) { return OperadFromCrossed(std::move(g), bound); }

/// The group operad of G; refuses with the failed condition named.
inline OperadFromCrossed group_operad_from_crossed(CrossedPtr g, int bound) {
  const Report operadic = is_operadic(*g, bound);
  if (!operadic.passed()) {
    throw PreconditionError("group_operad_from_crossed: not operadic (" + operadic.violations.front().law + ")");
  }
  if (auto w = not_over_sym_witness(*g, bound)) {
    throw PreconditionError("group_operad_from_crossed: not over S (" + *w + ")");
  }
  const Report tame = is_tame(*g, bound);
  if (!tame.passed()) throw PreconditionError("group_operad_from_crossed: not tame");
  return OperadFromCrossed(std::move(g), bound);
}

/// Psi(O_G) restricts exactly as G at degrees <= bound.
inline Report check_round_trip(const OperadFromCrossed& o, int bound) {
  Report report("round-trip:" + o.group().name(), bound);
  ScopedTimer timer(report);
  const Psi<OperadFromCrossed> p(o, -1);
  const CrossedIntervalGroup& g = o.group();
  const detail::HomTable homs(bound);
  for (int n = 0; n <= bound; ++n) {
    for (std::uint64_t x = 0; x < g.order(n); ++x) {
      for (int m = 0; m <= bound; ++m) {
        for (const auto& phi : homs(m, n)) {
          ++report.checked;
          if (p.restrict(phi, {n, x}).idx != g.restrict(phi, x)) {
            report.add("round-trip", {m, n}, {"phi=" + phi.to_string(), "x=" + g.describe(n, x)});
          }
          if (!(p.action(phi, {n, x}) == g.action(phi, x))) {
            report.add("round-trip-action", {m, n}, {"phi=" + phi.to_string(), "x=" + g.describe(n, x)});
          }
        }
      }
    }
  }
  return report;
}

/// Subgroups of G_n for n <= bound, closed under restriction between covered degrees.
struct SubgroupFamily {
  std::string name;
  int bound = 0;
  std::vector<std::vector<bool>> members;
  std::vector<std::size_t> generator_counts;  // distinct non-unit generators per degree
  bool generators_restriction_closed = true;  // no extra elements were needed for closure

  std::size_t order(int n) const {
    const auto& m = members.at(static_cast<std::size_t>(n));
    return static_cast<std::size_t>(std::count(m.begin(), m.end(), true));
  }
  bool contains(int n, std::uint64_t x) const { return members.at(static_cast<std::size_t>(n)).at(x); }
  bool trivial() const {
    for (int n = 0; n <= bound; ++n) {
      if (order(n) != 1) return false;
    }
    return true;
  }
};

namespace detail {

/// Generated subgroups, then iterated closure under restriction to a fixpoint.
inline SubgroupFamily close_family(const CrossedIntervalGroup& g, std::string name, int bound,
                                   std::vector<std::set<std::uint64_t>> gens) {
  SubgroupFamily fam;
  fam.name = std::move(name);
  fam.bound = bound;
  for (int n = 0; n <= bound; ++n) {
    auto& s = gens[static_cast<std::size_t>(n)];
    s.erase(g.unit(n));
    fam.generator_counts.push_back(s.size());
    const std::vector<FiniteGroup::index> list(s.begin(), s.end());
    fam.members.push_back(g.group_at(n).generated(list));
  }
  const HomTable homs(bound);
  bool first_pass = true;
  for (bool changed = true; changed;) {
    changed = false;
    for (int n = 0; n <= bound; ++n) {
      for (int m = 0; m <= bound; ++m) {
        std::vector<FiniteGroup::index> extra;
        for (const auto& phi : homs(m, n)) {
          for (std::uint64_t x = 0; x < g.order(n); ++x) {
            if (!fam.members[static_cast<std::size_t>(n)][x]) continue;
            const auto r = g.restrict(phi, x);
            if (!fam.members[static_cast<std::size_t>(m)][r]) extra.push_back(static_cast<FiniteGroup::index>(r));
          }
        }
        if (extra.empty()) continue;
        if (first_pass) fam.generators_restriction_closed = false;
        changed = true;
        auto& mem = fam.members[static_cast<std::size_t>(m)];
        for (std::uint64_t x = 0; x < mem.size(); ++x) {
          if (mem[x]) extra.push_back(static_cast<FiniteGroup::index>(x));
        }
        mem = g.group_at(m).generated(extra);
      }
    }
    first_pass = false;
  }
  return fam;
}

}  // namespace detail

/// Crossed-subgroup condition: subgroup at each degree and closed under every restriction.
inline Report check_family(const CrossedIntervalGroup& g, const SubgroupFamily& fam) {
  Report report("subgroup-family:" + fam.name, fam.bound);
  const detail::HomTable homs(fam.bound);
  for (int n = 0; n <= fam.bound; ++n) {
    const auto& mem = fam.members.at(static_cast<std::size_t>(n));
    ++report.checked;
    if (!mem.at(g.unit(n))) report.add("family-unit", {n}, {});
    for (std::uint64_t a = 0; a < mem.size(); ++a) {
      if (!mem[a]) continue;
      ++report.checked;
      if (!mem[g.inv(n, a)]) report.add("family-inverse", {n}, {g.describe(n, a)});
      for (std::uint64_t b = 0; b < mem.size(); ++b) {
        if (mem[b] && !mem[g.mul(n, a, b)]) report.add("family-product", {n}, {g.describe(n, a), g.describe(n, b)});
      }
      for (int m = 0; m <= fam.bound; ++m) {
        for (const auto& phi : homs(m, n)) {
          ++report.checked;
          if (!fam.members[static_cast<std::size_t>(m)][g.restrict(phi, a)]) {
            report.add("family-restriction", {m, n}, {"phi=" + phi.to_string(), g.describe(n, a)});
          }
        }
      }
    }
  }
  return report;
}

/// K(G): generated by commutators of images of dissociated inert restrictions.
inline SubgroupFamily K_family(const CrossedIntervalGroup& g, int maxdeg) {
  std::vector<std::set<std::uint64_t>> gens(static_cast<std::size_t>(maxdeg) + 1);
  for (int n = 0; n <= maxdeg; ++n) {
    detail::for_each_dissociated_inert_pair(n, [&](const IntervalMorphism& r1, const IntervalMorphism& r2) {
      for (std::uint64_t x1 = 0; x1 < g.order(r1.codomain()); ++x1) {
        const auto a = g.restrict(r1, x1);
        for (std::uint64_t x2 = 0; x2 < g.order(r2.codomain()); ++x2) {
          gens[static_cast<std::size_t>(n)].insert(detail::commutator(g, n, a, g.restrict(r2, x2)));
        }
      }
    });
  }
  return detail::close_family(g, "K(" + g.name() + ")", maxdeg, std::move(gens));
}

/// L(G): generated by mu^*(x) rho_j^*(x_j) mu^*(x)^-1 ((rho^{x_*(k)}_{x(j)})^*(x_j))^-1.
inline SubgroupFamily L_family(const CrossedIntervalGroup& g, int maxdeg) {
  if (auto w = not_over_sym_witness(g, maxdeg)) throw NotOverSymError("L_family: " + g.name() + " is not over S: " + *w);
  std::vector<std::set<std::uint64_t>> gens(static_cast<std::size_t>(maxdeg) + 1);
  for (int n = 0; n <= maxdeg; ++n) {
    detail::for_each_bounded_arity_vector(n, maxdeg, [&](const std::vector<int>& ks) {
      int total = 0;
      for (int k : ks) total += k;
      const IntervalMorphism mu = mu_of(ks);
      for (std::uint64_t x = 0; x < g.order(n); ++x) {
        const Permutation sigma = g.to_weyl(n, x).sigma;
        const auto moved = detail::permute_arities(sigma, ks);
        const auto mx = g.restrict(mu, x);
        const auto mx_inv = g.inv(total, mx);
        for (int j = 1; j <= n; ++j) {
          const IntervalMorphism rho = rho_of(ks, j);
          const IntervalMorphism rho_moved = rho_of(moved, sigma(j));
          for (std::uint64_t xj = 0; xj < g.order(ks[static_cast<std::size_t>(j - 1)]); ++xj) {
            auto e = g.mul(total, mx, g.restrict(rho, xj));
            e = g.mul(total, e, mx_inv);
            e = g.mul(total, e, g.inv(total, g.restrict(rho_moved, xj)));
            gens[static_cast<std::size_t>(total)].insert(e);
          }
        }
      }
    });
  }
  return detail::close_family(g, "L(" + g.name() + ")", maxdeg, std::move(gens));
}

/// Degreewise quotient of G by normal subgroups, defined at degrees <= bound.
/// Cosets are represented by their least index; every coset member is checked
/// to induce the same restrictions, action and structure map.
class QuotientCrossed final : public CrossedIntervalGroup {
 public:
  QuotientCrossed(CrossedPtr base, const SubgroupFamily& fam, std::string name)
      : base_(std::move(base)), family_(fam), name_(std::move(name)), bound_(fam.bound) {
    for (int n = 0; n <= bound_; ++n) {
      const FiniteGroup& gn = base_->group_at(n);
      const auto normal = gn.normal_closure(fam.members.at(static_cast<std::size_t>(n)));
      normal_orders_.push_back(static_cast<std::size_t>(std::count(normal.begin(), normal.end(), true)));
      std::vector<std::uint64_t> coset(gn.order(), UINT64_MAX);
      std::vector<std::uint64_t> reps;
      for (FiniteGroup::index a = 0; a < gn.order(); ++a) {
        if (coset[a] != UINT64_MAX) continue;
        for (FiniteGroup::index k = 0; k < gn.order(); ++k) {
          if (normal[k]) coset[gn.mul(a, k)] = reps.size();
        }
        reps.push_back(a);
      }
      coset_.push_back(std::move(coset));
      reps_.push_back(std::move(reps));
    }
    const Report r = check_well_defined();
    if (!r.passed()) {
      const auto& v = r.violations.front();
      std::string w;
      for (const auto& s : v.witnesses) w += " " + s;
      throw std::logic_error("quotient of " + base_->name() + " is not well defined (" + v.law + "):" + w);
    }
  }

  std::string name() const override { return name_; }
  int max_degree() const override { return bound_; }
  std::uint64_t order(int n) const override { return reps(n).size(); }
  element_type mul(int n, element_type a, element_type b) const override {
    return coset_of(n, base_->mul(n, rep(n, a), rep(n, b)));
  }
  element_type inv(int n, element_type a) const override { return coset_of(n, base_->inv(n, rep(n, a))); }
  element_type restrict(const IntervalMorphism& phi, element_type x) const override {
    check_degree(phi.domain());
    return coset_of(phi.domain(), base_->restrict(phi, rep(phi.codomain(), x)));
  }
  IntervalMorphism action(const IntervalMorphism& phi, element_type x) const override {
    return base_->action(phi, rep(phi.codomain(), x));
  }
  WeylElement to_weyl(int n, element_type x) const override { return base_->to_weyl(n, rep(n, x)); }
  std::string describe(int n, element_type x) const override { return "[" + base_->describe(n, rep(n, x)) + "]"; }

  const SubgroupFamily& family() const { return family_; }
  const CrossedIntervalGroup& base() const { return *base_; }
  std::size_t normal_order(int n) const { return normal_orders_.at(static_cast<std::size_t>(n)); }
  std::uint64_t rep(int n, element_type x) const { return reps(n).at(x); }
  element_type coset_of(int n, std::uint64_t base_element) const {
    check_degree(n);
    return coset_[static_cast<std::size_t>(n)].at(base_element);
  }

 private:
  void check_degree(int n) const {
    if (n < 0 || n > bound_) {
      throw std::out_of_range(name_ + ": degree " + std::to_string(n) + " above the quotient bound " +
                              std::to_string(bound_));
    }
  }
  const std::vector<std::uint64_t>& reps(int n) const {
    check_degree(n);
    return reps_[static_cast<std::size_t>(n)];
  }

  Report check_well_defined() const {
    Report report("quotient-well-defined:" + name_, bound_);
    const detail::HomTable homs(bound_);
    for (int n = 0; n <= bound_; ++n) {
      for (std::uint64_t a = 0; a < base_->order(n); ++a) {
        const auto r = rep(n, coset_of(n, a));
        if (r == a) continue;
        ++report.checked;
        if (!(base_->to_weyl(n, a) == base_->to_weyl(n, r))) {
          report.add("quotient-structure-map", {n}, {base_->describe(n, a), base_->describe(n, r)});
        }
        for (int m = 0; m <= bound_; ++m) {
          for (const auto& phi : homs(m, n)) {
            ++report.checked;
            if (coset_of(m, base_->restrict(phi, a)) != coset_of(m, base_->restrict(phi, r))) {
              report.add("quotient-restriction", {m, n}, {"phi=" + phi.to_string(), base_->describe(n, a)});
            }
            if (!(base_->action(phi, a) == base_->action(phi, r))) {
              report.add("quotient-action", {m, n}, {"phi=" + phi.to_string(), base_->describe(n, a)});
            }
          }
        }
      }
    }
    return report;
  }

  CrossedPtr base_;
  SubgroupFamily family_;
  std::string name_;
  int bound_;
  std::vector<std::vector<std::uint64_t>> coset_;
  std::vector<std::vector<std::uint64_t>> reps_;
  std::vector<std::size_t> normal_orders_;
};

using QuotientPtr = std::shared_ptr<const QuotientCrossed>;

/// G / K(G) at degrees <= maxdeg.
inline QuotientPtr operadify(CrossedPtr g, int maxdeg) {
  const auto fam = K_family(*g, maxdeg);
  const std::string name = "operadify(" + g->name() + ")";
  return std::make_shared<const QuotientCrossed>(std::move(g), fam, name);
}

/// G / L(G) at degrees <= maxdeg; G must lie over S.
inline QuotientPtr tame_quotient(CrossedPtr g, int maxdeg) {
  const auto fam = L_family(*g, maxdeg);
  const std::string name = "tame(" + g->name() + ")";
  return std::make_shared<const QuotientCrossed>(std::move(g), fam, name);
}

/// Index-for-index equality of two crossed interval groups at degrees <= bound.
inline bool same_crossed_group(const CrossedIntervalGroup& a, const CrossedIntervalGroup& b, int bound) {
  const detail::HomTable homs(bound);
  for (int n = 0; n <= bound; ++n) {
    if (a.order(n) != b.order(n)) return false;
    for (std::uint64_t x = 0; x < a.order(n); ++x) {
      if (!(a.to_weyl(n, x) == b.to_weyl(n, x))) return false;
      for (std::uint64_t y = 0; y < a.order(n); ++y) {
        if (a.mul(n, x, y) != b.mul(n, x, y)) return false;
      }
      for (int m = 0; m <= bound; ++m) {
        for (const auto& phi : homs(m, n)) {
          if (a.restrict(phi, x) != b.restrict(phi, x)) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace crossed
