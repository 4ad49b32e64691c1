#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include <crossed/crossed_ops.hpp>

using namespace crossed;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
  std::ostringstream os;
  os.precision(2);
  os << std::fixed << s << " s";
  return os.str();
}

std::string first_witness(const Report& r) {
  if (r.violations.empty()) return "none";
  std::string s = r.violations.front().law + ":";
  for (const auto& w : r.violations.front().witnesses) s += " " + w;
  return s;
}

int exit_code_of(const std::string& args) {
  const std::string cmd = std::string(CROSSED_OPS_BINARY) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::vector<CrossedPtr> groups{symmetric(), hyperoctahedral(), weyl(), constant(symmetric_group(3), "constant(S3)"),
                                       constant(cyclic_group(2), "constant(Z2)")};
  Outcome o;
  std::size_t checks = 0, violations = 0;
  for (const auto& g : groups) {
    const Report r = verify_crossed_axioms(*g, 3);
    checks += r.checked;
    violations += r.total_violations;
    if (!r.passed() || r.mode != "exhaustive") o.pass = false;
  }
  const double s = seconds_since(t0);
  if (s > 60) o.pass = false;
  o.detail = "5 groups, degrees <= 3, " + std::to_string(checks) + " checks, " + std::to_string(violations) +
             " violations, " + fmt_seconds(s);
  return o;
}

Outcome criterion2() {
  Outcome o;
  std::size_t checks = 0;
  const auto take = [&](const Report& r) {
    checks += r.checked;
    if (!r.passed()) {
      o.pass = false;
      o.detail += " [" + r.subject + " " + first_witness(r) + "]";
    }
  };
  take(verify_group_operad(sym_operad(), 3, 3));
  take(unit_structure_checks(sym_operad(), 3));
  take(verify_group_operad(trivial_operad(), 3, 3));
  take(unit_structure_checks(trivial_operad(), 3));
  const Report braid = verify_group_operad_sampled(braid_operad(), 3, 3, 200, 7, 3);
  take(braid);
  take(unit_structure_checks_sampled(braid_operad(), 3, 200, 7, 3));
  if (braid.checked < 200) o.pass = false;
  o.detail = "sym, trivial exhaustive at arity <= 3; braid 200 seeded samples; " + std::to_string(checks) + " checks" + o.detail;
  return o;
}

Outcome criterion3() {
  const Report r = check_strict_monoidality(sym_operad(), sym_operad(), 3);
  return {r.passed(), std::to_string(r.checked) + " comparisons at degrees <= 3, " + std::to_string(r.total_violations) +
                          " mismatches"};
}

Outcome criterion4() {
  Outcome o;
  const auto ix = indexed(psi_crossed(sym_operad()), 3);
  const auto s = symmetric();
  const detail::HomTable homs(3);
  std::size_t compared = 0, bad = 0;
  for (int n = 0; n <= 3; ++n) {
    if (ix->order(n) != s->order(n)) ++bad;
    for (std::uint64_t a = 0; a < ix->order(n); ++a) {
      ++compared;
      if (!(ix->to_weyl(n, a) == s->to_weyl(n, a))) ++bad;
      for (int m = 0; m <= 3; ++m) {
        for (const auto& phi : homs(m, n)) {
          ++compared;
          if (ix->restrict(phi, a) != s->restrict(phi, a) || !(ix->action(phi, a) == s->action(phi, a))) ++bad;
        }
      }
    }
  }
  const auto os = operad_from_crossed(symmetric(), 3);
  std::size_t gammas = 0, bad_gamma = 0;
  for (std::size_t n = 0; n <= 3; ++n) {
    detail::for_each_arity_vector(static_cast<int>(n), 3, [&](const std::vector<int>& ks) {
      std::vector<std::vector<Permutation>> pools;
      for (int k : ks) pools.push_back(all_permutations(static_cast<std::size_t>(k)));
      std::vector<const std::vector<Permutation>*> ptrs;
      for (const auto& p : pools) ptrs.push_back(&p);
      for (const auto& x : all_permutations(n)) {
        detail::for_each_tuple<Permutation>(ptrs, [&](const std::vector<Permutation>& xs) {
          std::vector<OperadicElement> ys;
          for (const auto& y : xs) ys.push_back({static_cast<int>(y.degree()), rank(y)});
          const OperadicElement g = os.gamma({static_cast<int>(n), rank(x)}, ys);
          ++gammas;
          if (!(os.to_sym(g) == gamma_sym(x, xs))) ++bad_gamma;
        });
      }
    });
  }
  for (int n = 0; n <= 3; ++n) {
    if (!(os.to_sym(os.unit(n)) == Permutation::identity(static_cast<std::size_t>(n)))) ++bad_gamma;
  }
  o.pass = bad == 0 && bad_gamma == 0;
  o.detail = "psi(sym) vs symmetric: " + std::to_string(compared) + " comparisons, " + std::to_string(bad) +
             " mismatches; O(symmetric) vs sym gamma: " + std::to_string(gammas) + " compositions, " +
             std::to_string(bad_gamma) + " mismatches";
  return o;
}

Outcome criterion5() {
  Outcome o;
  const Report h = is_operadic(*hyperoctahedral(), 3);
  const auto c = constant(symmetric_group(3), "constant(S3)");
  const Report c_op = is_operadic(*c, 3);
  const Report c_tame = is_tame(*c, 3);
  const bool witnesses = !c_op.violations.empty() && !c_op.violations.front().witnesses.empty() &&
                         !c_tame.violations.empty() && !c_tame.violations.front().witnesses.empty();
  o.pass = h.passed() && !c_op.passed() && !c_tame.passed() && witnesses;
  o.detail = "H operadic: " + std::string(h.passed() ? "yes" : "no") + "; constant(S3) operadic witness {" +
             first_witness(c_op) + "}, tame witness {" + first_witness(c_tame) + "}";
  const std::vector<CrossedPtr> candidates{symmetric(),
                                           hyperoctahedral(),
                                           weyl(),
                                           refl(),
                                           c,
                                           constant(cyclic_group(2), "constant(Z2)"),
                                           constant(cyclic_group(3), "constant(Z3)"),
                                           constant(trivial_group(), "trivial")};
  std::size_t accepted = 0;
  for (const auto& g : candidates) {
    const bool over_sym = !not_over_sym_witness(*g, 3).has_value();
    const bool expected = is_operadic(*g, 3).passed() && over_sym && is_tame(*g, 3).passed();    bool succeeded = false;
    try {
      const auto op = group_operad_from_crossed(g, 3);
      succeeded = true;
      ++accepted;
      if (!verify_group_operad(op, 3, 3).passed() || !unit_structure_checks(op, 3).passed()) {
        o.pass = false;
        o.detail += "; " + g->name() + " output fails group-operad laws";
      }
    } catch (const PreconditionError&) {
    }
    if (succeeded != expected) {
      o.pass = false;
      o.detail += "; " + g->name() + " construction " + (succeeded ? "succeeded" : "refused") + " unexpectedly";
    }
  }
  o.detail += "; group_operad_from_crossed accepted " + std::to_string(accepted) + " of " +
              std::to_string(candidates.size()) + " candidates as predicted";
  return o;
}

Outcome criterion6() {
  Outcome o;
  const auto c = constant(symmetric_group(3), "constant(S3)");
  const auto k = K_family(*c, 3);
  const auto q = operadify(c, 3);
  std::string orders;
  for (int n = 0; n <= 3; ++n) {
    if (k.order(n) != 3 || q->order(n) != 2) o.pass = false;
    orders += (n ? "," : "") + std::to_string(k.order(n)) + "/" + std::to_string(q->order(n));
  }
  const bool kh = K_family(*hyperoctahedral(), 3).trivial();
  const bool ls = L_family(*symmetric(), 3).trivial();
  const auto t = tame_quotient(c, 3);
  const auto oh = operadify(hyperoctahedral(), 3);
  const bool axioms = verify_crossed_axioms(*q, 3).passed() && verify_crossed_axioms(*t, 3).passed() &&
                      verify_crossed_axioms(*oh, 3).passed();
  o.pass = o.pass && kh && ls && axioms;
  o.detail = "|K(constant(S3))_n|/|operadify_n| = " + orders + "; K(H) trivial: " + (kh ? "yes" : "no") +
             "; L(sym) trivial: " + (ls ? "yes" : "no") + "; quotients pass axioms: " + (axioms ? "yes" : "no");
  return o;
}

Outcome criterion7() {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  struct Case {
    std::string name;
    Algebra a;
    int top;
  };
  const std::vector<Case> cases{{"Q", ground_field(), 4}, {"Q[x]/(x^2)", dual_numbers(), 5}, {"M2(Q)", matrix_algebra(2), 4}};
  std::vector<std::vector<std::size_t>> dims;
  for (const auto& cs : cases) {
    const ChainComplex c = hochschild_complex(cs.a, cs.top);
    for (int n = 1; n <= std::min(cs.top, 4); ++n) {
      if (!(c.boundary(n) == classical_hochschild_boundary(cs.a, n))) {
        o.pass = false;
        o.detail += " [" + cs.name + " boundary " + std::to_string(n) + " differs]";
      }
    }
    const Report sq = check_complex(c);
    if (!sq.passed()) {
      o.pass = false;
      o.detail += " [" + cs.name + " " + first_witness(sq) + "]";
      dims.push_back({});
    } else {
      dims.push_back(homology_dims(c));
    }
  }
  const std::vector<std::size_t> field{1, 0, 0, 0}, dual{2, 1, 1, 1, 1}, m2{1, 0, 0, 0};
  if (dims[0] != field || dims[1] != dual || dims[2] != m2) o.pass = false;
  const double s = seconds_since(t0);
  if (s > 120) o.pass = false;
  const auto show = [](const std::vector<std::size_t>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
    return out;
  };
  o.detail = "boundaries equal the classical formula up to degree 4, dd = 0; HH(Q) = " + show(dims[0]) +
             ", HH(dual numbers) = " + show(dims[1]) + ", HH(M2) = " + show(dims[2]) + ", " + fmt_seconds(s) + o.detail;
  return o;
}

Outcome criterion8() {
  std::size_t pairs = 0, bad = 0;
  for (int l = 0; l <= 2; ++l) {
    for (int m = 0; m <= 2; ++m) {
      for (int n = 0; n <= 2; ++n) {
        for (const auto& g : paracyclic_enumerate(l, m)) {
          for (const auto& f : paracyclic_enumerate(m, n)) {
            ++pairs;
            if (!(paracyclic_dual(paracyclic_compose(f, g)) == paracyclic_compose(paracyclic_dual(g), paracyclic_dual(f)))) ++bad;
          }
        }
      }
    }
  }
  std::size_t maps = 0, bad_fibers = 0;
  for (int m = 0; m <= 3; ++m) {
    for (int n = 0; n <= 3; ++n) {
      for (const auto& phi : simplicial_maps(m, n)) {
        ++maps;
        if (!dual_pair_matches_dual(phi, n)) ++bad_fibers;
      }
    }
  }
  return {bad == 0 && bad_fibers == 0, std::to_string(pairs) + " composable pairs, " + std::to_string(bad) +
                                           " functoriality failures; " + std::to_string(maps) + " simplicial maps, " +
                                           std::to_string(bad_fibers) + " fiber mismatches"};
}

Outcome criterion9() {
  const auto ss = enumerate_crossed_maps(*symmetric(), *symmetric(), 3);
  const auto sw = enumerate_crossed_maps(*symmetric(), *weyl(), 3);
  return {ss.families.size() == 1 && sw.families.size() == 1,
          "sym->sym: " + std::to_string(ss.families.size()) + ", sym->weyl: " + std::to_string(sw.families.size()) + " (" +
              sw.label() + ")"};
}

Outcome criterion10() {
  Outcome o;
  const Report r = inert_trivial_action(*refl(), 3);
  const bool refl_fails = !r.passed() && !r.violations.empty() && !r.violations.front().witnesses.empty();
  const auto bad = std::make_shared<CorruptedMultiplication>(symmetric(), 2, 1, 1, 1);
  const Report c = verify_crossed_axioms(*bad, 3);
  const bool corrupted_fails = !c.passed() && !c.violations.empty() && !c.violations.front().witnesses.empty();
  const int pass_code = exit_code_of("verify --structure sym --max-degree 2");
  const int fail_code = exit_code_of("verify --structure refl --check inert-action --max-degree 2");
  const int usage_code = exit_code_of("verify --structure no-such-structure");
  const int io_code = exit_code_of("hochschild --algebra /no/such/file.alg");
  o.pass = refl_fails && corrupted_fails && pass_code == 0 && fail_code == 1 && usage_code == 2 && io_code == 2;
  o.detail = "refl {" + first_witness(r) + "}; corrupted {" + first_witness(c) + "}; exit codes " +
             std::to_string(pass_code) + "/" + std::to_string(fail_code) + "/" + std::to_string(usage_code) + "/" +
             std::to_string(io_code);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                       criterion6, criterion7, criterion8, criterion9, criterion10};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::cout << "criterion " << (i + 1) << ": " << (o.pass ? "pass" : "fail") << " (" << o.detail << "; "
              << fmt_seconds(seconds_since(t0)) << ")" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
