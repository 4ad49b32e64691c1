#include <gtest/gtest.h>

#include <crossed/braid.hpp>
#include <crossed/operad.hpp>

using namespace crossed;

namespace {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return r;
}

}  // namespace

TEST(Operad, ArityVectorEnumerationCounts) {
  for (int n = 0; n <= 4; ++n) {
    std::size_t all = 0, bounded = 0;
    detail::for_each_arity_vector(n, 3, [&](const std::vector<int>& ks) {
      EXPECT_EQ(ks.size(), static_cast<std::size_t>(n));
      for (int k : ks) EXPECT_LE(k, 3);
      ++all;
    });
    std::uint64_t expected = 1;
    for (int i = 0; i < n; ++i) expected *= 4;
    EXPECT_EQ(all, expected);
    detail::for_each_bounded_arity_vector(n, 3, [&](const std::vector<int>& ks) {
      int sum = 0;
      for (int k : ks) sum += k;
      EXPECT_LE(sum, 3);
      ++bounded;
    });
    EXPECT_EQ(bounded, binomial(n + 3, n));
  }
}

TEST(Operad, SymAndTrivialAreGroupOperads) {
  const Report s = verify_group_operad(sym_operad(), 3, 3);
  EXPECT_TRUE(s.passed()) << s.to_text();
  EXPECT_GT(s.checked, 1000000u);
  const Report t = verify_group_operad(trivial_operad(), 3, 3);
  EXPECT_TRUE(t.passed()) << t.to_text();
  EXPECT_TRUE(unit_structure_checks(sym_operad(), 3).passed());
  EXPECT_TRUE(unit_structure_checks(trivial_operad(), 3).passed());
}

TEST(Operad, SymOperadLaws) {
  const Report r = verify_operad_laws(sym_operad(), 3, 2);
  EXPECT_TRUE(r.passed()) << r.to_text();
  EXPECT_TRUE(verify_operad_laws_total(sym_operad(), 4).passed());
}

TEST(Operad, BraidSampledLaws) {
  const Report g = verify_group_operad_sampled(braid_operad(), 3, 3, 200, 7, 3);
  EXPECT_TRUE(g.passed()) << g.to_text();
  EXPECT_EQ(g.mode, "sampled");
  EXPECT_GE(g.checked, 200u);
  EXPECT_TRUE(unit_structure_checks_sampled(braid_operad(), 3, 50, 7, 3).passed());
  EXPECT_TRUE(verify_operad_laws_sampled(braid_operad(), 2, 2, 300, 5, 2).passed());
}

TEST(Operad, CorruptedGammaIsDetected) {
  const CorruptedOperad<SymOperad> bad(
      sym_operad(), [](const Permutation& x, const std::vector<Permutation>& xs) -> std::optional<Permutation> {
        if (x == Permutation({2, 1}) && xs.size() == 2 && xs[0].degree() == 1 && xs[1].degree() == 1) {
          return Permutation::identity(2);
        }
        return std::nullopt;
      });
  const Report r = verify_group_operad(bad, 3, 2);
  EXPECT_FALSE(r.passed());
  ASSERT_FALSE(r.violations.empty());
  EXPECT_FALSE(r.violations.front().witnesses.empty());
}

TEST(Operad, SemidirectProductAndMultiplicationMap) {
  const auto ss = semidirect(sym_operad(), sym_operad());
  EXPECT_TRUE(verify_operad_laws(ss, 2, 2).passed());
  const Report m = check_operad_map(ss, sym_operad(), [](const auto& p) { return compose(p.x, p.y); }, 3, 2, "mul");
  EXPECT_TRUE(m.passed()) << m.to_text();
  const Report bad = check_operad_map(ss, sym_operad(), [](const auto& p) { return compose(p.y, p.x); }, 3, 2, "swapped");
  EXPECT_FALSE(bad.passed());
}

TEST(Operad, TrivialOperadGammaForgetsInputs) {
  const auto t = trivial_operad();
  const auto g = t.gamma(t.unit(2), {t.unit(3), t.unit(0)});
  EXPECT_EQ(t.arity(g), 3);
  EXPECT_TRUE(t.to_sym(g).is_identity());
}
