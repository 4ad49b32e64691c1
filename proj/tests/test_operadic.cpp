#include <gtest/gtest.h>

#include <crossed/operadic.hpp>

using namespace crossed;

namespace {

CrossedPtr constant_s3() { return constant(symmetric_group(3), "constant(S3)"); }
CrossedPtr constant_z2() { return constant(cyclic_group(2), "constant(Z2)"); }

std::string joined(const Violation& v) {
  std::string s;
  for (const auto& w : v.witnesses) s += w + " ";
  return s;
}

}  // namespace

TEST(Operadic, Characterization) {
  EXPECT_TRUE(is_operadic(*hyperoctahedral(), 3).passed());
  EXPECT_TRUE(is_operadic(*symmetric(), 3).passed());
  EXPECT_TRUE(is_operadic(*constant_z2(), 3).passed());
  const Report c = is_operadic(*constant_s3(), 3);
  ASSERT_FALSE(c.passed());
  EXPECT_EQ(c.violations.front().law, "dissociated-commute");
  EXPECT_EQ(joined(c.violations.front()), "rho1=<<0>>-><<0>>(0,0) rho2=<<0>>-><<0>>(0,0) x1=g1@0 x2=g2@0 ");
  const Report r = is_operadic(*refl(), 2);
  ASSERT_FALSE(r.passed());
  EXPECT_EQ(r.violations.front().law, "inert-action");
}

TEST(Operadic, Tameness) {
  EXPECT_TRUE(is_tame(*symmetric(), 3).passed());
  EXPECT_TRUE(is_tame(*constant_z2(), 3).passed());
  const Report c = is_tame(*constant_s3(), 3);
  ASSERT_FALSE(c.passed());
  EXPECT_EQ(c.violations.front().law, "tame");
  EXPECT_FALSE(c.violations.front().witnesses.empty());
  EXPECT_THROW(is_tame(*hyperoctahedral(), 2), NotOverSymError);
}

TEST(Operadic, OperadFromCrossedRefusesNonOperadic) {
  try {
    operad_from_crossed(constant_s3(), 2);
    FAIL() << "accepted constant(S3)";
  } catch (const NotOperadicError& e) {
    EXPECT_NE(std::string(e.what()).find("is not operadic (dissociated-commute)"), std::string::npos) << e.what();
  }
}

TEST(Operadic, GroupOperadFromCrossedPreconditions) {
  const auto expect_refusal = [](CrossedPtr g, const std::string& reason) {
    try {
      group_operad_from_crossed(std::move(g), 2);
      ADD_FAILURE() << "accepted";
    } catch (const PreconditionError& e) {
      EXPECT_NE(std::string(e.what()).find(reason), std::string::npos) << e.what();
    }
  };
  expect_refusal(refl(), "not operadic (inert-action)");
  expect_refusal(constant_s3(), "not operadic");
  expect_refusal(hyperoctahedral(), "not over S");
  EXPECT_NO_THROW(group_operad_from_crossed(symmetric(), 2));
  EXPECT_NO_THROW(group_operad_from_crossed(constant_z2(), 2));
}

TEST(Operadic, SymmetricRoundTrip) {
  const auto os = group_operad_from_crossed(symmetric(), 3);
  const Report laws = verify_group_operad(os, 3, 3);
  EXPECT_TRUE(laws.passed()) << laws.to_text();
  EXPECT_TRUE(unit_structure_checks(os, 3).passed());
  EXPECT_TRUE(check_round_trip(os, 3).passed());
  const Report map = check_operad_map(
      os, sym_operad(), [&](const OperadicElement& x) { return os.to_sym(x); }, 3, 3, "O(sym)->sym");
  EXPECT_TRUE(map.passed()) << map.to_text();
  for (int n = 0; n <= 3; ++n) {
    for (const auto& x : os.elements_at(n)) EXPECT_EQ(rank(os.to_sym(x)), x.idx);
  }
}

TEST(Operadic, ConstantZ2GroupOperad) {
  const auto oz = group_operad_from_crossed(constant_z2(), 3);
  EXPECT_TRUE(verify_group_operad(oz, 3, 3).passed());
  EXPECT_TRUE(unit_structure_checks(oz, 3).passed());
  EXPECT_EQ(oz.gamma({2, 1}, {{1, 1}, {0, 0}}), (OperadicElement{1, 0}));
  EXPECT_EQ(oz.gamma({2, 1}, {{1, 0}, {0, 0}}), (OperadicElement{1, 1}));
}

TEST(Operadic, HyperoctahedralOperadWithoutGroupStructure) {
  const auto oh = operad_from_crossed(hyperoctahedral(), 3);
  EXPECT_TRUE(verify_operad_laws_total(oh, 2).passed());
  EXPECT_EQ(oh.gamma(oh.unit(2), {oh.unit(1), oh.unit(2)}), oh.unit(3));
  EXPECT_THROW(oh.to_sym({1, 1}), NotOverSymError);
}

TEST(Operadic, KFamilies) {
  const auto k = K_family(*constant_s3(), 3);
  for (int n = 0; n <= 3; ++n) {
    EXPECT_EQ(k.order(n), 3u);
    EXPECT_EQ(k.generator_counts[static_cast<std::size_t>(n)], 2u);
  }
  EXPECT_TRUE(k.generators_restriction_closed);
  EXPECT_TRUE(check_family(*constant_s3(), k).passed());
  EXPECT_TRUE(K_family(*hyperoctahedral(), 3).trivial());
  EXPECT_TRUE(K_family(*symmetric(), 3).trivial());
}

TEST(Operadic, LFamilies) {
  EXPECT_TRUE(L_family(*symmetric(), 3).trivial());
  EXPECT_TRUE(L_family(*constant_z2(), 3).trivial());
  const auto l = L_family(*constant_s3(), 3);
  for (int n = 0; n <= 3; ++n) EXPECT_EQ(l.order(n), 3u);
  EXPECT_THROW(L_family(*hyperoctahedral(), 2), NotOverSymError);
}

TEST(Operadic, Operadification) {
  const auto q = operadify(constant_s3(), 3);
  for (int n = 0; n <= 3; ++n) EXPECT_EQ(q->order(n), 2u);
  EXPECT_TRUE(is_operadic(*q, 3).passed());
  EXPECT_TRUE(verify_crossed_axioms(*q, 3).passed());
  EXPECT_TRUE(same_crossed_group(*q, *constant_z2(), 3));
  EXPECT_TRUE(same_crossed_group(*operadify(hyperoctahedral(), 3), *hyperoctahedral(), 3));
  EXPECT_EQ(q->name(), "operadify(constant(S3))");
}

TEST(Operadic, Taming) {
  const auto t = tame_quotient(constant_s3(), 3);
  EXPECT_TRUE(is_tame(*t, 3).passed());
  EXPECT_TRUE(verify_crossed_axioms(*t, 3).passed());
  EXPECT_TRUE(same_crossed_group(*t, *constant_z2(), 3));
  EXPECT_TRUE(same_crossed_group(*tame_quotient(symmetric(), 3), *symmetric(), 3));
  const auto a = operadify(tame_quotient(constant_s3(), 3), 3);
  const auto b = tame_quotient(operadify(constant_s3(), 3), 3);
  EXPECT_TRUE(same_crossed_group(*a, *b, 3));
  EXPECT_THROW(tame_quotient(hyperoctahedral(), 2), NotOverSymError);
}

TEST(Operadic, QuotientCosets) {
  const auto q = operadify(constant_s3(), 2);
  const FiniteGroup s3 = symmetric_group(3);
  for (int n = 0; n <= 2; ++n) {
    for (FiniteGroup::index a = 0; a < 6; ++a) {
      for (FiniteGroup::index b = 0; b < 6; ++b) {
        EXPECT_EQ(q->coset_of(n, s3.mul(a, b)), q->mul(n, q->coset_of(n, a), q->coset_of(n, b)));
      }
    }
  }
  EXPECT_THROW(q->order(3), std::out_of_range);
}

TEST(Operadic, SameCrossedGroupDistinguishes) {
  EXPECT_FALSE(same_crossed_group(*symmetric(), *hyperoctahedral(), 2));
  EXPECT_FALSE(same_crossed_group(*constant_s3(), *constant_z2(), 1));
  EXPECT_TRUE(same_crossed_group(*symmetric(), *symmetric(), 3));
}
