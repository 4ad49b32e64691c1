#include <gtest/gtest.h>

#include <sstream>

#include <crossed/finite_group.hpp>
#include <crossed/perm.hpp>

using namespace crossed;

TEST(FiniteGroup, BuiltinOrders) {
  EXPECT_EQ(trivial_group().order(), 1u);
  EXPECT_EQ(cyclic_group(5).order(), 5u);
  EXPECT_EQ(symmetric_group(4).order(), 24u);
  EXPECT_TRUE(cyclic_group(6).is_abelian());
  EXPECT_FALSE(symmetric_group(3).is_abelian());
}

TEST(FiniteGroup, SymmetricTableMatchesComposition) {
  const FiniteGroup g = symmetric_group(3);
  const auto perms = all_permutations(3);
  for (std::size_t a = 0; a < perms.size(); ++a) {
    for (std::size_t b = 0; b < perms.size(); ++b) {
      EXPECT_EQ(g.mul(static_cast<FiniteGroup::index>(a), static_cast<FiniteGroup::index>(b)), rank(compose(perms[a], perms[b])));
    }
  }
}

TEST(FiniteGroup, InversesAndUnit) {
  for (const FiniteGroup& g : {cyclic_group(4), symmetric_group(3), trivial_group()}) {
    for (FiniteGroup::index a = 0; a < g.order(); ++a) {
      EXPECT_EQ(g.mul(a, g.inv(a)), g.unit());
      EXPECT_EQ(g.mul(g.unit(), a), a);
    }
  }
}

TEST(FiniteGroup, RejectsNonGroups) {
  EXPECT_THROW(FiniteGroup(2, {0, 1, 1, 1}), std::invalid_argument);
  EXPECT_THROW(FiniteGroup(2, {1, 0, 0, 1}), std::invalid_argument);
  EXPECT_THROW(FiniteGroup(2, {0, 1}), std::invalid_argument);
}

TEST(FiniteGroup, GeneratedSubgroupsAndClosures) {
  const FiniteGroup s3 = symmetric_group(3);
  const auto transposition = static_cast<FiniteGroup::index>(rank(Permutation({2, 1, 3})));
  const auto sub = s3.generated({transposition});
  EXPECT_EQ(std::count(sub.begin(), sub.end(), true), 2);
  const auto normal = s3.normal_closure(sub);
  EXPECT_EQ(std::count(normal.begin(), normal.end(), true), 6);
  const auto three_cycle = static_cast<FiniteGroup::index>(rank(Permutation({2, 3, 1})));
  const auto a3 = s3.generated({three_cycle});
  EXPECT_EQ(std::count(a3.begin(), a3.end(), true), 3);
  EXPECT_EQ(s3.normal_closure(a3), a3);
  const auto gens = s3.generators();
  const auto all = s3.generated(gens);
  EXPECT_EQ(std::count(all.begin(), all.end(), true), 6);
}

TEST(FiniteGroup, TextRoundTrip) {
  for (const FiniteGroup& g : {cyclic_group(3), symmetric_group(3), trivial_group()}) {
    const std::string text = group_to_text(g);
    EXPECT_EQ(parse_group(text), g);
    std::ostringstream os;
    write_group(os, g);
    EXPECT_EQ(os.str(), text);
  }
}

TEST(FiniteGroup, ParseErrorsArePrefixed) {
  for (const std::string bad : {"", "order 2\n0 1\n", "order 2\n0 1\n1 1\n", "order x\n", "order 2\n0 1\n1 5\n"}) {
    try {
      parse_group(bad);
      ADD_FAILURE() << "accepted: " << bad;
    } catch (const std::exception& e) {
      EXPECT_EQ(std::string(e.what()).rfind("group file:", 0), 0u) << e.what();
    }
  }
}

TEST(FiniteGroup, Isomorphism) {
  EXPECT_TRUE(isomorphic(cyclic_group(2), symmetric_group(2)));
  EXPECT_FALSE(isomorphic(cyclic_group(6), symmetric_group(3)));
  EXPECT_TRUE(isomorphic(symmetric_group(3), parse_group(group_to_text(symmetric_group(3)))));
}

TEST(FiniteGroup, Homomorphisms) {
  const FiniteGroup s3 = symmetric_group(3), z2 = cyclic_group(2);
  std::vector<FiniteGroup::index> sign;
  for (const auto& p : all_permutations(3)) {
    int inversions = 0;
    for (int i = 1; i <= 3; ++i) {
      for (int j = i + 1; j <= 3; ++j) inversions += p(i) > p(j);
    }
    sign.push_back(static_cast<FiniteGroup::index>(inversions % 2));
  }
  EXPECT_TRUE(s3.is_homomorphism_to(z2, sign));
  std::vector<FiniteGroup::index> bad(6, 1);
  EXPECT_FALSE(s3.is_homomorphism_to(z2, bad));
  std::istringstream in("0 1 1 0 0 1");
  EXPECT_EQ(parse_hom(in, 6), (std::vector<FiniteGroup::index>{0, 1, 1, 0, 0, 1}));
}
