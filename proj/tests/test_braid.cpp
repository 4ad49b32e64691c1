#include <gtest/gtest.h>

#include <random>

#include <crossed/braid.hpp>

using namespace crossed;

TEST(Braid, ArtinRelations) {
  EXPECT_TRUE(braid_equal(BraidWord(3, {1, 2, 1}), BraidWord(3, {2, 1, 2})));
  EXPECT_TRUE(braid_equal(BraidWord(4, {1, 3}), BraidWord(4, {3, 1})));
  EXPECT_FALSE(braid_equal(BraidWord(3, {1, 2}), BraidWord(3, {2, 1})));
  EXPECT_TRUE(braid_equal(BraidWord(3, {1, -1, 2, -2}), BraidWord::identity(3)));
  EXPECT_FALSE(braid_equal(BraidWord(2, {1, 1}), BraidWord::identity(2)));
  EXPECT_THROW(braid_equal(BraidWord(2, {}), BraidWord(3, {})), std::invalid_argument);
}

TEST(Braid, ArtinActionOfGeneratorIsAnAutomorphismMovingTwoLetters) {
  const auto images = artin_action(BraidWord(3, {1}));
  ASSERT_EQ(images.size(), 3u);
  EXPECT_EQ(images[2], FreeWord::generator(3));
  EXPECT_NE(images[0], FreeWord::generator(1));
  const auto back = artin_action(BraidWord(3, {1, -1}));
  for (int i = 0; i < 3; ++i) EXPECT_EQ(back[static_cast<std::size_t>(i)], FreeWord::generator(i + 1));
}

TEST(Braid, FreeWordReduction) {
  FreeWord w({1, 2, -2, -1, 3});
  EXPECT_EQ(w, FreeWord({3}));
  EXPECT_EQ(FreeWord({1, 2}).inverse(), FreeWord({-2, -1}));
  EXPECT_EQ(FreeWord().to_string(), "1");
  EXPECT_EQ(FreeWord({1, -2}).to_string(), "x1 x2^-1");
}

TEST(Braid, PermutationProjection) {
  EXPECT_EQ(braid_to_perm(BraidWord(3, {1})), Permutation({2, 1, 3}));
  EXPECT_TRUE(is_pure_braid(BraidWord(2, {1, 1})));
  EXPECT_FALSE(is_pure_braid(BraidWord(2, {1})));
  std::mt19937_64 rng(17);
  const BraidOperad b;
  for (int s = 0; s < 300; ++s) {
    const int n = std::uniform_int_distribution<int>(0, 4)(rng);
    const BraidWord x = b.sample(n, rng, 4), y = b.sample(n, rng, 4);
    EXPECT_EQ(braid_to_perm(braid_mul(x, y)), compose(braid_to_perm(x), braid_to_perm(y)));
    EXPECT_TRUE(braid_equal(braid_mul(x, braid_inverse(x)), BraidWord::identity(n)));
  }
}

TEST(Braid, GammaProjectsToSymmetricGamma) {
  std::mt19937_64 rng(3);
  const BraidOperad b;
  for (int s = 0; s < 400; ++s) {
    const int n = std::uniform_int_distribution<int>(0, 3)(rng);
    const BraidWord x = b.sample(n, rng, 3);
    std::vector<BraidWord> xs;
    std::vector<Permutation> ps;
    for (int i = 0; i < n; ++i) {
      xs.push_back(b.sample(std::uniform_int_distribution<int>(0, 3)(rng), rng, 3));
      ps.push_back(braid_to_perm(xs.back()));
    }
    EXPECT_EQ(braid_to_perm(braid_gamma(x, xs)), gamma_sym(braid_to_perm(x), ps));
  }
}

TEST(Braid, CablingAndUnits) {
  const BraidWord x(2, {1});
  EXPECT_TRUE(braid_equal(braid_gamma(x, {BraidWord::identity(1), BraidWord::identity(1)}), x));
  EXPECT_TRUE(braid_equal(braid_gamma(BraidWord::identity(1), {x}), x));
  const BraidWord cabled = braid_cable(x, {2, 1});
  EXPECT_EQ(cabled.strands, 3);
  EXPECT_EQ(braid_to_perm(cabled), Permutation({2, 3, 1}));
}

TEST(Braid, ParsingAndValidation) {
  EXPECT_EQ(parse_braid_word(3, "1 -2 1"), BraidWord(3, {1, -2, 1}));
  EXPECT_THROW(parse_braid_word(3, "1 x"), std::runtime_error);
  EXPECT_THROW(BraidWord(2, {2}), std::invalid_argument);
  EXPECT_THROW(BraidWord(2, {0}), std::invalid_argument);
  EXPECT_EQ(BraidWord(3, {1, -2}).to_string(), "B3[1 -2]");
}
