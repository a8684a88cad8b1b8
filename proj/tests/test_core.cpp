#include <algorithm>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include <sciprofile/core.hpp>
#include <sciprofile/fixtures.hpp>

#include "helpers.hpp"

using namespace sciprofile;
using testing_helpers::matrix_of;

TEST(Scheme, Sizes) {
  EXPECT_EQ(scopus27().size(), 27u);
  EXPECT_EQ(esi22().size(), 22u);
  EXPECT_EQ(scopus27().name, "scopus27");
  EXPECT_EQ(esi22().name, "esi22");
}

TEST(Scheme, AreasUniqueAfterNormalization) {
  for (const auto& s : {scopus27(), esi22()}) {
    std::set<std::string> keys;
    for (const auto& a : s.areas) keys.insert(normalize_key(a));
    EXPECT_EQ(keys.size(), s.areas.size()) << s.name;
  }
}

TEST(Scheme, CustomRejectsDuplicates) {
  EXPECT_THROW(custom_scheme({"Physics", "physics "}), Error);
}

TEST(Validate, AnnexBFactor3HasNoErrors) {
  const auto rep = validate_profile(load_fixture_as<ProfileMatrix>("annexB_f3"));
  EXPECT_TRUE(rep.errors.empty());
  EXPECT_TRUE(rep.accepted());
}

TEST(Validate, NegativeShareIsOneError) {
  auto m = matrix_of({{-1.0, 50.0, 51.0}});
  const auto rep = validate_profile(m);
  EXPECT_EQ(rep.errors.size(), 1u);
  EXPECT_FALSE(rep.accepted());
}

TEST(Validate, RowSumOf300IsOneWarning) {
  auto m = matrix_of({{100.0, 100.0, 100.0}});
  const auto rep = validate_profile(m);
  EXPECT_EQ(rep.errors.size(), 0u);
  EXPECT_EQ(rep.warnings.size(), 1u);
}

TEST(Validate, StructuralErrors) {
  auto m = matrix_of({{30.0, 30.0, 40.0}, {30.0, 30.0, 40.0}});
  m.rows[1].iso2 = m.rows[0].iso2;
  EXPECT_EQ(validate_profile(m).errors.size(), 1u);

  m = matrix_of({{30.0, 30.0, 40.0}});
  m.rows[0].iso2 = "usa";
  EXPECT_EQ(validate_profile(m).errors.size(), 1u);

  m = matrix_of({{30.0, 30.0, 40.0}});
  m.rows[0].shares.pop_back();
  EXPECT_EQ(validate_profile(m).errors.size(), 1u);

  m = matrix_of({{30.0, 30.0, 140.0}});
  EXPECT_FALSE(validate_profile(m).accepted());
}

TEST(Validate, UnclassifiedWarning) {
  auto m = matrix_of({{30.0, 30.0, 40.0}});
  m.rows[0].unclassified = 80.0;
  const auto rep = validate_profile(m);
  EXPECT_TRUE(rep.accepted());
  EXPECT_EQ(rep.warnings.size(), 1u);
}

TEST(Validate, Idempotent) {
  const auto m = annex_b_countries();
  const auto a = validate_profile(m);
  const auto b = validate_profile(m);
  ASSERT_EQ(a.errors.size(), b.errors.size());
  ASSERT_EQ(a.warnings.size(), b.warnings.size());
  for (std::size_t i = 0; i < a.warnings.size(); ++i) {
    EXPECT_EQ(a.warnings[i].row, b.warnings[i].row);
    EXPECT_EQ(a.warnings[i].message, b.warnings[i].message);
  }
}

TEST(WorldProfile, TableOneMedicine) {
  const auto t1 = load_fixture_as<ProfileMatrix>("table1_world");
  const auto idx = t1.scheme.index_of("Medicine");
  ASSERT_TRUE(idx);
  EXPECT_DOUBLE_EQ(world_profile(t1).shares[*idx], 28.6);
}

TEST(WorldProfile, OneRowIsItself) {
  auto m = matrix_of({{10.0, 20.0, 70.0}});
  const auto w = world_profile(m);
  EXPECT_EQ(w.iso2, "WD");
  EXPECT_EQ(w.shares, m.rows[0].shares);
}

TEST(WorldProfile, UniformMean) {
  auto m = matrix_of({{10.0, 50.0, 40.0}, {30.0, 30.0, 40.0}});
  EXPECT_DOUBLE_EQ(world_profile(m).shares[0], 20.0);
}

TEST(WorldProfile, Weighted) {
  auto m = matrix_of({{10.0, 50.0, 40.0}, {30.0, 30.0, 40.0}});
  const std::vector<double> w{3.0, 1.0};
  EXPECT_DOUBLE_EQ(world_profile(m, w).shares[0], 15.0);
}

TEST(WorldProfile, Errors) {
  EXPECT_THROW(world_profile(ProfileMatrix{}), Error);
  auto m = matrix_of({{10.0, 50.0, 40.0}, {30.0, 30.0, 40.0}});
  const std::vector<double> zeros{0.0, 0.0};
  EXPECT_THROW(world_profile(m, zeros), Error);
  const std::vector<double> short_w{1.0};
  EXPECT_THROW(world_profile(m, short_w), Error);
}

TEST(WorldProfile, PermutationInvariant) {
  auto m = annex_b_countries();
  const auto base = world_profile(m);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::shuffle(m.rows.begin(), m.rows.end(), rng);
    const auto w = world_profile(m);
    for (std::size_t a = 0; a < w.shares.size(); ++a) {
      if (is_missing(base.shares[a])) EXPECT_TRUE(is_missing(w.shares[a]));
      else EXPECT_EQ(w.shares[a], base.shares[a]);
    }
  }
}

TEST(Specialization, PhilippinesAgriculture) {
  const auto f3 = load_fixture_as<ProfileMatrix>("annexB_f3");
  const auto* ph = f3.find("PH");
  const auto* wd = f3.find("WD");
  ASSERT_TRUE(ph && wd);
  const auto idx = *f3.scheme.index_of("Agricultural and Biological Sciences");
  const auto r = specialization_index(*ph, *wd);
  ASSERT_TRUE(r[idx]);
  EXPECT_NEAR(*r[idx], 4.5, 1e-9);
}

TEST(Specialization, WorldAgainstItselfIsOnes) {
  const auto w = load_fixture_as<ProfileMatrix>("table1_world").rows.front();
  for (const auto& v : specialization_index(w, w)) {
    ASSERT_TRUE(v);
    EXPECT_EQ(*v, 1.0);
  }
}

TEST(Specialization, ZeroWorldShareIsUndefined) {
  auto m = matrix_of({{10.0, 50.0, 40.0}});
  auto world = m.rows[0];
  world.shares[1] = 0.0;
  const auto r = specialization_index(m.rows[0], world);
  EXPECT_TRUE(r[0]);
  EXPECT_FALSE(r[1]);
}

TEST(Specialization, LengthMismatchThrows) {
  auto a = matrix_of({{10.0, 50.0, 40.0}}).rows[0];
  auto b = matrix_of({{10.0, 90.0}}).rows[0];
  EXPECT_THROW(specialization_index(a, b), Error);
}
