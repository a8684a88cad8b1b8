#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include <sciprofile/fixtures.hpp>
#include <sciprofile/report.hpp>

#include "helpers.hpp"

using namespace sciprofile;

namespace {

const LoadingTable& annex_a() {
  static const auto t = load_fixture_as<LoadingTable>("annexA_loadings");
  return t;
}

}  // namespace

TEST(Ranking, AnnexAExtremes) {
  const auto f3 = rank_by_factor(annex_a(), 2);
  EXPECT_EQ(f3.front().name, "Costa Rica");
  EXPECT_EQ(f3.front().loading, 0.96094);
  EXPECT_EQ(f3.back().name, "Algeria");
  EXPECT_EQ(f3.back().loading, 0.00098);
  const auto f2 = rank_by_factor(annex_a(), 1);
  EXPECT_EQ(f2.front().name, "Ukraine");
  EXPECT_EQ(f2.front().loading, 0.96722);
  EXPECT_THROW(rank_by_factor(annex_a(), 3), Error);
}

TEST(Ranking, PermutationAndOrder) {
  for (std::size_t f = 0; f < 3; ++f) {
    const auto r = rank_by_factor(annex_a(), f);
    ASSERT_EQ(r.size(), annex_a().rows.size());
    std::vector<std::string> a, b;
    for (const auto& e : r) a.push_back(e.iso2);
    for (const auto& e : annex_a().rows) b.push_back(e.iso2);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    EXPECT_EQ(a, b);
    for (std::size_t i = 1; i < r.size(); ++i) EXPECT_GE(r[i - 1].loading, r[i].loading);
  }
}

TEST(Ranking, TiesByIso) {
  LoadingTable t{{{"ZZ", "Z", {0.5}}, {"AA", "A", {0.5}}, {"MM", "M", {0.7}}}, 1};
  const auto r = rank_by_factor(t, 0);
  EXPECT_EQ(r[0].iso2, "MM");
  EXPECT_EQ(r[1].iso2, "AA");
  EXPECT_EQ(r[2].iso2, "ZZ");
}

TEST(Membership, AnnexACounts) {
  const auto f1 = membership(annex_a(), 0);
  ASSERT_EQ(f1.size(), 16u);
  EXPECT_EQ(f1.front().name, "Lebanon");
  EXPECT_EQ(f1.front().loading, 0.92467);
  EXPECT_EQ(f1.back().name, "Denmark");
  EXPECT_EQ(f1.back().loading, 0.80126);
  const auto f2 = membership(annex_a(), 1);
  ASSERT_EQ(f2.size(), 15u);
  EXPECT_EQ(f2.back().name, "Poland");
  const auto f3 = membership(annex_a(), 2);
  ASSERT_EQ(f3.size(), 11u);
  EXPECT_EQ(f3.front().name, "Costa Rica");
  EXPECT_EQ(f3.back().name, "South Africa");
  EXPECT_EQ(f3.back().loading, 0.80199);
}

TEST(Membership, ThresholdEdges) {
  EXPECT_TRUE(membership(annex_a(), 0, 1.01).empty());
  LoadingTable t{{{"AA", "A", {0.8}}}, 1};
  EXPECT_EQ(membership(t, 0, 0.8).size(), 1u);
}

TEST(Membership, Monotone) {
  for (std::size_t f = 0; f < 3; ++f) {
    std::vector<std::string> prev;
    for (double theta = 1.0; theta >= 0.0; theta -= 0.05) {
      std::vector<std::string> cur;
      for (const auto& e : membership(annex_a(), f, theta)) cur.push_back(e.iso2);
      for (const auto& code : prev) EXPECT_NE(std::find(cur.begin(), cur.end(), code), cur.end());
      prev = cur;
    }
  }
}

TEST(ProfileTable, KenyaAgriculture) {
  const auto m = load_fixture_as<ProfileMatrix>("annexB_f3");
  std::vector<std::string> members;
  for (const auto& r : m.rows)
    if (!r.is_world()) members.push_back(r.iso2);
  const auto t = profile_table(m, members, *m.find("WD"));
  EXPECT_EQ(t.row_count(), 11u);
  EXPECT_EQ(t.row_labels.back(), "World");
  EXPECT_EQ(t.cell("Kenya", "Agricultural and Biological Sciences"), "24.3% ↑");
}

TEST(ProfileTable, EmptyMembersAndIdentity) {
  const auto m = load_fixture_as<ProfileMatrix>("annexB_f3");
  const auto& world = *m.find("WD");
  const auto only_world = profile_table(m, {}, world);
  EXPECT_EQ(only_world.row_count(), 1u);

  const auto t = profile_table(m, {"WD"}, world);
  for (const auto& c : t.cells[0]) {
    EXPECT_EQ(c.find("↑"), std::string::npos);
    EXPECT_EQ(c.find("↓"), std::string::npos);
  }
  EXPECT_THROW(profile_table(m, {"XX"}, world), Error);
}

TEST(ProfileTable, IndependentOfRowOrder) {
  auto m = load_fixture_as<ProfileMatrix>("annexB_f2");
  const auto world = *m.find("WD");
  const std::vector<std::string> members{"CN", "RU", "PL"};
  const auto a = to_tsv(profile_table(m, members, world));
  std::reverse(m.rows.begin(), m.rows.end());
  EXPECT_EQ(to_tsv(profile_table(m, members, world)), a);
}

TEST(ProfileTable, SuspectFootnote) {
  const auto m = load_fixture_as<ProfileMatrix>("annexB_f3");
  const auto t = profile_table(m, {"ID"}, *m.find("WD"));
  EXPECT_EQ(t.cell(0, std::size_t{0}), "ID");
  EXPECT_NE(to_tsv(t).find("suspect"), std::string::npos);
  EXPECT_NE(to_tsv(t).find("n/a"), std::string::npos);
}

TEST(Compare, TranscribedTables) {
  const auto t = compare_schemes(load_fixture_as<VarianceSummary>("table2_sjr_variance"),
                                 load_fixture_as<VarianceSummary>("table3_esi_variance"));
  EXPECT_EQ(t.cell("cumulative", "SJR cum. %"), "91.71536");
  EXPECT_EQ(t.cell("cumulative", "ESI cum. %"), "89.13931");
  EXPECT_NE(to_text(t).find("91.71536 vs 89.13931"), std::string::npos);
}

TEST(Compare, SelfAndTopOne) {
  const auto s = load_fixture_as<VarianceSummary>("table2_sjr_variance");
  const auto t = compare_schemes(s, s);
  for (std::size_t r = 0; r < t.row_count(); ++r) EXPECT_EQ(t.cells[r].back(), "0.00000");
  EXPECT_EQ(compare_schemes(s, s, 1).row_count(), 2u);
  EXPECT_THROW(compare_schemes(s, s, 4), Error);
}

TEST(Tables, RenderingsDeterministic) {
  const auto t = rankings_table(annex_a());
  EXPECT_EQ(to_tsv(t), to_tsv(rankings_table(annex_a())));
  EXPECT_EQ(to_text(t), to_text(rankings_table(annex_a())));
  EXPECT_EQ(t.row_count(), 3 * annex_a().rows.size());
}

TEST(Tables, RejectRaggedRow) {
  ReportTable t;
  t.column_labels = {"a", "b"};
  EXPECT_THROW(t.add_row("x", {"1"}), Error);
}
