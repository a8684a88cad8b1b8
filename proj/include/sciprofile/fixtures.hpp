#pragma once

#include <algorithm>
#include <array>
#include <span>
#include <string>
#include <string_view>
#include <variant>

#include "core.hpp"
#include "fixture_data.hpp"
#include "ingest.hpp"
#include "pca.hpp"

namespace sciprofile {

/// Names accepted by load_fixture (also the CLI's --fixture values).
inline constexpr std::array<std::string_view, 7> kFixtureNames = {
    "table1_world", "table2_sjr_variance", "table3_esi_variance", "annexA_loadings",
    "annexB_f1",    "annexB_f2",           "annexB_f3"};

using Fixture = std::variant<ProfileMatrix, LoadingTable, VarianceSummary>;

namespace detail {

inline ProfileMatrix annex_b(std::string_view csv_text, std::span<const std::string_view> suspect) {
  auto m = parse_matrix(csv_text);
  for (auto& row : m.rows)
    row.suspect = std::find(suspect.begin(), suspect.end(), row.iso2) != suspect.end();
  return m;
}

}  // namespace detail

/// Bundled published data, transcribed as printed. Cells that the printed
/// tables dropped are missing and their rows are flagged suspect.
inline Fixture load_fixture(std::string_view name) {
  using namespace fixture_data;
  if (name == "table1_world") return parse_matrix(kTable1World);
  if (name == "table2_sjr_variance")
    return VarianceSummary{"SJR", {{71.31771, 71.31771}, {14.08725, 85.40496}, {6.31040, 91.71536}}};
  if (name == "table3_esi_variance")
    return VarianceSummary{"ESI", {{62.68682, 62.68682}, {19.74234, 82.42916}, {6.71016, 89.13931}}};
  if (name == "annexA_loadings") return parse_loading_table(kAnnexALoadings);
  if (name == "annexB_f1") return detail::annex_b(kAnnexBF1, kAnnexBF1Suspect);
  if (name == "annexB_f2") return detail::annex_b(kAnnexBF2, kAnnexBF2Suspect);
  if (name == "annexB_f3") return detail::annex_b(kAnnexBF3, kAnnexBF3Suspect);
  std::string known;
  for (auto n : kFixtureNames) known += (known.empty() ? "" : ", ") + std::string(n);
  throw Error("unknown fixture '" + std::string(name) + "' (known: " + known + ")");
}

template <class T>
T load_fixture_as(std::string_view name) {
  auto f = load_fixture(name);
  if (auto* v = std::get_if<T>(&f)) return std::move(*v);
  throw Error("fixture '" + std::string(name) + "' has a different type");
}

/// The three per-factor profile tables without their world rows (35 countries).
inline ProfileMatrix annex_b_countries() {
  const std::array parts{without_world(load_fixture_as<ProfileMatrix>("annexB_f1")),
                         without_world(load_fixture_as<ProfileMatrix>("annexB_f2")),
                         without_world(load_fixture_as<ProfileMatrix>("annexB_f3"))};
  return concat(parts);
}

}  // namespace sciprofile
