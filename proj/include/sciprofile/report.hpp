#pragma once

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "core.hpp"
#include "ingest.hpp"
#include "pca.hpp"
#include "table.hpp"

namespace sciprofile {

inline constexpr double kDefaultTheta = 0.8;
inline constexpr double kHighSpecialization = 1.5;
inline constexpr double kLowSpecialization = 0.5;
inline constexpr std::string_view kUpFlag = "↑";
inline constexpr std::string_view kDownFlag = "↓";

struct RankEntry {
  std::string iso2;
  std::string name;
  double loading = 0.0;
};

/// Countries by descending loading on factor `f` (0-based); ties by iso2.
inline std::vector<RankEntry> rank_by_factor(const LoadingTable& table, std::size_t f) {
  if (f >= table.k)
    throw Error("rank_by_factor: factor index " + std::to_string(f) + " out of range for k = " + std::to_string(table.k));
  std::vector<RankEntry> out;
  out.reserve(table.rows.size());
  for (const auto& r : table.rows) out.push_back({r.iso2, r.name, r.loadings.at(f)});
  std::sort(out.begin(), out.end(), [](const RankEntry& a, const RankEntry& b) {
    if (a.loading != b.loading) return a.loading > b.loading;
    return a.iso2 < b.iso2;
  });
  return out;
}

/// Countries loading at least `theta` on factor `f`, in ranking order.
inline std::vector<RankEntry> membership(const LoadingTable& table, std::size_t f, double theta = kDefaultTheta) {
  if (!(theta >= 0.0)) throw Error("membership: theta must be non-negative");
  auto ranked = rank_by_factor(table, f);
  auto cut = std::find_if(ranked.begin(), ranked.end(), [&](const RankEntry& e) { return !(e.loading >= theta); });
  ranked.erase(cut, ranked.end());
  return ranked;
}

/// Loading table view of a fitted model, with display names from the profiles.
inline LoadingTable to_loading_table(const FactorModel& model, const ProfileMatrix* names = nullptr) {
  LoadingTable t;
  t.k = model.k;
  for (std::size_t r = 0; r < model.loadings.rows(); ++r) {
    LoadingRow row{model.labels.at(r), model.labels.at(r), {}};
    if (names)
      if (const auto* p = names->find(row.iso2)) row.name = p->name;
    auto l = model.loadings.row(r);
    row.loadings.assign(l.begin(), l.end());
    t.rows.push_back(std::move(row));
  }
  return t;
}

/// All per-factor rankings stacked: factor, rank, iso2, country, loading.
inline ReportTable rankings_table(const LoadingTable& table, std::string title = "Factor loadings by country") {
  ReportTable t;
  t.title = std::move(title);
  t.row_header = "factor";
  t.column_labels = {"rank", "iso2", "country", "loading"};
  for (std::size_t f = 0; f < table.k; ++f) {
    const auto ranked = rank_by_factor(table, f);
    for (std::size_t i = 0; i < ranked.size(); ++i)
      t.add_row(std::to_string(f + 1),
                {std::to_string(i + 1), ranked[i].iso2, ranked[i].name, fixed(ranked[i].loading, 5)});
  }
  return t;
}

inline ReportTable membership_table(const LoadingTable& table, double theta = kDefaultTheta) {
  ReportTable t;
  t.title = "Factor membership (loading >= " + fixed(theta, 2) + ")";
  t.row_header = "factor";
  t.column_labels = {"rank", "iso2", "country", "loading"};
  for (std::size_t f = 0; f < table.k; ++f) {
    const auto members = membership(table, f, theta);
    for (std::size_t i = 0; i < members.size(); ++i)
      t.add_row(std::to_string(f + 1),
                {std::to_string(i + 1), members[i].iso2, members[i].name, fixed(members[i].loading, 5)});
    t.footnotes.push_back("factor " + std::to_string(f + 1) + ": " + std::to_string(members.size()) + " countries");
  }
  return t;
}

/// Member profiles followed by the world row, cells as "12.3%". Areas at or
/// above 1.5x the world share get an up arrow, at or below 0.5x a down arrow.
inline ReportTable profile_table(const ProfileMatrix& matrix, const std::vector<std::string>& members,
                                 const CountryProfile& world, std::string title = "Subject profile vs world") {
  if (world.shares.size() != matrix.scheme.size()) throw Error("profile_table: world profile has wrong length");
  ReportTable t;
  t.title = std::move(title);
  t.row_header = "Country";
  t.column_labels.push_back("iso2");
  t.column_labels.insert(t.column_labels.end(), matrix.scheme.areas.begin(), matrix.scheme.areas.end());

  auto cell = [](double v) { return is_missing(v) ? std::string("n/a") : fixed(v, 1) + "%"; };

  for (const auto& code : members) {
    const auto* row = matrix.find(code);
    if (!row) throw Error("profile_table: unknown member '" + code + "'");
    const auto ratio = specialization_index(*row, world);
    std::vector<std::string> cells{row->iso2};
    for (std::size_t a = 0; a < row->shares.size(); ++a) {
      std::string c = cell(row->shares[a]);
      if (ratio[a]) {
        if (*ratio[a] >= kHighSpecialization) c += " " + std::string(kUpFlag);
        else if (*ratio[a] <= kLowSpecialization) c += " " + std::string(kDownFlag);
      }
      cells.push_back(std::move(c));
    }
    t.add_row(row->name, std::move(cells));
    if (row->suspect) t.footnotes.push_back(row->name + ": row flagged as suspect in its source");
  }
  std::vector<std::string> cells{world.iso2};
  for (double v : world.shares) cells.push_back(cell(v));
  t.add_row(world.name, std::move(cells));
  if (world.suspect) t.footnotes.push_back(world.name + ": row flagged as suspect in its source");
  t.footnotes.push_back("↑ share >= 1.5 x world; ↓ share <= 0.5 x world");
  return t;
}

/// Side-by-side variance tables of two analyses plus the cumulative gap.
inline ReportTable compare_schemes(const VarianceSummary& a, const VarianceSummary& b, std::size_t top = 3) {
  if (a.rows.size() < top || b.rows.size() < top)
    throw Error("compare_schemes: both models need at least " + std::to_string(top) + " components");
  const std::string la = a.label.empty() ? "A" : a.label;
  const std::string lb = b.label.empty() ? "B" : b.label;
  ReportTable t;
  t.title = "Explained variance: " + la + " vs " + lb;
  t.row_header = "Component";
  t.column_labels = {la + " %", la + " cum. %", lb + " %", lb + " cum. %", "cum. difference"};
  for (std::size_t i = 0; i < top; ++i) {
    const auto& ra = a.rows[i];
    const auto& rb = b.rows[i];
    t.add_row(std::to_string(i + 1), {fixed(ra.percent, 5), fixed(ra.cumulative, 5), fixed(rb.percent, 5),
                                      fixed(rb.cumulative, 5), fixed(ra.cumulative - rb.cumulative, 5)});
  }
  const std::string ca = fixed(a.rows[top - 1].cumulative, 5);
  const std::string cb = fixed(b.rows[top - 1].cumulative, 5);
  t.add_row("cumulative", {"", ca, "", cb, fixed(a.rows[top - 1].cumulative - b.rows[top - 1].cumulative, 5)});
  t.footnotes.push_back("cumulative over " + std::to_string(top) + " components: " + ca + " vs " + cb);
  return t;
}

inline ReportTable compare_schemes(const FactorModel& a, const FactorModel& b, std::size_t top = 3) {
  return compare_schemes(summarize_variance(a), summarize_variance(b), top);
}

}  // namespace sciprofile
