#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "core.hpp"

namespace sciprofile {

/// Labeled, pre-formatted table. Cells are final strings so that every
/// rendering of the same table is byte-identical.
struct ReportTable {
  std::string title;
  std::string row_header;
  std::vector<std::string> column_labels;
  std::vector<std::string> row_labels;
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> footnotes;

  void add_row(std::string label, std::vector<std::string> values) {
    if (values.size() != column_labels.size())
      throw Error("ReportTable '" + title + "': row '" + label + "' has " + std::to_string(values.size()) +
                  " cells, expected " + std::to_string(column_labels.size()));
    row_labels.push_back(std::move(label));
    cells.push_back(std::move(values));
  }

  std::size_t row_count() const noexcept { return row_labels.size(); }

  const std::string& cell(std::size_t row, std::size_t col) const { return cells.at(row).at(col); }

  /// Cell by labels; throws when either label is absent.
  const std::string& cell(std::string_view row, std::string_view col) const {
    auto r = std::find(row_labels.begin(), row_labels.end(), row);
    auto c = std::find(column_labels.begin(), column_labels.end(), col);
    if (r == row_labels.end() || c == column_labels.end())
      throw Error("ReportTable '" + title + "': no cell (" + std::string(row) + ", " + std::string(col) + ")");
    return cells[static_cast<std::size_t>(r - row_labels.begin())][static_cast<std::size_t>(c - column_labels.begin())];
  }
};

namespace detail {

// Display width in code points (cells may carry UTF-8 arrows).
inline std::size_t display_width(std::string_view s) {
  std::size_t w = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++w;
  return w;
}

inline std::string tsv_field(std::string_view s) {
  std::string out(s);
  std::replace(out.begin(), out.end(), '\t', ' ');
  std::replace(out.begin(), out.end(), '\n', ' ');
  return out;
}

}  // namespace detail

/// Title and footnotes become `# ` comment lines around a header + body.
inline std::string to_tsv(const ReportTable& t) {
  std::string out;
  if (!t.title.empty()) out += "# " + detail::tsv_field(t.title) + "\n";
  out += detail::tsv_field(t.row_header);
  for (const auto& c : t.column_labels) out += "\t" + detail::tsv_field(c);
  out += "\n";
  for (std::size_t r = 0; r < t.row_count(); ++r) {
    out += detail::tsv_field(t.row_labels[r]);
    for (const auto& c : t.cells[r]) out += "\t" + detail::tsv_field(c);
    out += "\n";
  }
  for (const auto& f : t.footnotes) out += "# " + detail::tsv_field(f) + "\n";
  return out;
}

/// Space-aligned plain text; the label column is left-aligned, cells right-aligned.
inline std::string to_text(const ReportTable& t) {
  std::vector<std::size_t> width(t.column_labels.size() + 1, 0);
  width[0] = detail::display_width(t.row_header);
  for (const auto& l : t.row_labels) width[0] = std::max(width[0], detail::display_width(l));
  for (std::size_t c = 0; c < t.column_labels.size(); ++c) {
    width[c + 1] = detail::display_width(t.column_labels[c]);
    for (const auto& row : t.cells) width[c + 1] = std::max(width[c + 1], detail::display_width(row[c]));
  }
  auto pad_right = [](const std::string& s, std::size_t w) { return s + std::string(w - detail::display_width(s), ' '); };
  auto pad_left = [](const std::string& s, std::size_t w) { return std::string(w - detail::display_width(s), ' ') + s; };

  std::string out;
  if (!t.title.empty()) out += t.title + "\n";
  auto emit = [&](const std::string& label, const std::vector<std::string>& row) {
    std::string line = pad_right(label, width[0]);
    for (std::size_t c = 0; c < row.size(); ++c) line += "  " + pad_left(row[c], width[c + 1]);
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  };
  emit(t.row_header, t.column_labels);
  for (std::size_t r = 0; r < t.row_count(); ++r) emit(t.row_labels[r], t.cells[r]);
  for (const auto& f : t.footnotes) out += "* " + f + "\n";
  return out;
}

}  // namespace sciprofile
