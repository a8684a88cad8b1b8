#pragma once

#include <charconv>
#include <cstdio>
#include <optional>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "core.hpp"

namespace sciprofile {

// ---------------------------------------------------------------------------
// CSV (RFC 4180 subset: quoted fields, doubled quotes, LF or CRLF records)

namespace csv {

using Record = std::vector<std::string>;

inline std::vector<Record> read(std::string_view text) {
  std::vector<Record> records;
  Record current;
  std::string field;
  bool quoted = false;
  bool field_started = false;
  std::size_t i = 0;

  auto end_record = [&] {
    current.push_back(std::move(field));
    field.clear();
    // A line holding nothing at all is skipped.
    if (!(current.size() == 1 && current[0].empty() && !field_started)) records.push_back(std::move(current));
    current.clear();
    field_started = false;
  };

  while (i < text.size()) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          i += 2;
          continue;
        }
        quoted = false;
      } else {
        field.push_back(c);
      }
      ++i;
      continue;
    }
    switch (c) {
      case '"':
        quoted = true;
        field_started = true;
        break;
      case ',':
        current.push_back(std::move(field));
        field.clear();
        field_started = true;
        break;
      case '\r':
        break;
      case '\n':
        end_record();
        break;
      default:
        field.push_back(c);
        field_started = true;
    }
    ++i;
  }
  if (quoted) throw Error("csv: unterminated quoted field");
  if (field_started || !field.empty() || !current.empty()) end_record();
  return records;
}

inline std::string quote(std::string_view field) {
  const bool needs = field.find_first_of(",\"\r\n") != std::string_view::npos ||
                     (!field.empty() && (field.front() == ' ' || field.back() == ' '));
  if (!needs) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

inline void write_record(std::string& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out.push_back(',');
    out += quote(fields[i]);
  }
  out.push_back('\n');
}

}  // namespace csv

// ---------------------------------------------------------------------------
// Numbers

inline std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

/// Parses a numeric cell. Empty means missing; a trailing '%' is accepted.
inline std::optional<double> parse_cell(std::string_view raw) {
  std::string s = trim(raw);
  if (!s.empty() && s.back() == '%') s.pop_back();
  if (s.empty()) return kMissing;
  double v = 0.0;
  const char* first = s.data();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

/// Shortest text that parses back to exactly v.
inline std::string shortest_decimal(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

/// One decimal when that round-trips exactly (the published tables), else shortest form.
inline std::string format_share(double v) {
  if (is_missing(v)) return {};
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.1f", v);
  if (auto back = parse_cell(buf); back && *back == v) return buf;
  return shortest_decimal(v);
}

inline std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

// ---------------------------------------------------------------------------
// Subject names

inline std::size_t edit_distance(std::string_view a, std::string_view b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) prev[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

/// Maps a raw area spelling to the scheme's canonical name.
inline std::string canonicalize_subject(std::string_view raw, const SubjectScheme& scheme) {
  if (auto hit = scheme.lookup(raw)) return *hit;
  const std::string key = normalize_key(raw);
  std::string nearest;
  std::size_t best = std::string::npos;
  for (const auto& [alias, canonical] : scheme.aliases) {
    const std::size_t d = edit_distance(key, alias);
    if (d < best) {
      best = d;
      nearest = alias;
    }
  }
  std::string msg = "unknown subject area '" + std::string(raw) + "' in scheme " + scheme.name;
  if (!nearest.empty()) msg += " (nearest alias: '" + nearest + "' -> " + scheme.aliases.at(nearest) + ")";
  throw Error(msg);
}

// ---------------------------------------------------------------------------
// Profile matrices

inline constexpr std::string_view kUnclassifiedColumn = "unclassified";

namespace detail {

// Column order of `names` expressed as indices into `scheme`, if the names are
// exactly the scheme's areas (in any order).
inline std::optional<std::vector<std::size_t>> match_scheme(const std::vector<std::string>& names,
                                                           const SubjectScheme& scheme) {
  if (names.size() != scheme.size()) return std::nullopt;
  std::vector<std::size_t> idx;
  std::vector<bool> used(scheme.size(), false);
  for (const auto& n : names) {
    auto canonical = scheme.lookup(n);
    if (!canonical) return std::nullopt;
    const std::size_t k = *scheme.index_of(*canonical);
    if (used[k]) return std::nullopt;
    used[k] = true;
    idx.push_back(k);
  }
  return idx;
}

}  // namespace detail

/// Parses `iso2,name,region,<areas...>[,unclassified]` CSV. The area set in the
/// header selects the scheme (scopus27, esi22, otherwise custom) unless
/// `scheme_override` is given, in which case the header must match it.
inline ProfileMatrix parse_matrix(std::string_view text, ValueKind kind = ValueKind::shares,
                                  const std::optional<SubjectScheme>& scheme_override = std::nullopt) {
  const auto records = csv::read(text);
  if (records.empty()) throw Error("parse_matrix: missing header line");
  const auto& header = records.front();
  if (header.size() < 4 || normalize_key(header[0]) != "iso2" || normalize_key(header[1]) != "name" ||
      normalize_key(header[2]) != "region")
    throw Error("parse_matrix: header must start with iso2,name,region followed by area columns");

  std::vector<std::string> area_names(header.begin() + 3, header.end());
  bool has_unclassified = false;
  if (normalize_key(area_names.back()) == kUnclassifiedColumn) {
    has_unclassified = true;
    area_names.pop_back();
  }
  if (area_names.empty()) throw Error("parse_matrix: no area columns");

  ProfileMatrix m;
  m.kind = kind;
  std::vector<std::size_t> column_to_area;
  if (scheme_override) {
    auto idx = detail::match_scheme(area_names, *scheme_override);
    if (!idx) throw Error("parse_matrix: header areas do not match scheme " + scheme_override->name);
    m.scheme = *scheme_override;
    column_to_area = std::move(*idx);
  } else if (auto idx = detail::match_scheme(area_names, scopus27())) {
    m.scheme = scopus27();
    column_to_area = std::move(*idx);
  } else if (auto idx2 = detail::match_scheme(area_names, esi22())) {
    m.scheme = esi22();
    column_to_area = std::move(*idx2);
  } else {
    std::vector<std::string> trimmed;
    for (const auto& n : area_names) trimmed.push_back(trim(n));
    try {
      m.scheme = custom_scheme(std::move(trimmed));
    } catch (const Error& e) {
      throw Error(std::string("parse_matrix: header/area mismatch: ") + e.what());
    }
    for (std::size_t i = 0; i < area_names.size(); ++i) column_to_area.push_back(i);
  }

  std::set<std::string> seen;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    const std::string where = "line " + std::to_string(r + 1);
    if (rec.size() != header.size())
      throw Error("parse_matrix: ragged row at " + where + " (" + std::to_string(rec.size()) + " fields, header has " +
                  std::to_string(header.size()) + ")");
    CountryProfile row;
    row.iso2 = trim(rec[0]);
    row.name = rec[1];
    row.region = rec[2];
    if (!seen.insert(row.iso2).second) throw Error("parse_matrix: duplicate iso2 code '" + row.iso2 + "' at " + where);
    row.shares.assign(m.scheme.size(), kMissing);
    for (std::size_t c = 0; c < area_names.size(); ++c) {
      auto v = parse_cell(rec[3 + c]);
      if (!v) throw Error("parse_matrix: non-numeric cell '" + rec[3 + c] + "' at " + where);
      row.shares[column_to_area[c]] = *v;
    }
    if (has_unclassified) {
      auto v = parse_cell(rec.back());
      if (!v) throw Error("parse_matrix: non-numeric unclassified cell at " + where);
      if (!is_missing(*v)) row.unclassified = *v;
    }
    m.rows.push_back(std::move(row));
  }
  return m;
}

/// Canonical CSV: fixed column order, scheme area order, shares per format_share.
inline std::string write_matrix(const ProfileMatrix& m) {
  bool has_unclassified = false;
  for (const auto& r : m.rows) has_unclassified = has_unclassified || r.unclassified.has_value();

  std::string out;
  std::vector<std::string> fields{"iso2", "name", "region"};
  fields.insert(fields.end(), m.scheme.areas.begin(), m.scheme.areas.end());
  if (has_unclassified) fields.emplace_back(kUnclassifiedColumn);
  csv::write_record(out, fields);

  for (const auto& r : m.rows) {
    fields = {r.iso2, r.name, r.region};
    for (double v : r.shares) fields.push_back(format_share(v));
    if (has_unclassified) fields.push_back(r.unclassified ? format_share(*r.unclassified) : std::string());
    csv::write_record(out, fields);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Loading tables

struct LoadingRow {
  std::string iso2;
  std::string name;
  std::vector<double> loadings;
};

struct LoadingTable {
  std::vector<LoadingRow> rows;
  std::size_t k = 0;

  const LoadingRow* find_name(std::string_view name) const {
    for (const auto& r : rows)
      if (r.name == name) return &r;
    return nullptr;
  }
};

/// Violations of the loading-table invariants (empty when the table is sound).
inline std::vector<Issue> check_loading_table(const LoadingTable& t) {
  std::vector<Issue> out;
  for (const auto& r : t.rows) {
    if (r.loadings.size() != t.k) {
      out.push_back({r.name, "wrong factor count"});
      continue;
    }
    double ss = 0.0;
    for (double v : r.loadings) {
      if (!(v >= 0.0 && v <= 1.0 + 1e-9)) out.push_back({r.name, "loading outside [0, 1]"});
      ss += v * v;
    }
    if (ss > 1.0 + 1e-6) out.push_back({r.name, "squared loadings sum above 1"});
  }
  return out;
}

/// `iso2,name,factor1,...,factorK` CSV.
inline LoadingTable parse_loading_table(std::string_view text) {
  const auto records = csv::read(text);
  if (records.empty()) throw Error("parse_loading_table: missing header line");
  const auto& header = records.front();
  if (header.size() < 3 || normalize_key(header[0]) != "iso2" || normalize_key(header[1]) != "name")
    throw Error("parse_loading_table: header must be iso2,name,factor1,...");
  LoadingTable t;
  t.k = header.size() - 2;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.size() != header.size()) throw Error("parse_loading_table: ragged row at line " + std::to_string(r + 1));
    LoadingRow row{trim(rec[0]), rec[1], {}};
    for (std::size_t c = 2; c < rec.size(); ++c) {
      auto v = parse_cell(rec[c]);
      if (!v || is_missing(*v)) throw Error("parse_loading_table: bad loading at line " + std::to_string(r + 1));
      row.loadings.push_back(*v);
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

inline std::string write_loading_table(const LoadingTable& t, int decimals = 5) {
  std::string out;
  std::vector<std::string> fields{"iso2", "name"};
  for (std::size_t f = 0; f < t.k; ++f) fields.push_back("factor" + std::to_string(f + 1));
  csv::write_record(out, fields);
  for (const auto& r : t.rows) {
    fields = {r.iso2, r.name};
    for (double v : r.loadings) fields.push_back(fixed(v, decimals));
    csv::write_record(out, fields);
  }
  return out;
}

}  // namespace sciprofile
