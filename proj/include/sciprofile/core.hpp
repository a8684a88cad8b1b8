#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sciprofile {

/// Raised for contract violations (bad input, unmet preconditions).
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Cells that the source did not report are stored as quiet NaN.
inline constexpr double kMissing = std::numeric_limits<double>::quiet_NaN();
inline bool is_missing(double v) noexcept { return std::isnan(v); }

/// Reserved pseudo-code for the world aggregate row.
inline constexpr std::string_view kWorldCode = "WD";

/// Lowercase, trim and collapse internal whitespace runs to one space.
inline std::string normalize_key(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  bool pending_space = false;
  for (unsigned char ch : raw) {
    if (std::isspace(ch)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(static_cast<char>(std::tolower(ch)));
  }
  return out;
}

struct SubjectScheme {
  std::string name;
  std::vector<std::string> areas;
  /// normalized variant spelling -> canonical area name
  std::map<std::string, std::string> aliases;

  std::size_t size() const noexcept { return areas.size(); }

  std::optional<std::size_t> index_of(std::string_view canonical) const {
    auto it = std::find(areas.begin(), areas.end(), canonical);
    if (it == areas.end()) return std::nullopt;
    return static_cast<std::size_t>(it - areas.begin());
  }

  /// Canonical area for a raw spelling, or nullopt when unknown.
  std::optional<std::string> lookup(std::string_view raw) const {
    auto it = aliases.find(normalize_key(raw));
    if (it == aliases.end()) return std::nullopt;
    return it->second;
  }

  friend bool operator==(const SubjectScheme& a, const SubjectScheme& b) {
    return a.name == b.name && a.areas == b.areas;
  }
};

namespace detail {

inline void add_alias(SubjectScheme& s, std::string_view variant, const std::string& canonical) {
  s.aliases.emplace(normalize_key(variant), canonical);
}

// Canonical names, plus their comma-free and "&"/"and" swapped spellings.
inline void add_default_aliases(SubjectScheme& s) {
  for (const auto& area : s.areas) {
    add_alias(s, area, area);
    std::string no_commas;
    for (char c : area)
      if (c != ',') no_commas.push_back(c);
    add_alias(s, no_commas, area);
    for (const auto& base : {area, no_commas}) {
      std::string swapped;
      for (std::size_t i = 0; i < base.size(); ++i) {
        if (base[i] == '&') {
          swapped += "and";
        } else if (base.compare(i, 3, "and") == 0 && (i == 0 || base[i - 1] == ' ') &&
                   (i + 3 == base.size() || base[i + 3] == ' ')) {
          swapped += "&";
          i += 2;
        } else {
          swapped.push_back(base[i]);
        }
      }
      add_alias(s, swapped, area);
    }
  }
}

inline void check_unique_areas(const SubjectScheme& s) {
  std::set<std::string> seen;
  for (const auto& a : s.areas)
    if (!seen.insert(normalize_key(a)).second)
      throw Error("duplicate subject area in scheme " + s.name + ": " + a);
}

}  // namespace detail

/// The 27 Scopus subject areas in SJR portal order.
inline SubjectScheme scopus27() {
  SubjectScheme s;
  s.name = "scopus27";
  s.areas = {"Agricultural and Biological Sciences",
             "Arts and Humanities",
             "Biochemistry, Genetics and Molecular Biology",
             "Business, Management and Accounting",
             "Chemical Engineering",
             "Chemistry",
             "Computer Science",
             "Decision Sciences",
             "Dentistry",
             "Earth and Planetary Sciences",
             "Economics, Econometrics and Finance",
             "Energy",
             "Engineering",
             "Environmental Science",
             "Health Professions",
             "Immunology and Microbiology",
             "Materials Science",
             "Mathematics",
             "Medicine",
             "Multidisciplinary",
             "Neuroscience",
             "Nursing",
             "Pharmacology, Toxicology and Pharmaceutics",
             "Physics and Astronomy",
             "Psychology",
             "Social Sciences",
             "Veterinary"};
  detail::add_default_aliases(s);
  // Column headings of the published per-factor profile tables.
  static constexpr std::string_view kShort[] = {
      "agri",      "arte",        "biochem",   "business",      "chem-eng",          "chemistry",
      "computer",  "decision",    "dentistry", "earth",         "economics",         "energy",
      "engineering", "environmental", "health", "immunology",  "material",          "mathematics",
      "medicine",  "multidisciplinary", "neuroscience", "nursing", "pharma",         "physics",
      "psychology", "social",     "veterinary"};
  for (std::size_t i = 0; i < s.areas.size(); ++i) detail::add_alias(s, kShort[i], s.areas[i]);
  detail::add_alias(s, "Herat and Planetary Sciences", "Earth and Planetary Sciences");
  detail::check_unique_areas(s);
  return s;
}

/// The 22 Essential Science Indicators broad fields.
inline SubjectScheme esi22() {
  SubjectScheme s;
  s.name = "esi22";
  s.areas = {"Agricultural Sciences",      "Biology & Biochemistry",    "Chemistry",
             "Clinical Medicine",          "Computer Science",          "Economics & Business",
             "Engineering",                "Environment/Ecology",       "Geosciences",
             "Immunology",                 "Materials Science",         "Mathematics",
             "Microbiology",               "Molecular Biology & Genetics", "Multidisciplinary",
             "Neuroscience & Behavior",    "Pharmacology & Toxicology", "Physics",
             "Plant & Animal Science",     "Psychiatry/Psychology",     "Social Sciences, General",
             "Space Science"};
  detail::add_default_aliases(s);
  detail::add_alias(s, "Environment and Ecology", "Environment/Ecology");
  detail::add_alias(s, "Psychiatry and Psychology", "Psychiatry/Psychology");
  detail::add_alias(s, "Social Sciences", "Social Sciences, General");
  detail::check_unique_areas(s);
  return s;
}

/// A scheme built from arbitrary column names (no aliases beyond the names themselves).
inline SubjectScheme custom_scheme(std::vector<std::string> areas) {
  SubjectScheme s;
  s.name = "custom";
  s.areas = std::move(areas);
  detail::check_unique_areas(s);
  for (const auto& a : s.areas) detail::add_alias(s, a, a);
  return s;
}

struct CountryProfile {
  std::string iso2;
  std::string name;
  std::string region;
  /// Percent of country output per scheme area (or raw counts); NaN = missing.
  std::vector<double> shares;
  /// Percent of records without a subject assignment, when the source reports it.
  std::optional<double> unclassified;
  /// Row known to be damaged in its source (e.g. a dropped column).
  bool suspect = false;

  bool is_world() const noexcept { return iso2 == kWorldCode; }
};

enum class ValueKind { shares, counts };

struct ProfileMatrix {
  SubjectScheme scheme;
  std::vector<CountryProfile> rows;
  ValueKind kind = ValueKind::shares;

  std::size_t size() const noexcept { return rows.size(); }
  bool empty() const noexcept { return rows.empty(); }

  const CountryProfile* find(std::string_view iso2) const {
    for (const auto& r : rows)
      if (r.iso2 == iso2) return &r;
    return nullptr;
  }
};

/// Copy of m without world-aggregate rows.
inline ProfileMatrix without_world(const ProfileMatrix& m) {
  ProfileMatrix out{m.scheme, {}, m.kind};
  for (const auto& r : m.rows)
    if (!r.is_world()) out.rows.push_back(r);
  return out;
}

/// Row-wise concatenation; schemes must agree.
inline ProfileMatrix concat(std::span<const ProfileMatrix> parts) {
  if (parts.empty()) throw Error("concat: no matrices given");
  ProfileMatrix out{parts.front().scheme, {}, parts.front().kind};
  for (const auto& p : parts) {
    if (!(p.scheme == out.scheme)) throw Error("concat: scheme mismatch");
    if (p.kind != out.kind) throw Error("concat: value kind mismatch");
    out.rows.insert(out.rows.end(), p.rows.begin(), p.rows.end());
  }
  return out;
}

struct Issue {
  std::string row;
  std::string message;
  friend bool operator==(const Issue&, const Issue&) = default;
};

struct ValidationReport {
  std::vector<Issue> errors;
  std::vector<Issue> warnings;

  bool accepted() const noexcept { return errors.empty(); }
  friend bool operator==(const ValidationReport&, const ValidationReport&) = default;
};

inline constexpr double kRowSumWarnLow = 95.0;
inline constexpr double kRowSumWarnHigh = 160.0;
inline constexpr double kUnclassifiedWarn = 50.0;

inline bool valid_iso2(std::string_view code) {
  return code.size() == 2 && std::isupper(static_cast<unsigned char>(code[0])) &&
         std::isupper(static_cast<unsigned char>(code[1])) && code[0] <= 'Z' && code[1] <= 'Z';
}

/// Collects every problem in the matrix; never throws.
inline ValidationReport validate_profile(const ProfileMatrix& matrix) {
  ValidationReport rep;
  std::set<std::string> seen;
  const std::size_t n_areas = matrix.scheme.size();
  const bool shares = matrix.kind == ValueKind::shares;

  for (std::size_t i = 0; i < matrix.rows.size(); ++i) {
    const auto& row = matrix.rows[i];
    const std::string id = row.iso2.empty() ? "row " + std::to_string(i + 1) : row.iso2;

    if (!valid_iso2(row.iso2)) rep.errors.push_back({id, "malformed iso2 code '" + row.iso2 + "'"});
    if (!seen.insert(row.iso2).second) rep.errors.push_back({id, "duplicate iso2 code"});
    if (row.shares.size() != n_areas) {
      rep.errors.push_back({id, "expected " + std::to_string(n_areas) + " values, found " +
                                    std::to_string(row.shares.size())});
    }

    double sum = 0.0;
    std::size_t missing = 0;
    for (std::size_t a = 0; a < row.shares.size(); ++a) {
      const double v = row.shares[a];
      const std::string area = a < n_areas ? matrix.scheme.areas[a] : "column " + std::to_string(a + 1);
      if (is_missing(v)) {
        ++missing;
        continue;
      }
      if (!std::isfinite(v)) {
        rep.errors.push_back({id, "non-finite value in " + area});
      } else if (v < 0.0) {
        rep.errors.push_back({id, "negative value in " + area});
      } else if (shares && v > 100.0) {
        rep.errors.push_back({id, "share above 100% in " + area});
      }
      sum += v;
    }

    if (missing > 0)
      rep.warnings.push_back({id, std::to_string(missing) + " missing value(s)"});
    if (shares && (sum < kRowSumWarnLow || sum > kRowSumWarnHigh))
      rep.warnings.push_back({id, "share sum outside [95, 160]"});
    if (row.unclassified && *row.unclassified > kUnclassifiedWarn)
      rep.warnings.push_back({id, "unclassified fraction above 50%"});
    if (row.suspect) rep.warnings.push_back({id, "row flagged as suspect in its source"});
  }
  return rep;
}

/// Weighted mean profile (uniform weights when none are given). Result is
/// independent of row order: terms are summed in sorted order.
inline CountryProfile world_profile(const ProfileMatrix& matrix,
                                    std::optional<std::span<const double>> weights = std::nullopt) {
  if (matrix.empty()) throw Error("world_profile: empty matrix");
  const std::size_t n = matrix.rows.size();
  std::vector<double> w(n, 1.0);
  if (weights) {
    if (weights->size() != n) throw Error("world_profile: weight count does not match row count");
    bool any = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (!((*weights)[i] >= 0.0) || !std::isfinite((*weights)[i]))
        throw Error("world_profile: weights must be finite and non-negative");
      w[i] = (*weights)[i];
      any = any || w[i] > 0.0;
    }
    if (!any) throw Error("world_profile: all weights are zero");
  }

  const std::size_t n_areas = matrix.scheme.size();
  CountryProfile world{std::string(kWorldCode), "World", "World", std::vector<double>(n_areas, kMissing), std::nullopt, false};
  std::vector<std::pair<double, double>> terms;  // (weighted value, weight)
  for (std::size_t a = 0; a < n_areas; ++a) {
    terms.clear();
    for (std::size_t i = 0; i < n; ++i) {
      const auto& s = matrix.rows[i].shares;
      if (s.size() != n_areas) throw Error("world_profile: row " + matrix.rows[i].iso2 + " has wrong length");
      if (is_missing(s[a]) || w[i] == 0.0) continue;
      terms.emplace_back(w[i] * s[a], w[i]);
    }
    if (terms.empty()) continue;
    std::sort(terms.begin(), terms.end());
    double num = 0.0, den = 0.0;
    for (auto [v, wt] : terms) {
      num += v;
      den += wt;
    }
    world.shares[a] = num / den;
  }
  return world;
}

/// country share / world share per area; nullopt where undefined (world share
/// zero or either value missing).
inline std::vector<std::optional<double>> specialization_index(const CountryProfile& country,
                                                               const CountryProfile& world) {
  if (country.shares.size() != world.shares.size())
    throw Error("specialization_index: scheme mismatch (" + std::to_string(country.shares.size()) +
                " vs " + std::to_string(world.shares.size()) + " areas)");
  std::vector<std::optional<double>> out(country.shares.size());
  for (std::size_t a = 0; a < out.size(); ++a) {
    const double c = country.shares[a];
    const double w = world.shares[a];
    if (is_missing(c) || is_missing(w) || w == 0.0) continue;
    out[a] = c / w;
  }
  return out;
}

}  // namespace sciprofile
