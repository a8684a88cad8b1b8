#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "core.hpp"
#include "eigen.hpp"
#include "ingest.hpp"
#include "matrix.hpp"
#include "table.hpp"

namespace sciprofile {

/// q_mode: countries are the variables, subject areas the cases.
/// r_mode: areas are the variables, countries the cases.
enum class Mode { q_mode, r_mode };

inline std::string to_string(Mode m) { return m == Mode::q_mode ? "q_mode" : "r_mode"; }

inline Mode parse_mode(std::string_view s) {
  const auto k = normalize_key(s);
  if (k == "q_mode" || k == "q" || k == "q-mode") return Mode::q_mode;
  if (k == "r_mode" || k == "r" || k == "r-mode") return Mode::r_mode;
  throw Error("unknown PCA mode '" + std::string(s) + "' (expected q_mode or r_mode)");
}

struct CorrelationMatrix {
  Matrix values;
  /// One label per variable (iso2 in q-mode, area name in r-mode).
  std::vector<std::string> variables;
  /// Cases dropped because they carried a missing cell.
  std::vector<std::string> excluded_cases;
};

/// Pearson correlation between variables. Cases with any missing entry are
/// removed listwise so the result stays positive semi-definite.
inline CorrelationMatrix correlation_matrix(const ProfileMatrix& matrix, Mode mode) {
  const std::size_t n_rows = matrix.rows.size();
  const std::size_t n_areas = matrix.scheme.size();
  for (const auto& r : matrix.rows)
    if (r.shares.size() != n_areas) throw Error("correlation_matrix: row " + r.iso2 + " has wrong length");

  CorrelationMatrix out;
  // data[v] holds the case values of variable v.
  std::vector<std::vector<double>> data;

  if (mode == Mode::q_mode) {
    std::vector<std::size_t> cases;
    for (std::size_t a = 0; a < n_areas; ++a) {
      bool complete = true;
      for (const auto& r : matrix.rows) complete = complete && !is_missing(r.shares[a]);
      if (complete) cases.push_back(a);
      else out.excluded_cases.push_back(matrix.scheme.areas[a]);
    }
    if (n_rows < 2) throw Error("correlation_matrix: q-mode needs at least 2 countries, got " + std::to_string(n_rows));
    if (cases.size() < 3)
      throw Error("correlation_matrix: q-mode needs at least 3 complete subject areas, got " + std::to_string(cases.size()));
    for (const auto& r : matrix.rows) {
      out.variables.push_back(r.iso2);
      std::vector<double> v;
      for (auto a : cases) v.push_back(r.shares[a]);
      data.push_back(std::move(v));
    }
  } else {
    std::vector<std::size_t> cases;
    for (std::size_t i = 0; i < n_rows; ++i) {
      const auto& s = matrix.rows[i].shares;
      if (std::none_of(s.begin(), s.end(), is_missing)) cases.push_back(i);
      else out.excluded_cases.push_back(matrix.rows[i].iso2);
    }
    if (n_areas < 2) throw Error("correlation_matrix: r-mode needs at least 2 subject areas");
    if (cases.size() < 3)
      throw Error("correlation_matrix: r-mode needs at least 3 complete countries, got " + std::to_string(cases.size()));
    for (std::size_t a = 0; a < n_areas; ++a) {
      out.variables.push_back(matrix.scheme.areas[a]);
      std::vector<double> v;
      for (auto i : cases) v.push_back(matrix.rows[i].shares[a]);
      data.push_back(std::move(v));
    }
  }

  const std::size_t nv = data.size();
  std::vector<double> norms(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    auto& x = data[v];
    const double mean = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
    double ss = 0.0;
    for (double& e : x) {
      e -= mean;
      ss += e * e;
    }
    if (!(ss > 0.0)) throw Error("correlation_matrix: variable '" + out.variables[v] + "' has zero variance");
    norms[v] = std::sqrt(ss);
  }

  out.values = Matrix(nv, nv);
  for (std::size_t i = 0; i < nv; ++i) {
    out.values(i, i) = 1.0;
    for (std::size_t j = i + 1; j < nv; ++j) {
      double s = 0.0;
      for (std::size_t c = 0; c < data[i].size(); ++c) s += data[i][c] * data[j][c];
      const double r = std::clamp(s / (norms[i] * norms[j]), -1.0, 1.0);
      out.values(i, j) = r;
      out.values(j, i) = r;
    }
  }
  return out;
}

struct FactorModel {
  Mode mode = Mode::q_mode;
  std::size_t k = 0;
  /// All components, descending, from the unrotated decomposition.
  std::vector<double> eigenvalues;
  /// 100 * lambda_i / sum(lambda), all components.
  std::vector<double> explained;
  /// variables x k
  Matrix loadings;
  bool rotated = false;
  std::vector<double> communalities;
  std::vector<std::string> labels;
};

inline std::vector<double> communalities(const Matrix& loadings) {
  std::vector<double> out(loadings.rows(), 0.0);
  for (std::size_t r = 0; r < loadings.rows(); ++r)
    for (double v : loadings.row(r)) out[r] += v * v;
  return out;
}

inline std::vector<double> communalities(const FactorModel& model) { return communalities(model.loadings); }

inline std::vector<double> communalities(const LoadingTable& table) {
  std::vector<double> out;
  for (const auto& r : table.rows) {
    double s = 0.0;
    for (double v : r.loadings) s += v * v;
    out.push_back(s);
  }
  return out;
}

/// Sum of squared loadings per factor, as percent of the variable count.
inline std::vector<double> factor_variance(const Matrix& loadings) {
  std::vector<double> out(loadings.cols(), 0.0);
  for (std::size_t r = 0; r < loadings.rows(); ++r)
    for (std::size_t c = 0; c < loadings.cols(); ++c) out[c] += loadings(r, c) * loadings(r, c);
  for (double& v : out) v *= 100.0 / static_cast<double>(loadings.rows());
  return out;
}

/// Flips each column so its sum is non-negative, then orders columns by
/// descending sum of squares (stable).
inline Matrix normalize_factor_columns(const Matrix& loadings) {
  const std::size_t n = loadings.rows(), k = loadings.cols();
  Matrix signed_l = loadings;
  for (std::size_t c = 0; c < k; ++c) {
    double sum = 0.0;
    for (std::size_t r = 0; r < n; ++r) sum += signed_l(r, c);
    if (sum < 0.0)
      for (std::size_t r = 0; r < n; ++r) signed_l(r, c) = -signed_l(r, c);
  }
  std::vector<double> ss(k, 0.0);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < k; ++c) ss[c] += signed_l(r, c) * signed_l(r, c);
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return ss[a] > ss[b]; });
  Matrix out(n, k);
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t r = 0; r < n; ++r) out(r, c) = signed_l(r, order[c]);
  return out;
}

/// Raw varimax criterion: sum over factors of the variance of squared loadings.
inline double varimax_criterion(const Matrix& a) {
  const double n = static_cast<double>(a.rows());
  double total = 0.0;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    double s2 = 0.0, s4 = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      const double q = a(r, c) * a(r, c);
      s2 += q;
      s4 += q * q;
    }
    total += (s4 - s2 * s2 / n) / n;
  }
  return total;
}

inline constexpr int kVarimaxMaxSweeps = 1000;
inline constexpr double kVarimaxTol = 1e-10;

/// Kaiser-normalized varimax via pairwise planar rotations.
inline Matrix varimax(const Matrix& loadings) {
  const std::size_t n = loadings.rows(), k = loadings.cols();
  if (k < 2) throw Error("varimax: needs at least 2 factors");

  std::vector<double> h(n);
  Matrix a = loadings;
  for (std::size_t r = 0; r < n; ++r) {
    double ss = 0.0;
    for (double v : loadings.row(r)) ss += v * v;
    h[r] = std::sqrt(ss);
    if (h[r] > 0.0)
      for (double& v : a.row(r)) v /= h[r];
  }

  const double dn = static_cast<double>(n);
  double crit = varimax_criterion(a);
  for (int sweep = 0; sweep < kVarimaxMaxSweeps; ++sweep) {
    for (std::size_t p = 0; p + 1 < k; ++p) {
      for (std::size_t q = p + 1; q < k; ++q) {
        double sa = 0.0, sb = 0.0, sc = 0.0, sd = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          const double x = a(r, p), y = a(r, q);
          const double u = x * x - y * y;
          const double v = 2.0 * x * y;
          sa += u;
          sb += v;
          sc += u * u - v * v;
          sd += 2.0 * u * v;
        }
        const double num = sd - 2.0 * sa * sb / dn;
        const double den = sc - (sa * sa - sb * sb) / dn;
        const double phi = 0.25 * std::atan2(num, den);
        if (phi == 0.0) continue;
        const double c = std::cos(phi), s = std::sin(phi);
        for (std::size_t r = 0; r < n; ++r) {
          const double x = a(r, p), y = a(r, q);
          a(r, p) = c * x + s * y;
          a(r, q) = -s * x + c * y;
        }
      }
    }
    const double next = varimax_criterion(a);
    const double gain = next - crit;
    crit = next;
    if (gain < kVarimaxTol) break;
  }

  for (std::size_t r = 0; r < n; ++r)
    for (double& v : a.row(r)) v *= h[r];
  return normalize_factor_columns(a);
}

/// Eigendecomposes the correlation matrix and keeps the top k components as
/// loadings v * sqrt(lambda), optionally varimax-rotated.
inline FactorModel extract_factors(const ProfileMatrix& matrix, std::size_t k, Mode mode = Mode::q_mode,
                                   bool rotate = true) {
  const auto corr = correlation_matrix(matrix, mode);
  const std::size_t nv = corr.variables.size();
  if (k < 1 || k > nv)
    throw Error("extract_factors: k = " + std::to_string(k) + " outside [1, " + std::to_string(nv) + "]");

  const auto eig = jacobi_eigh(corr.values);
  FactorModel m;
  m.mode = mode;
  m.k = k;
  m.labels = corr.variables;
  m.eigenvalues = eig.values;
  const double total = std::accumulate(eig.values.begin(), eig.values.end(), 0.0);
  if (!(total > 0.0)) throw Error("extract_factors: correlation matrix has non-positive trace");
  for (double l : eig.values) m.explained.push_back(100.0 * l / total);

  Matrix raw(nv, k);
  for (std::size_t f = 0; f < k; ++f) {
    const double scale = std::sqrt(std::max(eig.values[f], 0.0));
    for (std::size_t r = 0; r < nv; ++r) raw(r, f) = eig.vectors(r, f) * scale;
  }
  if (rotate && k >= 2) {
    m.loadings = varimax(raw);
    m.rotated = true;
  } else {
    m.loadings = normalize_factor_columns(raw);
  }
  m.communalities = communalities(m.loadings);
  return m;
}

/// Kaiser criterion: components whose eigenvalue exceeds the mean eigenvalue.
inline std::size_t kaiser_k(const std::vector<double>& eigenvalues) {
  if (eigenvalues.empty()) return 0;
  const double mean = std::accumulate(eigenvalues.begin(), eigenvalues.end(), 0.0) / static_cast<double>(eigenvalues.size());
  return static_cast<std::size_t>(std::count_if(eigenvalues.begin(), eigenvalues.end(), [&](double l) { return l > mean; }));
}

/// Smallest k whose cumulative explained percent reaches `percent`.
inline std::size_t cumulative_k(const std::vector<double>& explained, double percent) {
  double cum = 0.0;
  for (std::size_t i = 0; i < explained.size(); ++i) {
    cum += explained[i];
    if (cum >= percent) return i + 1;
  }
  return explained.size();
}

/// Index of the largest loading per variable.
inline std::vector<std::size_t> argmax_partition(const Matrix& loadings) {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < loadings.rows(); ++r) {
    auto row = loadings.row(r);
    out.push_back(static_cast<std::size_t>(std::max_element(row.begin(), row.end()) - row.begin()));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Variance tables

struct VarianceRow {
  double percent = 0.0;
  double cumulative = 0.0;
};

/// Per-component explained variance, either computed or transcribed.
struct VarianceSummary {
  std::string label;
  std::vector<VarianceRow> rows;
};

/// Leading unrotated components of the model with their running cumulative.
inline VarianceSummary summarize_variance(const FactorModel& model, std::string label = {}) {
  VarianceSummary s{std::move(label), {}};
  double cum = 0.0;
  for (double e : model.explained) {
    cum += e;
    s.rows.push_back({e, cum});
  }
  return s;
}

inline ReportTable variance_table(const VarianceSummary& summary, std::size_t top) {
  if (top > summary.rows.size())
    throw Error("variance_table: top = " + std::to_string(top) + " exceeds " + std::to_string(summary.rows.size()) +
                " components");
  ReportTable t;
  t.title = summary.label.empty() ? "Explained variance" : "Explained variance (" + summary.label + ")";
  t.row_header = "Component";
  t.column_labels = {"% total variance", "Cum. %"};
  for (std::size_t i = 0; i < top; ++i)
    t.add_row(std::to_string(i + 1), {fixed(summary.rows[i].percent, 5), fixed(summary.rows[i].cumulative, 5)});
  return t;
}

inline ReportTable variance_table(const FactorModel& model, std::size_t top) {
  return variance_table(summarize_variance(model), top);
}

// ---------------------------------------------------------------------------
// JSON form. Field order: mode, k, eigenvalues, explained, loadings (row-major,
// variable order), rotated, labels, communalities.

inline std::string to_json(const FactorModel& m) {
  nlohmann::ordered_json j;
  j["mode"] = to_string(m.mode);
  j["k"] = m.k;
  j["eigenvalues"] = m.eigenvalues;
  j["explained"] = m.explained;
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < m.loadings.rows(); ++r) {
    auto row = m.loadings.row(r);
    rows.push_back(std::vector<double>(row.begin(), row.end()));
  }
  j["loadings"] = std::move(rows);
  j["rotated"] = m.rotated;
  j["labels"] = m.labels;
  j["communalities"] = m.communalities;
  return j.dump(2) + "\n";
}

inline FactorModel factor_model_from_json(std::string_view text) {
  FactorModel m;
  try {
    const auto j = nlohmann::json::parse(text);
    m.mode = parse_mode(j.at("mode").get<std::string>());
    m.k = j.at("k").get<std::size_t>();
    m.eigenvalues = j.at("eigenvalues").get<std::vector<double>>();
    m.explained = j.at("explained").get<std::vector<double>>();
    const auto rows = j.at("loadings").get<std::vector<std::vector<double>>>();
    m.loadings = Matrix(rows.size(), m.k);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != m.k) throw Error("factor model JSON: loading row " + std::to_string(r) + " has wrong width");
      for (std::size_t c = 0; c < m.k; ++c) m.loadings(r, c) = rows[r][c];
    }
    m.rotated = j.at("rotated").get<bool>();
    if (j.contains("labels")) m.labels = j.at("labels").get<std::vector<std::string>>();
    m.communalities = communalities(m.loadings);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("factor model JSON: ") + e.what());
  }
  return m;
}

}  // namespace sciprofile
