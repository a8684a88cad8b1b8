#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "core.hpp"
#include "eigen.hpp"
#include "ingest.hpp"
#include "matrix.hpp"
#include "pca.hpp"

namespace sciprofile {

/// Rows with item ids (countries, or factor poles F1..Fk).
struct LabeledMatrix {
  std::vector<std::string> labels;
  Matrix values;
};

inline std::string pole_label(std::size_t factor) { return "F" + std::to_string(factor + 1); }

inline bool is_pole_label(std::string_view label) {
  if (label.size() < 2 || label[0] != 'F') return false;
  for (std::size_t i = 1; i < label.size(); ++i)
    if (label[i] < '0' || label[i] > '9') return false;
  return true;
}

inline LabeledMatrix loading_rows(const FactorModel& model) { return {model.labels, model.loadings}; }

inline LabeledMatrix loading_rows(const LoadingTable& table) {
  LabeledMatrix out;
  out.values = Matrix(table.rows.size(), table.k);
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    out.labels.push_back(table.rows[r].iso2);
    for (std::size_t c = 0; c < table.k; ++c) out.values(r, c) = table.rows[r].loadings.at(c);
  }
  return out;
}

/// Raw profile rows restricted to the areas every row reports.
inline LabeledMatrix profile_rows(const ProfileMatrix& matrix) {
  std::vector<std::size_t> keep;
  for (std::size_t a = 0; a < matrix.scheme.size(); ++a) {
    bool complete = true;
    for (const auto& r : matrix.rows) complete = complete && !is_missing(r.shares.at(a));
    if (complete) keep.push_back(a);
  }
  LabeledMatrix out;
  out.values = Matrix(matrix.rows.size(), keep.size());
  for (std::size_t r = 0; r < matrix.rows.size(); ++r) {
    out.labels.push_back(matrix.rows[r].iso2);
    for (std::size_t c = 0; c < keep.size(); ++c) out.values(r, c) = matrix.rows[r].shares[keep[c]];
  }
  return out;
}

/// Appends the unit-vector factor poles F1..F3 to the model's loading rows.
inline LabeledMatrix add_factor_poles(const FactorModel& model) {
  if (model.k != 3) throw Error("add_factor_poles: needs a 3-factor model, got k = " + std::to_string(model.k));
  const std::size_t n = model.loadings.rows();
  LabeledMatrix out;
  out.labels = model.labels;
  out.values = Matrix(n + model.k, model.k);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < model.k; ++c) out.values(r, c) = model.loadings(r, c);
  for (std::size_t f = 0; f < model.k; ++f) {
    out.labels.push_back(pole_label(f));
    out.values(n + f, f) = 1.0;
  }
  return out;
}

/// Only the poles, for the bare factor triangle.
inline LabeledMatrix factor_poles(std::size_t k) {
  LabeledMatrix out;
  out.values = Matrix(k, k);
  for (std::size_t f = 0; f < k; ++f) {
    out.labels.push_back(pole_label(f));
    out.values(f, f) = 1.0;
  }
  return out;
}

struct Dissimilarity {
  std::vector<std::string> labels;
  Matrix d;

  std::size_t size() const noexcept { return labels.size(); }
};

enum class Metric { euclidean, cosine };

inline Metric parse_metric(std::string_view s) {
  const auto k = normalize_key(s);
  if (k == "euclidean") return Metric::euclidean;
  if (k == "cosine") return Metric::cosine;
  throw Error("unknown metric '" + std::string(s) + "' (expected euclidean or cosine)");
}

inline Dissimilarity distance_matrix(const LabeledMatrix& rows, Metric metric = Metric::euclidean) {
  const std::size_t n = rows.values.rows();
  if (n < 2) throw Error("distance_matrix: needs at least 2 rows");
  if (rows.labels.size() != n) throw Error("distance_matrix: label count does not match row count");
  std::vector<double> norms(n, 0.0);
  if (metric == Metric::cosine) {
    for (std::size_t i = 0; i < n; ++i) {
      for (double v : rows.values.row(i)) norms[i] += v * v;
      norms[i] = std::sqrt(norms[i]);
      if (norms[i] == 0.0) throw Error("distance_matrix: zero-norm row '" + rows.labels[i] + "' under cosine metric");
    }
  }
  Dissimilarity out{rows.labels, Matrix(n, n)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto a = rows.values.row(i);
      auto b = rows.values.row(j);
      double d = 0.0;
      if (metric == Metric::euclidean) {
        for (std::size_t c = 0; c < a.size(); ++c) d += (a[c] - b[c]) * (a[c] - b[c]);
        d = std::sqrt(d);
      } else {
        double dot = 0.0;
        for (std::size_t c = 0; c < a.size(); ++c) dot += a[c] * b[c];
        d = std::max(0.0, 1.0 - dot / (norms[i] * norms[j]));
      }
      out.d(i, j) = d;
      out.d(j, i) = d;
    }
  }
  return out;
}

struct Embedding {
  std::vector<std::string> labels;
  /// items x 2
  Matrix x;
  double stress1 = 0.0;
  int iterations = 0;
  /// Raw stress before the first and after every Guttman transform (SMACOF only).
  std::vector<double> raw_stress;
  std::vector<std::string> diagnostics;

  std::size_t size() const noexcept { return labels.size(); }
};

inline double embedded_distance(const Matrix& x, std::size_t i, std::size_t j) {
  double s = 0.0;
  for (std::size_t c = 0; c < x.cols(); ++c) s += (x(i, c) - x(j, c)) * (x(i, c) - x(j, c));
  return std::sqrt(s);
}

/// Sum over pairs of (d_ij - ||x_i - x_j||)^2.
inline double raw_stress(const Matrix& x, const Dissimilarity& d) {
  double s = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      const double r = d.d(i, j) - embedded_distance(x, i, j);
      s += r * r;
    }
  return s;
}

inline double sum_squared_dissimilarity(const Dissimilarity& d) {
  double s = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) s += d.d(i, j) * d.d(i, j);
  return s;
}

/// Kruskal stress-1.
inline double stress1(const Embedding& e, const Dissimilarity& d) {
  if (e.labels != d.labels) throw Error("stress1: embedding and dissimilarity labels differ");
  const double denom = sum_squared_dissimilarity(d);
  if (denom == 0.0) throw Error("stress1: all dissimilarities are zero");
  return std::sqrt(raw_stress(e.x, d) / denom);
}

/// Torgerson scaling: top-dim eigenpairs of -1/2 J D^2 J. Negative eigenvalues
/// are clamped to zero and noted in the diagnostics.
inline Embedding classical_mds(const Dissimilarity& d, std::size_t dim = 2) {
  const std::size_t n = d.size();
  if (n < dim + 1)
    throw Error("classical_mds: needs at least " + std::to_string(dim + 1) + " items, got " + std::to_string(n));

  Matrix sq(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sq(i, j) = d.d(i, j) * d.d(i, j);
  std::vector<double> row_mean(n, 0.0);
  double grand = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) row_mean[i] += sq(i, j);
    grand += row_mean[i];
    row_mean[i] /= static_cast<double>(n);
  }
  grand /= static_cast<double>(n * n);
  Matrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b(i, j) = -0.5 * (sq(i, j) - row_mean[i] - row_mean[j] + grand);

  const auto eig = jacobi_eigh(b);
  Embedding e;
  e.labels = d.labels;
  e.x = Matrix(n, dim);
  for (std::size_t c = 0; c < dim; ++c) {
    double lambda = eig.values[c];
    if (lambda < 0.0) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "clamped negative eigenvalue %.3e on axis %zu", lambda, c + 1);
      e.diagnostics.emplace_back(buf);
      lambda = 0.0;
    }
    const double s = std::sqrt(lambda);
    for (std::size_t r = 0; r < n; ++r) e.x(r, c) = eig.vectors(r, c) * s;
  }
  for (std::size_t c = 0; c < dim; ++c) {
    double mean = 0.0;
    for (std::size_t r = 0; r < n; ++r) mean += e.x(r, c);
    mean /= static_cast<double>(n);
    for (std::size_t r = 0; r < n; ++r) e.x(r, c) -= mean;
  }
  const double denom = sum_squared_dissimilarity(d);
  e.stress1 = denom > 0.0 ? std::sqrt(raw_stress(e.x, d) / denom) : 0.0;
  return e;
}

/// Uniform random start in [-1, 1]^dim, scaled to the mean dissimilarity.
inline Embedding random_init(const Dissimilarity& d, std::uint64_t seed, std::size_t dim = 2) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const std::size_t n = d.size();
  const double scale = n > 1 ? std::sqrt(sum_squared_dissimilarity(d) / (0.5 * n * (n - 1))) : 1.0;
  Embedding e;
  e.labels = d.labels;
  e.x = Matrix(n, dim);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < dim; ++c) e.x(r, c) = scale * u(rng);
  return e;
}

struct SmacofOptions {
  std::size_t dim = 2;
  int max_iter = 500;
  double tol = 1e-9;
};

/// Relative slack allowed when checking that raw stress never increases.
inline constexpr double kStressMonotoneSlack = 1e-12;

/// Metric SMACOF with unit weights. `init` defaults to classical MDS.
inline Embedding smacof(const Dissimilarity& d, const std::optional<Embedding>& init = std::nullopt,
                        const SmacofOptions& opt = {}) {
  const std::size_t n = d.size();
  Embedding e = init ? *init : classical_mds(d, opt.dim);
  if (e.labels != d.labels) throw Error("smacof: initial embedding labels differ from dissimilarity labels");
  if (e.x.rows() != n || e.x.cols() != opt.dim) throw Error("smacof: initial embedding has the wrong shape");
  e.raw_stress.clear();
  e.iterations = 0;

  if (sum_squared_dissimilarity(d) == 0.0) {
    e.stress1 = 0.0;
    e.diagnostics.emplace_back("degenerate dissimilarity: all zero, initial configuration returned");
    return e;
  }

  double sigma = raw_stress(e.x, d);
  e.raw_stress.push_back(sigma);
  Matrix next(n, opt.dim);
  for (int it = 0; it < opt.max_iter; ++it) {
    // Guttman transform X <- (1/n) B(X) X
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t c = 0; c < opt.dim; ++c) next(i, c) = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        const double dist = embedded_distance(e.x, i, j);
        const double bij = dist > 0.0 ? d.d(i, j) / dist : 0.0;
        for (std::size_t c = 0; c < opt.dim; ++c) next(i, c) += bij * (e.x(i, c) - e.x(j, c));
      }
      for (std::size_t c = 0; c < opt.dim; ++c) next(i, c) /= static_cast<double>(n);
    }

    ++e.iterations;
    double updated = raw_stress(next, d);
    // A step that does not lower stress is rounding noise: keep the previous configuration.
    const bool stalled = updated >= sigma;
    if (updated > sigma * (1.0 + kStressMonotoneSlack) + 1e-300)
      e.diagnostics.emplace_back("raw stress increased at iteration " + std::to_string(e.iterations));
    if (stalled) updated = sigma;
    else std::swap(e.x, next);
    e.raw_stress.push_back(updated);
    const bool done = stalled || sigma == 0.0 || (sigma - updated) / sigma < opt.tol;
    sigma = updated;
    if (done) break;
  }
  e.stress1 = std::sqrt(sigma / sum_squared_dissimilarity(d));
  return e;
}

struct ProcrustesResult {
  Embedding aligned;
  double rmse = 0.0;
};

/// Best similarity transform (translation, rotation or reflection, uniform
/// scale) of y onto x, for 2-D embeddings.
inline ProcrustesResult procrustes(const Embedding& x, const Embedding& y) {
  if (x.labels != y.labels) throw Error("procrustes: labels differ");
  if (x.x.cols() != 2 || y.x.cols() != 2) throw Error("procrustes: 2-D embeddings only");
  const std::size_t n = x.size();
  if (n == 0) throw Error("procrustes: empty embedding");

  double mx[2] = {0, 0}, my[2] = {0, 0};
  for (std::size_t i = 0; i < n; ++i)
    for (int c = 0; c < 2; ++c) {
      mx[c] += x.x(i, c);
      my[c] += y.x(i, c);
    }
  for (int c = 0; c < 2; ++c) {
    mx[c] /= static_cast<double>(n);
    my[c] /= static_cast<double>(n);
  }

  // Rotating y by theta scores a*cos + b*sin against x; (ar, br) is the same
  // for the mirror image (y1, -y2).
  double a = 0.0, b = 0.0, ar = 0.0, br = 0.0, yy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x1 = x.x(i, 0) - mx[0], x2 = x.x(i, 1) - mx[1];
    const double y1 = y.x(i, 0) - my[0], y2 = y.x(i, 1) - my[1];
    a += x1 * y1 + x2 * y2;
    b += x2 * y1 - x1 * y2;
    ar += x1 * y1 - x2 * y2;
    br += x2 * y1 + x1 * y2;
    yy += y1 * y1 + y2 * y2;
  }

  const double proper = std::hypot(a, b);
  const double reflected = std::hypot(ar, br);
  const bool reflect = reflected > proper;
  const double theta = reflect ? std::atan2(br, ar) : std::atan2(b, a);
  const double fit = reflect ? reflected : proper;
  const double scale = yy > 0.0 ? fit / yy : 0.0;
  const double c = std::cos(theta), s = std::sin(theta);

  ProcrustesResult out;
  out.aligned = y;
  double sse = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double y1 = y.x(i, 0) - my[0];
    const double y2 = (y.x(i, 1) - my[1]) * (reflect ? -1.0 : 1.0);
    const double t1 = mx[0] + scale * (c * y1 - s * y2);
    const double t2 = mx[1] + scale * (s * y1 + c * y2);
    out.aligned.x(i, 0) = t1;
    out.aligned.x(i, 1) = t2;
    sse += (x.x(i, 0) - t1) * (x.x(i, 0) - t1) + (x.x(i, 1) - t2) * (x.x(i, 1) - t2);
  }
  out.rmse = std::sqrt(sse / static_cast<double>(n));
  return out;
}

/// `label,x,y` with 9 significant digits.
inline std::string write_embedding_csv(const Embedding& e) {
  std::string out = "label,x,y\n";
  char buf[96];
  for (std::size_t i = 0; i < e.size(); ++i) {
    std::snprintf(buf, sizeof buf, ",%.9g,%.9g\n", e.x(i, 0), e.x(i, 1));
    out += csv::quote(e.labels[i]) + buf;
  }
  return out;
}

inline Embedding parse_embedding_csv(std::string_view text) {
  const auto records = csv::read(text);
  if (records.empty() || records[0] != csv::Record{"label", "x", "y"})
    throw Error("embedding CSV: header must be label,x,y");
  Embedding e;
  e.x = Matrix(records.size() - 1, 2);
  for (std::size_t r = 1; r < records.size(); ++r) {
    if (records[r].size() != 3) throw Error("embedding CSV: ragged row at line " + std::to_string(r + 1));
    e.labels.push_back(records[r][0]);
    for (int c = 0; c < 2; ++c) {
      auto v = parse_cell(records[r][1 + c]);
      if (!v || is_missing(*v)) throw Error("embedding CSV: bad coordinate at line " + std::to_string(r + 1));
      e.x(r - 1, c) = *v;
    }
  }
  return e;
}

}  // namespace sciprofile
