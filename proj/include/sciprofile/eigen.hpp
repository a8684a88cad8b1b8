#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "core.hpp"
#include "matrix.hpp"

namespace sciprofile {

struct EigenResult {
  /// Descending; ties keep their original diagonal order.
  std::vector<double> values;
  /// Column i is the unit eigenvector for values[i].
  Matrix vectors;
  int sweeps = 0;
};

inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kJacobiOffDiagTol = 1e-12;
inline constexpr double kSymmetryTol = 1e-10;

/// Cyclic Jacobi eigendecomposition of a real symmetric matrix.
///
/// Rotations are applied in fixed row-major (p, q) order until the largest
/// off-diagonal magnitude drops to 1e-12 * ||A||_F or 100 sweeps pass, so the
/// output is bit-reproducible. Each eigenvector is signed so that its
/// largest-magnitude entry (first one on ties) is positive.
inline EigenResult jacobi_eigh(const Matrix& input) {
  if (!input.square()) throw Error("jacobi_eigh: matrix is not square");
  const std::size_t n = input.rows();
  const double norm = frobenius_norm(input);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(input(i, j) - input(j, i)) > kSymmetryTol * std::max(norm, 1.0))
        throw Error("jacobi_eigh: matrix is not symmetric");

  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (input(i, j) + input(j, i));
  Matrix v = Matrix::identity(n);

  auto max_off = [&] {
    double m = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) m = std::max(m, std::abs(a(i, j)));
    return m;
  };

  const double threshold = kJacobiOffDiagTol * norm;
  int sweep = 0;
  while (sweep < kJacobiMaxSweeps && max_off() > threshold) {
    ++sweep;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });

  EigenResult out;
  out.sweeps = sweep;
  out.values.resize(n);
  out.vectors = Matrix(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    const std::size_t src = order[c];
    out.values[c] = a(src, src);
    std::size_t big = 0;
    for (std::size_t r = 1; r < n; ++r)
      if (std::abs(v(r, src)) > std::abs(v(big, src))) big = r;
    const double sign = v(big, src) < 0.0 ? -1.0 : 1.0;
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, c) = sign * v(r, src);
  }
  return out;
}

}  // namespace sciprofile
