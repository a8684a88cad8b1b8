#pragma once

#include <string>
#include <vector>

#include <sciprofile/core.hpp>
#include <sciprofile/mds.hpp>

#include "oracles.hpp"

namespace testing_helpers {

using namespace sciprofile;

inline std::vector<std::string> numbered_labels(std::size_t n, const std::string& prefix = "P") {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

inline Dissimilarity dissimilarity_of(const Matrix& points) {
  return {numbered_labels(points.rows()), oracle::pairwise_distances(points)};
}

inline Embedding embedding_of(const Matrix& points) {
  Embedding e;
  e.labels = numbered_labels(points.rows());
  e.x = points;
  return e;
}

/// Custom-scheme matrix with two-letter codes AA, AB, ... and one region.
inline ProfileMatrix matrix_of(const std::vector<std::vector<double>>& rows) {
  ProfileMatrix m;
  const std::size_t n_areas = rows.empty() ? 0 : rows.front().size();
  std::vector<std::string> areas;
  for (std::size_t a = 0; a < n_areas; ++a) areas.push_back("Area " + std::to_string(a + 1));
  m.scheme = custom_scheme(areas);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CountryProfile p;
    p.iso2 = std::string{static_cast<char>('A' + i / 26), static_cast<char>('A' + i % 26)};
    p.name = "Country " + p.iso2;
    p.region = "Region";
    p.shares = rows[i];
    m.rows.push_back(std::move(p));
  }
  return m;
}

}  // namespace testing_helpers
