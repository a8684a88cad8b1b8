#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include <sciprofile/fixtures.hpp>
#include <sciprofile/pca.hpp>

#include "helpers.hpp"
#include "oracles.hpp"

using namespace sciprofile;
using testing_helpers::matrix_of;

namespace {

ProfileMatrix random_profiles(std::mt19937_64& rng, std::size_t countries, std::size_t areas) {
  std::gamma_distribution<double> g(1.5, 1.0);
  std::vector<std::vector<double>> rows;
  for (std::size_t c = 0; c < countries; ++c) {
    std::vector<double> r(areas);
    double s = 0.0;
    for (double& v : r) s += (v = g(rng));
    for (double& v : r) v = 120.0 * v / s;
    rows.push_back(r);
  }
  return matrix_of(rows);
}

double column_match_error(const Matrix& a, const Matrix& b) {
  // best over column permutations and signs, 2 columns only
  double best = 1e300;
  for (int swap = 0; swap < 2; ++swap)
    for (int s0 : {-1, 1})
      for (int s1 : {-1, 1}) {
        double worst = 0.0;
        for (std::size_t r = 0; r < a.rows(); ++r) {
          const double b0 = swap ? b(r, 1) : b(r, 0), b1 = swap ? b(r, 0) : b(r, 1);
          worst = std::max({worst, std::abs(a(r, 0) - s0 * b0), std::abs(a(r, 1) - s1 * b1)});
        }
        best = std::min(best, worst);
      }
  return best;
}

}  // namespace

TEST(Correlation, IdenticalProfiles) {
  const auto c = correlation_matrix(matrix_of({{1, 2, 3, 4}, {1, 2, 3, 4}}), Mode::q_mode);
  EXPECT_DOUBLE_EQ(c.values(0, 1), 1.0);
}

TEST(Correlation, Anticorrelated) {
  const auto c = correlation_matrix(matrix_of({{1, 2, 3}, {3, 2, 1}}), Mode::q_mode);
  EXPECT_DOUBLE_EQ(c.values(0, 1), -1.0);
  EXPECT_EQ(c.values(0, 0), 1.0);
}

TEST(Correlation, Preconditions) {
  EXPECT_THROW(correlation_matrix(matrix_of({{1, 2, 3}}), Mode::q_mode), Error);
  EXPECT_THROW(correlation_matrix(matrix_of({{1, 2}, {2, 1}}), Mode::q_mode), Error);
  try {
    correlation_matrix(matrix_of({{1, 2, 3}, {5, 5, 5}}), Mode::q_mode);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("AB"), std::string::npos);
  }
}

TEST(Correlation, AnnexBStructureAndOnePair) {
  const auto m = annex_b_countries();
  const auto c = correlation_matrix(m, Mode::q_mode);
  ASSERT_EQ(c.values.rows(), 35u);
  for (std::size_t i = 0; i < 35; ++i) {
    EXPECT_EQ(c.values(i, i), 1.0);
    for (std::size_t j = 0; j < 35; ++j) EXPECT_NEAR(c.values(i, j), c.values(j, i), 1e-12);
  }
  // Hand Pearson for US vs CN over the areas complete for every country.
  const auto* us = m.find("US");
  const auto* cn = m.find("CN");
  std::vector<double> x, y;
  for (std::size_t a = 0; a < m.scheme.size(); ++a) {
    bool complete = true;
    for (const auto& r : m.rows) complete = complete && !is_missing(r.shares[a]);
    if (!complete) continue;
    x.push_back(us->shares[a]);
    y.push_back(cn->shares[a]);
  }
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n, my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  const std::size_t iu = std::find(c.variables.begin(), c.variables.end(), "US") - c.variables.begin();
  const std::size_t ic = std::find(c.variables.begin(), c.variables.end(), "CN") - c.variables.begin();
  EXPECT_NEAR(c.values(iu, ic), sxy / std::sqrt(sxx * syy), 1e-12);
  EXPECT_EQ(c.excluded_cases.size(), 3u);
}

TEST(Correlation, RMode) {
  const auto m = matrix_of({{1, 2, 9}, {2, 4, 1}, {3, 6, 5}, {4, 9, 2}});
  const auto c = correlation_matrix(m, Mode::r_mode);
  EXPECT_EQ(c.values.rows(), 3u);
  EXPECT_GT(c.values(0, 1), 0.99);
}

TEST(ExtractFactors, UncorrelatedVariablesShareEqually) {
  // Three orthogonal centered country vectors over four areas.
  const auto m = matrix_of({{1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}});
  const auto f = extract_factors(m, 1, Mode::q_mode, false);
  for (double e : f.explained) EXPECT_NEAR(e, 100.0 / 3.0, 1e-9);
  const auto t = variance_table(f, 2);
  EXPECT_EQ(t.cell(0, 0), "33.33333");
  EXPECT_EQ(t.cell(1, 1), "66.66667");
}

TEST(ExtractFactors, RankOne) {
  const auto m = matrix_of({{1, 2, 3, 7}, {2, 4, 6, 14}, {0.5, 1, 1.5, 3.5}});
  const auto f = extract_factors(m, 1, Mode::q_mode, false);
  EXPECT_NEAR(f.explained[0], 100.0, 1e-9);
  const auto t = variance_table(f, 1);
  EXPECT_EQ(t.cell(0, 0), "100.00000");
  EXPECT_EQ(t.cell(0, 1), "100.00000");
}

TEST(ExtractFactors, IdentityCorrelationTable) {
  FactorModel f;
  f.eigenvalues = {1, 1, 1, 1};
  f.explained = {25, 25, 25, 25};
  const auto t = variance_table(f, 2);
  EXPECT_EQ(t.cell(1, 0), "25.00000");
  EXPECT_EQ(t.cell(1, 1), "50.00000");
}

TEST(ExtractFactors, KOutOfRange) {
  const auto m = matrix_of({{1, 2, 3}, {3, 1, 2}});
  EXPECT_THROW(extract_factors(m, 3), Error);
  EXPECT_THROW(extract_factors(m, 0), Error);
}

TEST(ExtractFactors, ConservationOnRandomMatrices) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t countries = 4 + trial % 9, areas = 8 + trial % 20;
    const auto m = random_profiles(rng, countries, areas);
    const std::size_t k = std::min<std::size_t>(3, countries);
    const auto unrot = extract_factors(m, k, Mode::q_mode, false);
    const auto rot = extract_factors(m, k, Mode::q_mode, true);

    EXPECT_NEAR(std::accumulate(unrot.explained.begin(), unrot.explained.end(), 0.0), 100.0, 1e-6);
    const auto h0 = communalities(unrot), h1 = communalities(rot);
    for (std::size_t i = 0; i < h0.size(); ++i) {
      EXPECT_NEAR(h0[i], h1[i], 1e-9);
      EXPECT_LE(h0[i], 1.0 + 1e-6);
      EXPECT_GE(h0[i], 0.0);
    }
    const auto v0 = factor_variance(unrot.loadings), v1 = factor_variance(rot.loadings);
    EXPECT_NEAR(std::accumulate(v0.begin(), v0.end(), 0.0), std::accumulate(v1.begin(), v1.end(), 0.0), 1e-9);

    // L^T L = diag(lambda)
    const auto ltl = unrot.loadings.transpose() * unrot.loadings;
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b)
        EXPECT_NEAR(ltl(a, b), a == b ? unrot.eigenvalues[a] : 0.0, 1e-8);

    // column sums positive, ordered by sum of squares
    for (const auto* model : {&unrot, &rot}) {
      const auto var = factor_variance(model->loadings);
      for (std::size_t f = 0; f < k; ++f) {
        double s = 0.0;
        for (std::size_t r = 0; r < model->loadings.rows(); ++r) s += model->loadings(r, f);
        EXPECT_GT(s, 0.0);
        if (f) {
          EXPECT_GE(var[f - 1] + 1e-12, var[f]);
        }
      }
    }
  }
}

TEST(ExtractFactors, ScaleInvariance) {
  std::mt19937_64 rng(3);
  auto m = random_profiles(rng, 6, 12);
  const auto base = extract_factors(m, 3);
  for (double& v : m.rows[2].shares) v *= 3.7;
  const auto scaled = extract_factors(m, 3);
  EXPECT_LE(max_abs_diff(base.loadings, scaled.loadings), 1e-10);
}

TEST(ExtractFactors, PermutationEquivariance) {
  std::mt19937_64 rng(4);
  auto m = random_profiles(rng, 7, 15);
  const auto base = extract_factors(m, 3);
  std::swap(m.rows[0], m.rows[5]);
  std::swap(m.rows[2], m.rows[3]);
  const auto perm = extract_factors(m, 3);
  for (std::size_t r = 0; r < 7; ++r) {
    const std::size_t src = std::find(base.labels.begin(), base.labels.end(), perm.labels[r]) - base.labels.begin();
    for (std::size_t f = 0; f < 3; ++f) EXPECT_NEAR(perm.loadings(r, f), base.loadings(src, f), 1e-9);
  }
}

TEST(ExtractFactors, PowerIterationOracleOnAnnexB) {
  const auto m = annex_b_countries();
  const auto model = extract_factors(m, 3);
  const auto ref = oracle::power_iteration(correlation_matrix(m, Mode::q_mode).values, 3);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(model.eigenvalues[i], ref[i].value, 1e-8);
  const double total = std::accumulate(model.eigenvalues.begin(), model.eigenvalues.end(), 0.0);
  EXPECT_NEAR(total, 35.0, 1e-9);
  EXPECT_GE(model.explained[0] + model.explained[1] + model.explained[2], 80.0);
}

TEST(Varimax, RequiresTwoFactors) {
  EXPECT_THROW(varimax(Matrix(3, 1, 0.5)), Error);
}

TEST(Varimax, BlockDiagonalFixedPoint) {
  const Matrix a{{0.9, 0}, {0.8, 0}, {0, 0.7}, {0, 0.95}, {0.6, 0}};
  EXPECT_LE(column_match_error(varimax(a), a), 1e-12);
}

TEST(Varimax, PreservesRowSumsOfSquares) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-0.7, 0.7);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix a(10, 3);
    for (std::size_t r = 0; r < 10; ++r)
      for (std::size_t c = 0; c < 3; ++c) a(r, c) = u(rng);
    const auto h0 = communalities(a), h1 = communalities(varimax(a));
    for (std::size_t r = 0; r < 10; ++r) EXPECT_NEAR(h0[r], h1[r], 1e-9);
  }
}

TEST(Varimax, MatchesAngleGridOracle) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-0.8, 0.8);
  for (int trial = 0; trial < 10; ++trial) {
    Matrix a(4, 2);
    for (std::size_t r = 0; r < 4; ++r)
      for (std::size_t c = 0; c < 2; ++c) a(r, c) = u(rng);
    const auto ref = oracle::rotate2(a, oracle::varimax_grid_angle(a));
    EXPECT_LE(column_match_error(varimax(a), ref), 1e-4) << "trial " << trial;
  }
}

TEST(Communalities, Basic) {
  const auto t = load_fixture_as<LoadingTable>("annexA_loadings");
  const auto h = communalities(t);
  const auto idx = std::find_if(t.rows.begin(), t.rows.end(), [](auto& r) { return r.name == "Lebanon"; }) - t.rows.begin();
  EXPECT_NEAR(h[idx], 0.92467 * 0.92467 + 0.19387 * 0.19387 + 0.25991 * 0.25991, 1e-12);
  EXPECT_NEAR(h[idx], 0.9602, 5e-5);
  EXPECT_EQ(communalities(Matrix{{1, 0, 0}})[0], 1.0);
  EXPECT_EQ(communalities(Matrix{{0, 0, 0}})[0], 0.0);
}

TEST(FactorCount, KaiserAndCumulative) {
  EXPECT_EQ(kaiser_k({3.0, 1.5, 0.3, 0.2}), 2u);
  EXPECT_EQ(cumulative_k({60, 25, 10, 5}, 80.0), 2u);
  EXPECT_EQ(cumulative_k({60, 25, 10, 5}, 95.0), 3u);
}

TEST(Json, RoundTripAndFieldOrder) {
  const auto model = extract_factors(annex_b_countries(), 3);
  const auto text = to_json(model);
  const auto order = {"\"mode\"", "\"k\"", "\"eigenvalues\"", "\"explained\"", "\"loadings\"", "\"rotated\""};
  std::size_t last = 0;
  for (const char* key : order) {
    const auto pos = text.find(key);
    ASSERT_NE(pos, std::string::npos) << key;
    EXPECT_GT(pos, last);
    last = pos;
  }
  const auto back = factor_model_from_json(text);
  EXPECT_EQ(back.k, model.k);
  EXPECT_EQ(back.labels, model.labels);
  EXPECT_EQ(back.loadings, model.loadings);
  EXPECT_EQ(back.eigenvalues, model.eigenvalues);
  EXPECT_EQ(to_json(back), text);
}
