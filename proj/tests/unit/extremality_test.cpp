// Copyright 2026 The gcec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "gcec/extremality.hpp"

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "gcec/error.hpp"

namespace gcec {
namespace {

std::vector<Matrix> s3_quasi_point() { return testing::s3_family(std::sqrt(0.5), std::sqrt(0.5), 0.5); }

std::vector<Matrix> s3_generic_point() {
  return testing::s3_family(std::sqrt(0.3), std::sqrt(0.5), std::sqrt(0.35));
}

struct Fixture {
  std::string name;
  std::vector<Matrix> kraus;
  bool extreme;
};

std::vector<Fixture> fixtures() {
  return {{"a4", testing::a4_constant_kraus(), true},
          {"d5", testing::d5_qutrit_kraus(), true},
          {"so3_3", testing::so3_qutrit_kraus(std::sqrt(0.5)), true},
          {"so3_5", testing::so3_ququint_kraus(std::sqrt(2.0 / 7.0)), true},
          {"su2_4", testing::su2_singlet_kraus(4), true},
          {"s3_generic", s3_generic_point(), true},
          {"s3_quasi", s3_quasi_point(), false}};
}

TEST(Extremality, UnitaryChannelsAreExtreme) {
  Rng rng(1);
  for (int d = 1; d <= 5; ++d) {
    const auto v = test_extreme(KrausSet({random_unitary(rng, d)}));
    EXPECT_TRUE(v.is_extreme);
    EXPECT_EQ(v.rank, 1);
    EXPECT_EQ(v.kraus_count, 1);
  }
}

TEST(Extremality, PublishedExamples) {
  EXPECT_TRUE(test_extreme(KrausSet(testing::a4_constant_kraus())).is_extreme);
  for (int d = 2; d <= 6; ++d) EXPECT_TRUE(test_extreme(KrausSet(testing::su2_singlet_kraus(d))).is_extreme) << d;

  const auto quasi = test_extreme(KrausSet(s3_quasi_point()));
  EXPECT_FALSE(quasi.is_extreme);
  EXPECT_EQ(quasi.reason, VerdictReason::dependent_products);
  EXPECT_EQ(quasi.expected_rank, 4);
  EXPECT_LT(quasi.rank, 4);
  EXPECT_LT(quasi.min_singular_value, 1e-12);
}

// Independent check with a plain SVD: the four products A_k^dag A_l are
// linearly dependent at the quasi-extreme point.
TEST(Extremality, QuasiPointProductOracle) {
  const auto a = s3_quasi_point();
  Matrix m(9, 4);
  int col = 0;
  for (int k = 0; k < 2; ++k)
    for (int l = 0; l < 2; ++l) m.col(col++) = vec_row_major(a[k].adjoint() * a[l]);
  const RealVector s = Eigen::JacobiSVD<Matrix>(m).singularValues();
  EXPECT_GT(s(2) / s(0), 1e-3);
  EXPECT_LT(s(3) / s(0), 1e-14);
}

TEST(Extremality, TooManyKraus) {
  Rng rng(2);
  const auto v = test_extreme(KrausSet(testing::random_full_rank_channel(rng, 3)));
  EXPECT_FALSE(v.is_extreme);
  EXPECT_EQ(v.reason, VerdictReason::too_many_kraus);
  EXPECT_EQ(v.kraus_count, 9);
}

TEST(Extremality, RequiresTracePreservation) {
  EXPECT_THROW(
      try { test_extreme(KrausSet({2.0 * Matrix::Identity(2, 2)})); } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotTracePreserving);
        throw;
      },
      Error);
}

TEST(Extremality, RankBounds) {
  for (const auto& f : fixtures()) {
    const auto v = test_extreme(KrausSet(f.kraus));
    EXPECT_EQ(v.is_extreme, f.extreme) << f.name;
    EXPECT_LE(v.rank, std::min(v.expected_rank, KrausSet(f.kraus).d() * KrausSet(f.kraus).d()));
    EXPECT_EQ(v.expected_rank, v.kraus_count * v.kraus_count);
  }
}

TEST(Extremality, UnitaryConjugationInvariance) {
  Rng rng(3);
  for (const auto& f : fixtures()) {
    const KrausSet k(f.kraus);
    for (int trial = 0; trial < 20; ++trial) {
      const KrausSet c = conjugate(k, random_unitary(rng, k.d()), random_unitary(rng, k.d()));
      const auto v = test_extreme(c);
      EXPECT_EQ(v.is_extreme, f.extreme) << f.name;
      EXPECT_EQ(v.rank, test_extreme(k).rank) << f.name;
    }
  }
}

TEST(Extremality, KrausMixingInvariance) {
  Rng rng(4);
  for (const auto& f : fixtures()) {
    const auto K = static_cast<Eigen::Index>(f.kraus.size());
    for (int trial = 0; trial < 20; ++trial) {
      const Matrix w = random_unitary(rng, K);
      std::vector<Matrix> mixed;
      for (Eigen::Index l = 0; l < K; ++l) {
        Matrix m = Matrix::Zero(f.kraus[0].rows(), f.kraus[0].cols());
        for (Eigen::Index k = 0; k < K; ++k) m += w(l, k) * f.kraus[static_cast<size_t>(k)];
        mixed.push_back(m);
      }
      EXPECT_LT(testing::choi_distance(mixed, f.kraus), 1e-13);
      EXPECT_EQ(test_extreme(KrausSet(mixed)).is_extreme, f.extreme) << f.name;
    }
  }
}

TEST(Extremality, StableUnderTinyNoise) {
  Rng rng(5);
  for (const auto& f : fixtures()) {
    if (!f.extreme) continue;
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<Matrix> noisy = f.kraus;
      for (auto& a : noisy) {
        Matrix e(a.rows(), a.cols());
        for (Eigen::Index j = 0; j < a.cols(); ++j) e.col(j) = random_complex_vector(rng, a.rows());
        a += 1e-12 * e / e.norm();
      }
      EXPECT_TRUE(test_extreme(KrausSet(noisy), 1e-8, 1e-8).is_extreme) << f.name;
    }
  }
}

TEST(Extremality, DuplicatedKrausIsReduced) {
  const auto a = testing::a4_constant_kraus();
  std::vector<Matrix> doubled;
  for (const auto& m : a) {
    doubled.push_back(m / std::sqrt(2.0));
    doubled.push_back(m / std::sqrt(2.0));
  }
  const auto v = test_extreme(KrausSet(doubled));
  EXPECT_TRUE(v.is_extreme);
  EXPECT_EQ(v.kraus_count, 3);
}

KernelFamily family_for(const std::string& group, int d, std::vector<int> p, int omega) {
  const GroupSpec spec = lookup(group, d);
  const Rep r = materialize(spec, make_label(spec, std::move(p)));
  return joint_nullspace(build_system(spec.kind, r, r, spec.irrep(omega)));
}

TEST(Extremality, SweepFindsS3Locus) {
  const KernelFamily fam = family_for("S3", 3, {0, 2}, 2);
  const auto report = solve_tp(fam);
  const TpManifold manifold(fam, report);
  SweepOptions opt;
  opt.seed = 1;
  const auto result = sweep_family(manifold, opt);
  EXPECT_GE(result.grid.size(), 64u);
  ASSERT_FALSE(result.rank_drop_points.empty());
  const auto direction = testing::s3_family(1, 0, 0);
  const auto gdir = testing::s3_family(0, 0, 1);
  const Vector r = kraus_to_vec(direction), rg = kraus_to_vec(gdir);
  for (const auto& p : result.rank_drop_points) {
    EXPECT_FALSE(p.verdict.is_extreme);
    const Vector v = fam.basis * p.coefficients;
    const double alpha_sq = std::norm(r.dot(v) / r.squaredNorm());
    const double gamma_sq = std::norm(rg.dot(v) / rg.squaredNorm());
    EXPECT_NEAR(alpha_sq, 0.5, 1e-4);
    EXPECT_NEAR(gamma_sq, 0.25, 1e-4);
  }
  // Every grid point away from the locus is extreme.
  for (const auto& p : result.grid) {
    const double alpha_sq = std::norm(r.dot(fam.basis * p.coefficients) / r.squaredNorm());
    if (std::abs(alpha_sq - 0.5) > 1e-3) EXPECT_TRUE(p.verdict.is_extreme) << alpha_sq;
  }
}

TEST(Extremality, SweepWithoutRankDrops) {
  for (const auto& fam : {family_for("SO3", 3, {1}, 1), family_for("Z2", 2, {0, 1}, 0)}) {
    const auto report = solve_tp(fam);
    ASSERT_EQ(report.status, TpStatus::solved);
    const TpManifold manifold(fam, report);
    SweepOptions opt;
    opt.grid_size = 32;
    const auto result = sweep_family(manifold, opt);
    EXPECT_TRUE(result.rank_drop_points.empty());
    for (const auto& p : result.grid) EXPECT_TRUE(p.verdict.is_extreme);
  }
}

TEST(Extremality, EmptyManifold) {
  const KernelFamily fam = family_for("Z2", 2, {0, 0}, 1);
  const auto report = solve_tp(fam);
  EXPECT_THROW(
      {
        const TpManifold manifold(fam, report);
        sweep_family(manifold);
      },
      Error);
}

}  // namespace
}  // namespace gcec
