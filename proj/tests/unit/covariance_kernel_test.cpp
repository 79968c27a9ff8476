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


#include "gcec/covariance_kernel.hpp"

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "gcec/error.hpp"

namespace gcec {
namespace {

struct Instance {
  GroupSpec spec;
  Rep d1;
  Rep d2;
  Irrep omega;
};

Instance make_instance(const std::string& group, int d, std::vector<int> p1, std::vector<int> p2, int omega) {
  GroupSpec spec = lookup(group, d);
  Rep r1 = materialize(spec, make_label(spec, std::move(p1)));
  Rep r2 = materialize(spec, make_label(spec, std::move(p2)));
  Irrep w = spec.irrep(omega);
  return {std::move(spec), std::move(r1), std::move(r2), std::move(w)};
}

KernelFamily kernel_of(const Instance& in) {
  return joint_nullspace(build_system(in.spec.kind, in.d1, in.d2, in.omega));
}

Matrix span_of(const std::vector<std::vector<Matrix>>& sets) {
  Matrix m(sets.front().size() * sets.front().front().size(), static_cast<Eigen::Index>(sets.size()));
  for (size_t i = 0; i < sets.size(); ++i) m.col(static_cast<Eigen::Index>(i)) = kraus_to_vec(sets[i]);
  return column_span(m, 1e-12);
}

TEST(CovarianceKernel, Z2TrivialSystemIsZero) {
  const auto in = make_instance("Z2", 2, {0, 0}, {0, 0}, 0);
  const auto sys = build_discrete_system(in.d1.generators, in.d2.generators, in.omega.generators);
  ASSERT_EQ(sys.matrices.size(), 1u);
  EXPECT_EQ(sys.matrices[0].norm(), 0.0);
  EXPECT_EQ(joint_nullspace(sys).n_params(), 4);
}

TEST(CovarianceKernel, Z2SignOmegaIsFullRank) {
  const auto in = make_instance("Z2", 2, {0, 0}, {0, 0}, 1);
  const auto sys = build_discrete_system(in.d1.generators, in.d2.generators, in.omega.generators);
  EXPECT_LT((sys.matrices[0] - 2.0 * Matrix::Identity(4, 4)).norm(), 1e-15);
  EXPECT_EQ(joint_nullspace(sys).n_params(), 0);
}

TEST(CovarianceKernel, S3QutritSystem) {
  const auto in = make_instance("S3", 3, {0, 2}, {0, 2}, 2);
  const auto sys = build_system(in.spec.kind, in.d1, in.d2, in.omega);
  ASSERT_EQ(sys.matrices.size(), 2u);
  for (const auto& m : sys.matrices) {
    EXPECT_EQ(m.rows(), 18);
    EXPECT_EQ(m.cols(), 18);
  }
  const KernelFamily fam = joint_nullspace(sys);
  EXPECT_EQ(fam.n_params(), 3);
  const Matrix reference = span_of({testing::s3_family(1, 0, 0), testing::s3_family(0, 1, 0),
                                    testing::s3_family(0, 0, 1)});
  EXPECT_EQ(reference.cols(), 3);
  EXPECT_LE(subspace_distance(fam.basis, reference), 1e-9);
}

TEST(CovarianceKernel, So3QutritMatchesRankOneTensors) {
  const auto in = make_instance("SO3", 3, {1}, {1}, 1);
  const KernelFamily fam = kernel_of(in);
  EXPECT_EQ(fam.n_params(), 1);
  EXPECT_LE(subspace_distance(fam.basis, span_of({testing::to_kernel_order(testing::so3_qutrit_kraus(1.0))})), 1e-9);
}

TEST(CovarianceKernel, So3QuquintMatchesRankTwoTensors) {
  const auto in = make_instance("SO3", 5, {2}, {2}, 2);
  const KernelFamily fam = kernel_of(in);
  EXPECT_EQ(fam.n_params(), 1);
  EXPECT_LE(subspace_distance(fam.basis, span_of({testing::to_kernel_order(testing::so3_ququint_kraus(1.0))})), 1e-9);
}

TEST(CovarianceKernel, Su2SingletFamilyContainsClosedForm) {
  for (int d = 2; d <= 5; ++d) {
    const auto in = make_instance("SU2", d, {0, d - 2}, {0, d - 2}, d - 2);
    const KernelFamily fam = kernel_of(in);
    const Vector v = kraus_to_vec(testing::to_kernel_order(testing::su2_singlet_kraus(d)));
    EXPECT_LE((fam.basis * (fam.basis.adjoint() * v) - v).norm(), 1e-10) << d;
  }
}

TEST(CovarianceKernel, Su2EvenCaseOneIsEmpty) {
  const auto in = make_instance("SU2", 2, {1}, {1}, 1);
  EXPECT_EQ(kernel_of(in).n_params(), 0);
}

TEST(CovarianceKernel, So3TrivialRepsUnconstrained) {
  const auto in = make_instance("SO3", 3, {0, 0, 0}, {0, 0, 0}, 0);
  const auto sys = build_system(in.spec.kind, in.d1, in.d2, in.omega);
  for (const auto& m : sys.matrices) EXPECT_EQ(m.norm(), 0.0);
  EXPECT_EQ(joint_nullspace(sys).n_params(), 9);
}

TEST(CovarianceKernel, DimMismatch) {
  const auto in = make_instance("S3", 3, {0, 2}, {0, 2}, 2);
  const GroupSpec small = lookup("S3", 2);
  const Rep two = materialize(small, make_label(small, {0, 1}));
  EXPECT_THROW(build_system(GroupKind::discrete, in.d1, two, in.omega), Error);
}

TEST(CovarianceKernel, VecToKrausExamples) {
  Vector e0 = Vector::Zero(4);
  e0(0) = 1.0;
  const auto one = vec_to_kraus(e0, 1, 2);
  ASSERT_EQ(one.size(), 1u);
  Matrix expect = Matrix::Zero(2, 2);
  expect(0, 0) = 1.0;
  EXPECT_EQ(one[0], expect);

  Vector v(8);
  for (int i = 0; i < 8; ++i) v(i) = double(i);
  const auto two = vec_to_kraus(v, 2, 2);
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0](0, 1), Complex(1.0));
  EXPECT_EQ(two[0](1, 0), Complex(2.0));
  EXPECT_EQ(two[1](0, 0), Complex(4.0));
  EXPECT_EQ(two[1](1, 1), Complex(7.0));

  EXPECT_THROW(
      try { vec_to_kraus(Vector::Zero(7), 2, 2); } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::LengthMismatch);
        throw;
      },
      Error);
}

TEST(CovarianceKernel, VecRoundTrip) {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Vector v = random_complex_vector(rng, 3 * 16);
    const auto ops = vec_to_kraus(v, 3, 4);
    EXPECT_EQ(kraus_to_vec(ops), v);
  }
}

// Instances spanning every catalog family used in the worked examples.
std::vector<Instance> property_instances() {
  return {make_instance("S3", 3, {0, 2}, {0, 2}, 2),   make_instance("A4", 3, {3}, {3}, 3),
          make_instance("D5", 3, {0, 2}, {0, 2}, 2),   make_instance("D5", 3, {0, 3}, {0, 3}, 3),
          make_instance("SO3", 3, {1}, {1}, 1),        make_instance("SO3", 5, {2}, {2}, 2),
          make_instance("SU2", 4, {0, 2}, {0, 2}, 2),  make_instance("S3", 3, {0, 1, 1}, {0, 2}, 1)};
}

TEST(CovarianceKernel, BasisIsCovariantAndOrthonormal) {
  for (const auto& in : property_instances()) {
    const auto sys = build_system(in.spec.kind, in.d1, in.d2, in.omega);
    const KernelFamily fam = joint_nullspace(sys);
    const int n = fam.n_params();
    EXPECT_LT((fam.basis.adjoint() * fam.basis - Matrix::Identity(n, n)).norm(), 1e-10);
    int min_nullity = fam.K * fam.d * fam.d;
    for (const auto& m : sys.matrices) {
      min_nullity = std::min(min_nullity, static_cast<int>(nullspace(m, 1e-10).cols()));
      for (int j = 0; j < n; ++j) EXPECT_LE((m * fam.basis.col(j)).norm(), 1e-10);
    }
    EXPECT_LE(n, min_nullity);
    for (int j = 0; j < n; ++j) {
      const auto ops = vec_to_kraus(fam.basis.col(j), fam.K, fam.d);
      EXPECT_LE(covariance_residual(in.spec.kind, ops, in.d1.generators, in.d2.generators,
                                    in.omega.generators),
                1e-9);
    }
  }
}

// Rotating Omega by U moves the kernel by U (x) 1.
TEST(CovarianceKernel, OmegaConjugationMovesKernel) {
  Rng rng(2024);
  for (const auto& in : property_instances()) {
    const KernelFamily fam = kernel_of(in);
    const int K = in.omega.dim, d = in.d1.label.total_dim;
    for (int trial = 0; trial < 20; ++trial) {
      const Matrix u = random_unitary(rng, K);
      std::vector<Matrix> rotated;
      for (const auto& g : in.omega.generators) rotated.push_back(u * g * u.adjoint());
      const KernelFamily moved = joint_nullspace(in.spec.kind == GroupKind::lie
                                                     ? build_lie_system(in.d1.generators, in.d2.generators, rotated)
                                                     : build_discrete_system(in.d1.generators, in.d2.generators, rotated));
      ASSERT_EQ(moved.n_params(), fam.n_params());
      const Matrix transported = kron(u, Matrix::Identity(d * d, d * d)) * fam.basis;
      EXPECT_LE(subspace_distance(moved.basis, transported), 1e-9);
    }
  }
}

// Changing the bases of D1 and D2 moves each Kraus operator to U2 A U1^dag.
TEST(CovarianceKernel, RepresentationBasisChangeMovesKernel) {
  Rng rng(7);
  for (const auto& in : property_instances()) {
    const KernelFamily fam = kernel_of(in);
    const int K = in.omega.dim, d = in.d1.label.total_dim;
    for (int trial = 0; trial < 20; ++trial) {
      const Matrix u1 = random_unitary(rng, d), u2 = random_unitary(rng, d);
      std::vector<Matrix> g1, g2;
      for (const auto& g : in.d1.generators) g1.push_back(u1 * g * u1.adjoint());
      for (const auto& g : in.d2.generators) g2.push_back(u2 * g * u2.adjoint());
      const KernelFamily moved = joint_nullspace(in.spec.kind == GroupKind::lie
                                                     ? build_lie_system(g1, g2, in.omega.generators)
                                                     : build_discrete_system(g1, g2, in.omega.generators));
      ASSERT_EQ(moved.n_params(), fam.n_params());
      Matrix transported(fam.basis.rows(), fam.basis.cols());
      for (int j = 0; j < fam.n_params(); ++j) {
        auto ops = vec_to_kraus(fam.basis.col(j), K, d);
        for (auto& a : ops) a = u2 * a * u1.adjoint();
        transported.col(j) = kraus_to_vec(ops);
      }
      EXPECT_LE(subspace_distance(moved.basis, transported), 1e-9);
    }
  }
}

}  // namespace
}  // namespace gcec
