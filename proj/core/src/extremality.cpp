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

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include "gcec/error.hpp"

namespace gcec {

namespace {

// Gram eigenvalues are squared singular values, so this keeps operators down
// to about 1e-7 of the largest one.
constexpr double kDependenceTol = 1e-14;

bool kraus_independent(const KrausSet& kraus) {
  const int K = kraus.K();
  Matrix gram(K, K);
  for (int k = 0; k < K; ++k)
    for (int l = 0; l < K; ++l) gram(k, l) = (kraus[k].adjoint() * kraus[l]).trace();
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (gram + gram.adjoint()), Eigen::EigenvaluesOnly);
  const RealVector ev = es.eigenvalues();
  return ev.minCoeff() > kDependenceTol * ev.maxCoeff();
}

double relative_sigma(const ExtremalityVerdict& v) { return v.min_singular_value; }

// Downhill simplex on f; returns the best vertex.
RealVector nelder_mead(const std::function<double(const RealVector&)>& f, const RealVector& x0,
                       double step, int max_evals) {
  const auto n = x0.size();
  std::vector<RealVector> simplex(static_cast<size_t>(n + 1), x0);
  std::vector<double> values(static_cast<size_t>(n + 1));
  for (Eigen::Index i = 0; i < n; ++i) simplex[static_cast<size_t>(i + 1)](i) += step;
  int evals = 0;
  for (size_t i = 0; i < simplex.size(); ++i, ++evals) values[i] = f(simplex[i]);

  std::vector<size_t> order(simplex.size());
  while (evals < max_evals) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return values[a] < values[b]; });
    const size_t best = order.front(), worst = order.back(), second = order[order.size() - 2];
    if (values[worst] - values[best] <= 1e-30 + 1e-14 * std::abs(values[best])) break;

    RealVector centroid = RealVector::Zero(n);
    for (size_t i = 0; i + 1 < order.size(); ++i) centroid += simplex[order[i]];
    centroid /= static_cast<double>(n);

    const RealVector xr = centroid + (centroid - simplex[worst]);
    const double fr = f(xr);
    ++evals;
    if (fr < values[best]) {
      const RealVector xe = centroid + 2.0 * (centroid - simplex[worst]);
      const double fe = f(xe);
      ++evals;
      if (fe < fr) {
        simplex[worst] = xe;
        values[worst] = fe;
      } else {
        simplex[worst] = xr;
        values[worst] = fr;
      }
      continue;
    }
    if (fr < values[second]) {
      simplex[worst] = xr;
      values[worst] = fr;
      continue;
    }
    const bool outside = fr < values[worst];
    const RealVector xc = outside ? RealVector(centroid + 0.5 * (xr - centroid))
                                  : RealVector(centroid + 0.5 * (simplex[worst] - centroid));
    const double fc = f(xc);
    ++evals;
    if (fc < std::min(fr, values[worst])) {
      simplex[worst] = xc;
      values[worst] = fc;
      continue;
    }
    for (size_t i = 0; i < simplex.size(); ++i) {
      if (i == best) continue;
      simplex[i] = simplex[best] + 0.5 * (simplex[i] - simplex[best]);
      values[i] = f(simplex[i]);
      ++evals;
    }
  }
  const auto it = std::min_element(values.begin(), values.end());
  return simplex[static_cast<size_t>(it - values.begin())];
}

}  // namespace

std::string_view to_string(VerdictReason reason) {
  switch (reason) {
    case VerdictReason::independent: return "independent";
    case VerdictReason::dependent_products: return "dependent_products";
    case VerdictReason::too_many_kraus: return "too_many_kraus";
  }
  return "unknown";
}

ExtremalityVerdict test_extreme(const KrausSet& input, double tol_rank, double tol_tp) {
  const double tp = input.tp_residual();
  if (!(tp <= tol_tp))
    throw Error(ErrorCode::NotTracePreserving,
                "trace-preservation residual " + std::to_string(tp) + " exceeds tolerance");
  const KrausSet kraus = kraus_independent(input) ? input : minimal_kraus(input);
  const int K = kraus.K();
  const int d = kraus.d();

  Matrix products(static_cast<Eigen::Index>(d) * d, static_cast<Eigen::Index>(K) * K);
  for (int k = 0; k < K; ++k)
    for (int l = 0; l < K; ++l) products.col(k * K + l) = vec_row_major(kraus[k].adjoint() * kraus[l]);
  const RealVector sigma = singular_values(products);

  ExtremalityVerdict v;
  v.kraus_count = K;
  v.expected_rank = K * K;
  v.rank = numerical_rank(sigma, tol_rank);
  if (K * K <= sigma.size() && sigma(0) > 0)
    v.min_singular_value = sigma(K * K - 1) / sigma(0);
  if (K > d) {
    v.reason = VerdictReason::too_many_kraus;
    v.is_extreme = false;
    v.min_singular_value = 0.0;
    return v;
  }
  v.is_extreme = v.rank == v.expected_rank;
  v.reason = v.is_extreme ? VerdictReason::independent : VerdictReason::dependent_products;
  return v;
}

SweepResult sweep_family(const TpManifold& manifold, const SweepOptions& options) {
  const KernelFamily& family = manifold.family();
  Rng rng(options.seed);
  SweepResult result;
  std::vector<RealVector> params;

  for (int i = 0; i < options.grid_size; ++i) {
    std::optional<Vector> c;
    RealVector p;
    for (int attempt = 0; attempt < 8 && !c; ++attempt) {
      p = manifold.random_params(rng);
      c = manifold.point(p);
    }
    if (!c) continue;
    const Vector g = fix_phase_gauge(*c);
    result.grid.push_back({g, test_extreme(kraus_at(family, g), options.tol_rank)});
    params.push_back(p);
  }
  if (result.grid.empty()) throw Error(ErrorCode::EmptyManifold, "no trace-preserving samples");
  for (const auto& pt : result.grid) {
    if (pt.verdict.is_extreme) continue;
    const ExtremalityVerdict v = test_extreme(kraus_at(family, pt.coefficients), 0.1 * options.tol_rank);
    if (!v.is_extreme) result.rank_drop_points.push_back({pt.coefficients, v});
  }
  if (family.K == 1 || manifold.dimension() == 0) return result;

  std::vector<size_t> order(result.grid.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return relative_sigma(result.grid[a].verdict) < relative_sigma(result.grid[b].verdict);
  });

  auto objective = [&](const RealVector& p) {
    const auto c = manifold.point(p);
    if (!c) return 1e6;
    const double s = test_extreme(kraus_at(family, *c), options.tol_rank, 1e-6).min_singular_value;
    return s * s;
  };

  const size_t n_refine = std::min(order.size(), static_cast<size_t>(std::max(0, options.max_refinements)));
  for (size_t r = 0; r < n_refine; ++r) {
    RealVector p = params[order[r]];
    double step = 0.2;
    for (int round = 0; round < 4; ++round) {
      p = nelder_mead(objective, p, step, options.refine_iterations / 4);
      step *= 0.1;
    }
    const auto c = manifold.point(p);
    if (!c) continue;
    const Vector g = fix_phase_gauge(*c);
    const KrausSet k = kraus_at(family, g);
    if (k.tp_residual() > 1e-8) continue;
    const ExtremalityVerdict v = test_extreme(k, 0.1 * options.tol_rank);
    if (v.is_extreme) continue;
    bool dup = false;
    for (const auto& q : result.rank_drop_points) dup = dup || (q.coefficients - g).norm() < 1e-6;
    if (dup) continue;
    result.rank_drop_points.push_back({g, v});
    result.grid.push_back({g, v});
  }
  return result;
}

}  // namespace gcec
