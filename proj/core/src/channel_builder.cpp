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

#include "gcec/channel_builder.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "gcec/error.hpp"
#include "least_squares.hpp"

namespace gcec {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kStructuralTol = 1e-10;
constexpr double kModuliTol = 1e-9;
constexpr std::uint64_t kDecouplingSeed = 0x5eed'c0de'2024ULL;

using BasisKraus = std::vector<std::vector<Matrix>>;  // [param][kraus]

BasisKraus basis_kraus(const KernelFamily& family) {
  BasisKraus out;
  out.reserve(static_cast<size_t>(family.n_params()));
  for (int j = 0; j < family.n_params(); ++j)
    out.push_back(vec_to_kraus(family.basis.col(j), family.K, family.d));
  return out;
}

// Packs a Hermitian matrix into d^2 reals whose Euclidean norm equals its
// Frobenius norm: diagonal real parts, then sqrt(2) Re/Im of the upper part.
void pack_hermitian(const Matrix& h, RealVector& out, Eigen::Index at) {
  const auto n = h.rows();
  for (Eigen::Index p = 0; p < n; ++p) out(at++) = h(p, p).real();
  for (Eigen::Index p = 0; p < n; ++p)
    for (Eigen::Index q = p + 1; q < n; ++q) {
      out(at++) = kSqrt2 * h(p, q).real();
      out(at++) = kSqrt2 * h(p, q).imag();
    }
}

Vector to_complex(const RealVector& x) {
  const auto n = x.size() / 2;
  Vector c(n);
  for (Eigen::Index j = 0; j < n; ++j) c(j) = Complex(x(j), x(n + j));
  return c;
}

RealVector to_real(const Vector& c) {
  RealVector x(2 * c.size());
  x.head(c.size()) = c.real();
  x.tail(c.size()) = c.imag();
  return x;
}

std::vector<Matrix> combine(const BasisKraus& basis, const Vector& c, int K, int d) {
  std::vector<Matrix> a(static_cast<size_t>(K), Matrix::Zero(d, d));
  for (size_t j = 0; j < basis.size(); ++j)
    for (int k = 0; k < K; ++k) a[static_cast<size_t>(k)] += c(static_cast<Eigen::Index>(j)) * basis[j][static_cast<size_t>(k)];
  return a;
}

Matrix xi_from(const std::vector<Matrix>& a, int d) {
  Matrix x = Matrix::Zero(d, d);
  for (const auto& m : a) x.noalias() += m.adjoint() * m;
  return x;
}

// Residual and Jacobian of Xi(c) - 1 over real coordinates (Re c, Im c).
detail::LeastSquaresProblem tp_problem(const BasisKraus& basis, int K, int d) {
  const int n = static_cast<int>(basis.size());
  detail::LeastSquaresProblem prob;
  prob.n_params = 2 * n;
  prob.n_residuals = d * d;
  prob.residual = [&basis, K, d](const RealVector& x, RealVector& r) {
    const auto a = combine(basis, to_complex(x), K, d);
    pack_hermitian(xi_from(a, d) - Matrix::Identity(d, d), r, 0);
  };
  prob.jacobian = [&basis, K, d, n](const RealVector& x, RealMatrix& jac) {
    const auto a = combine(basis, to_complex(x), K, d);
    RealVector col(d * d);
    for (int j = 0; j < n; ++j) {
      Matrix g = Matrix::Zero(d, d);
      for (int k = 0; k < K; ++k) g.noalias() += a[static_cast<size_t>(k)].adjoint() * basis[static_cast<size_t>(j)][static_cast<size_t>(k)];
      pack_hermitian(g + g.adjoint(), col, 0);
      jac.col(j) = col;
      pack_hermitian(Complex(0, 1) * (g - g.adjoint()), col, 0);
      jac.col(n + j) = col;
    }
  };
  return prob;
}

double tp_residual_of(const BasisKraus& basis, const Vector& c, int K, int d) {
  return (xi_from(combine(basis, c, K, d), d) - Matrix::Identity(d, d)).norm();
}

// Column p of every basis Kraus operator, stacked: rows (k, r), columns j.
// Then Xi_pq(c) = c^dag X_p^dag X_q c.
std::vector<Matrix> column_stacks(const BasisKraus& basis, int K, int d) {
  const int n = static_cast<int>(basis.size());
  std::vector<Matrix> xs(static_cast<size_t>(d), Matrix(K * d, n));
  for (int p = 0; p < d; ++p)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < K; ++k)
        xs[static_cast<size_t>(p)].block(k * d, j, d, 1) = basis[static_cast<size_t>(j)][static_cast<size_t>(k)].col(p);
  return xs;
}

bool contains(const std::vector<Vector>& found, const Vector& c) {
  const double scale = std::max(1.0, c.norm());
  for (const auto& f : found)
    if ((f - c).norm() <= 1e-7 * scale) return true;
  return false;
}

std::string format_weight(double w) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", w);
  return buf;
}

std::vector<std::string> moduli_equations(const RealMatrix& w) {
  std::vector<std::string> out;
  std::vector<RealVector> seen;
  for (Eigen::Index p = 0; p < w.rows(); ++p) {
    const RealVector row = w.row(p).transpose();
    bool dup = false;
    for (const auto& s : seen) dup = dup || (s - row).norm() <= 1e-9;
    if (dup) continue;
    seen.push_back(row);
    std::string eq;
    for (Eigen::Index j = 0; j < row.size(); ++j) {
      if (row(j) <= 1e-12) continue;
      if (!eq.empty()) eq += " + ";
      if (std::abs(row(j) - 1.0) > 1e-12) eq += format_weight(row(j));
      eq += "|z" + std::to_string(j) + "|^2";
    }
    if (eq.empty()) eq = "0";
    out.push_back(eq + " = 1");
  }
  return out;
}

// Tries to write Xi as a diagonal form in decoupled moduli.
std::optional<ModuliSystem> decouple(const std::vector<Matrix>& xs, int n) {
  const auto d = xs.size();
  std::vector<Matrix> forms;
  forms.reserve(d);
  for (const auto& x : xs) forms.push_back(x.adjoint() * x);

  Rng rng(kDecouplingSeed);
  std::uniform_real_distribution<double> unit(0.5, 1.5);
  Matrix mix = Matrix::Zero(n, n);
  for (const auto& f : forms) mix += unit(rng) * f;
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (mix + mix.adjoint()));
  const Matrix u = es.eigenvectors();

  ModuliSystem sys;
  sys.rotation = u;
  sys.weights.resize(static_cast<Eigen::Index>(d), n);
  for (size_t p = 0; p < d; ++p) {
    Matrix t = u.adjoint() * forms[p] * u;
    const RealVector diag = t.diagonal().real();
    t.diagonal().setZero();
    if (t.norm() > kStructuralTol) return std::nullopt;
    for (Eigen::Index j = 0; j < n; ++j)
      sys.weights(static_cast<Eigen::Index>(p), j) = std::abs(diag(j)) < 1e-13 ? 0.0 : diag(j);
  }
  return sys;
}

Vector linear_coefficients(const ModuliSystem& sys, const RealVector& moduli, const RealVector& phases) {
  Vector z(moduli.size());
  for (Eigen::Index j = 0; j < moduli.size(); ++j)
    z(j) = std::polar(std::sqrt(std::max(moduli(j), 0.0)), phases(j));
  return sys.rotation * z;
}

RealVector hit_and_run(const ModuliSystem& sys, Rng& rng, int steps) {
  RealVector x = sys.particular;
  const auto m = sys.null_directions.cols();
  if (m == 0) return x;
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int s = 0; s < steps; ++s) {
    RealVector g(m);
    for (Eigen::Index i = 0; i < m; ++i) g(i) = normal(rng);
    const RealVector dir = sys.null_directions * g.normalized();
    double lo = -INFINITY, hi = INFINITY;
    for (Eigen::Index j = 0; j < x.size(); ++j) {
      if (dir(j) > 1e-14) lo = std::max(lo, -x(j) / dir(j));
      if (dir(j) < -1e-14) hi = std::min(hi, -x(j) / dir(j));
    }
    if (!(lo <= hi) || !std::isfinite(lo) || !std::isfinite(hi)) continue;
    x += (lo + (hi - lo) * unit(rng)) * dir;
    x = x.cwiseMax(0.0);
  }
  return x;
}

RealVector random_phases(Rng& rng, Eigen::Index n) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  RealVector p(n);
  for (Eigen::Index j = 0; j < n; ++j) p(j) = angle(rng);
  return p;
}

Vector random_start(Rng& rng, int n, int d) {
  Vector c = random_complex_vector(rng, n);
  return c * (std::sqrt(static_cast<double>(d)) / c.norm());
}

}  // namespace

std::string_view to_string(TpStatus status) {
  switch (status) {
    case TpStatus::solved: return "solved";
    case TpStatus::no_solution: return "no_solution";
    case TpStatus::solver_failed: return "solver_failed";
  }
  return "unknown";
}

std::string_view to_string(TpPath path) {
  switch (path) {
    case TpPath::empty_family: return "empty_family";
    case TpPath::certificate: return "certificate";
    case TpPath::linear: return "linear";
    case TpPath::nonlinear: return "nonlinear";
  }
  return "unknown";
}

Matrix xi_of(const Vector& c, const KernelFamily& family) {
  return xi_from(family_kraus(family, c), family.d);
}

bool diagonal_structure(const KernelFamily& family, double tol) {
  const auto xs = column_stacks(basis_kraus(family), family.K, family.d);
  for (int p = 0; p < family.d; ++p)
    for (int q = p + 1; q < family.d; ++q)
      if ((xs[static_cast<size_t>(p)].adjoint() * xs[static_cast<size_t>(q)]).cwiseAbs().maxCoeff() > tol) return false;
  return true;
}

KrausSet kraus_at(const KernelFamily& family, const Vector& c) {
  return KrausSet(family_kraus(family, c));
}

std::optional<Vector> project_to_tp(const KernelFamily& family, const Vector& c, double tol_tp) {
  if (c.size() != family.n_params())
    throw Error(ErrorCode::LengthMismatch, "coefficient vector length does not match the family");
  const auto basis = basis_kraus(family);
  const auto prob = tp_problem(basis, family.K, family.d);
  const Vector out = to_complex(detail::minimize_least_squares(prob, to_real(c)));
  if (!out.allFinite() || tp_residual_of(basis, out, family.K, family.d) > tol_tp) return std::nullopt;
  return out;
}

TpSolveReport solve_tp(const KernelFamily& family, const TpOptions& options) {
  using Clock = std::chrono::steady_clock;
  const auto started = Clock::now();
  const int n = family.n_params();
  const int K = family.K;
  const int d = family.d;
  TpSolveReport report;

  if (n == 0) {
    report.path = TpPath::empty_family;
    report.note = "kernel is trivial";
    return report;
  }

  const auto basis = basis_kraus(family);
  const auto xs = column_stacks(basis, K, d);

  report.xi_diagonal = true;
  for (int p = 0; p < d && report.xi_diagonal; ++p)
    for (int q = p + 1; q < d; ++q)
      if ((xs[static_cast<size_t>(p)].adjoint() * xs[static_cast<size_t>(q)]).cwiseAbs().maxCoeff() > 1e-12) {
        report.xi_diagonal = false;
        break;
      }

  // Structural certificates: Xi(c) is singular for every c.
  {
    Matrix rows(static_cast<Eigen::Index>(n) * K * d, d);
    Matrix cols(d, static_cast<Eigen::Index>(n) * K * d);
    Eigen::Index at = 0;
    for (const auto& per_param : basis)
      for (const auto& b : per_param) {
        rows.middleRows(at, d) = b;
        cols.middleCols(at, d) = b;
        at += d;
      }
    if (nullspace(rows, kStructuralTol).cols() > 0) {
      report.status = TpStatus::no_solution;
      report.path = TpPath::certificate;
      report.note = "a nonzero vector is annihilated by every Kraus operator of the family";
      return report;
    }
    const auto image_rank = column_span(cols, kStructuralTol).cols();
    if (static_cast<Eigen::Index>(K) * image_rank < d) {
      report.status = TpStatus::no_solution;
      report.path = TpPath::certificate;
      report.note = "K times the rank of the joint image is below d";
      return report;
    }
  }

  Rng rng(options.seed);

  // rank Xi(c) equals the rank of the stacked Kraus operators, whose generic
  // value is attained at random c with probability one.
  {
    Rng probe(kDecouplingSeed ^ options.seed);
    Eigen::Index generic_rank = 0;
    for (int t = 0; t < 3; ++t) {
      const auto a = combine(basis, random_start(probe, n, d), K, d);
      Matrix stacked(static_cast<Eigen::Index>(K) * d, d);
      for (int k = 0; k < K; ++k) stacked.middleRows(k * d, d) = a[static_cast<size_t>(k)];
      generic_rank = std::max<Eigen::Index>(generic_rank, numerical_rank(singular_values(stacked), kStructuralTol));
    }
    if (generic_rank < d) {
      report.status = TpStatus::no_solution;
      report.path = TpPath::certificate;
      report.note = "Xi(c) has rank at most " + std::to_string(generic_rank) + " < d for every c";
      return report;
    }
  }

  if (report.xi_diagonal) {
    if (auto sys = decouple(xs, n)) {
      report.path = TpPath::linear;
      const RealVector ones = RealVector::Ones(d);
      sys->particular = detail::nonnegative_least_squares(sys->weights, ones);
      const double miss = (sys->weights * sys->particular - ones).norm();
      report.moduli_constraints = moduli_equations(sys->weights);
      for (int j = 0; j < n; ++j) report.free_phase.push_back(j);
      if (miss > kModuliTol) {
        report.status = TpStatus::no_solution;
        report.note = "moduli system has no nonnegative solution";
        report.moduli = std::move(sys);
        return report;
      }
      Eigen::JacobiSVD<RealMatrix> svd(sys->weights, Eigen::ComputeFullV);
      const int r = numerical_rank(svd.singularValues(), kStructuralTol);
      sys->null_directions = svd.matrixV().rightCols(n - r);

      std::vector<Vector> candidates;
      candidates.push_back(linear_coefficients(*sys, sys->particular, RealVector::Zero(n)));
      for (int s = 1; s < std::max(1, options.max_solutions) * 4; ++s) {
        const RealVector x = hit_and_run(*sys, rng, 16);
        candidates.push_back(linear_coefficients(*sys, x, random_phases(rng, n)));
      }
      for (auto& c : candidates) {
        if (static_cast<int>(report.solutions.size()) >= std::max(1, options.max_solutions)) break;
        double res = tp_residual_of(basis, c, K, d);
        if (res > options.tol_tp) {
          auto polished = project_to_tp(family, c, options.tol_tp);
          if (!polished) continue;
          c = *polished;
          res = tp_residual_of(basis, c, K, d);
        }
        const Vector g = fix_phase_gauge(c);
        if (contains(report.solutions, g)) continue;
        report.solutions.push_back(g);
        report.residuals.push_back(res);
      }
      report.moduli = std::move(sys);
      report.status = report.solutions.empty() ? TpStatus::solver_failed : TpStatus::solved;
      if (report.solutions.empty()) report.note = "feasible moduli but no point met tol_tp";
      return report;
    }
    report.note = "diagonal Xi whose entries do not decouple in the moduli";
  }

  report.path = TpPath::nonlinear;
  const auto prob = tp_problem(basis, K, d);
  double best = INFINITY;
  int tried = 0;
  for (int s = 0; s < options.n_starts; ++s) {
    const double elapsed = std::chrono::duration<double>(Clock::now() - started).count();
    if (elapsed > options.time_budget_s) {
      report.note = "time budget exhausted after " + std::to_string(tried) + " starts";
      break;
    }
    ++tried;
    const Vector c0 = random_start(rng, n, d);
    const Vector c = to_complex(detail::minimize_least_squares(prob, to_real(c0)));
    if (!c.allFinite()) continue;
    const double res = tp_residual_of(basis, c, K, d);
    best = std::min(best, res);
    if (res > options.tol_tp) continue;
    const Vector g = fix_phase_gauge(c);
    if (contains(report.solutions, g)) continue;
    report.solutions.push_back(g);
    report.residuals.push_back(res);
    if (static_cast<int>(report.solutions.size()) >= std::max(1, options.max_solutions)) break;
  }
  if (!report.solutions.empty()) {
    report.status = TpStatus::solved;
  } else {
    report.status = TpStatus::solver_failed;
    if (report.note.empty()) {
      char buf[96];
      std::snprintf(buf, sizeof buf, "no start converged; best residual %.3e", best);
      report.note = buf;
    }
  }
  return report;
}

TpManifold::TpManifold(const KernelFamily& family, const TpSolveReport& report, const TpOptions& options)
    : family_(&family), options_(options) {
  if (report.status != TpStatus::solved)
    throw Error(ErrorCode::EmptyManifold, "the family has no trace-preserving members");
  if (report.path == TpPath::linear && report.moduli) {
    moduli_ = report.moduli;
    dimension_ = static_cast<int>(moduli_->null_directions.cols()) + family.n_params();
  } else {
    dimension_ = 2 * family.n_params();
  }
}

std::optional<Vector> TpManifold::linear_point(const RealVector& params) const {
  const auto m = moduli_->null_directions.cols();
  const RealVector x = moduli_->particular + moduli_->null_directions * params.head(m);
  if (x.minCoeff() < -1e-12) return std::nullopt;
  return linear_coefficients(*moduli_, x, params.tail(params.size() - m));
}

std::optional<Vector> TpManifold::point(const RealVector& params) const {
  if (params.size() != dimension_)
    throw Error(ErrorCode::LengthMismatch, "manifold parameter vector has the wrong length");
  if (moduli_) return linear_point(params);
  return project_to_tp(*family_, to_complex(params), options_.tol_tp);
}

RealVector TpManifold::sample_moduli(Rng& rng) const { return hit_and_run(*moduli_, rng, 16); }

RealVector TpManifold::random_params(Rng& rng) const {
  const int n = family_->n_params();
  if (moduli_) {
    const auto m = moduli_->null_directions.cols();
    RealVector params(dimension_);
    params.head(m) = moduli_->null_directions.transpose() * (sample_moduli(rng) - moduli_->particular);
    params.tail(n) = random_phases(rng, n);
    return params;
  }
  return to_real(random_start(rng, n, family_->d));
}

ChannelFit fit_channel(const KernelFamily& family, const KrausSet& reference, const TpOptions& options) {
  const int n = family.n_params();
  const int K = family.K;
  const int d = family.d;
  if (reference.d() != d) throw Error(ErrorCode::DimMismatch, "reference channel dimension differs");
  if (n == 0) throw Error(ErrorCode::EmptyManifold, "empty family");
  const auto basis = basis_kraus(family);
  const Matrix target = choi(reference);
  const double norm = 1.0 / (static_cast<double>(d) * d);
  const int dd = d * d;

  // vec(B_k(j)) per (j, k).
  std::vector<std::vector<Vector>> bvec(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < K; ++k) bvec[static_cast<size_t>(j)].push_back(vec_row_major(basis[static_cast<size_t>(j)][static_cast<size_t>(k)]));

  detail::LeastSquaresProblem prob;
  prob.n_params = 2 * n;
  prob.n_residuals = dd * dd + dd;
  const auto tp = tp_problem(basis, K, d);
  auto vecs = [&](const RealVector& x) {
    const auto a = combine(basis, to_complex(x), K, d);
    std::vector<Vector> v;
    for (const auto& m : a) v.push_back(vec_row_major(m));
    return v;
  };
  prob.residual = [&](const RealVector& x, RealVector& r) {
    const auto v = vecs(x);
    Matrix c = Matrix::Zero(dd, dd);
    for (const auto& vk : v) c.noalias() += vk * vk.adjoint();
    pack_hermitian(c * norm - target, r, 0);
    RealVector t(dd);
    tp.residual(x, t);
    r.tail(dd) = t;
  };
  prob.jacobian = [&](const RealVector& x, RealMatrix& jac) {
    const auto v = vecs(x);
    RealVector col(dd * dd);
    for (int j = 0; j < n; ++j) {
      Matrix g = Matrix::Zero(dd, dd);
      for (int k = 0; k < K; ++k) g.noalias() += bvec[static_cast<size_t>(j)][static_cast<size_t>(k)] * v[static_cast<size_t>(k)].adjoint();
      pack_hermitian((g + g.adjoint()) * norm, col, 0);
      jac.block(0, j, dd * dd, 1) = col;
      pack_hermitian(Complex(0, 1) * (g - g.adjoint()) * norm, col, 0);
      jac.block(0, n + j, dd * dd, 1) = col;
    }
    RealMatrix tj(dd, 2 * n);
    tp.jacobian(x, tj);
    jac.bottomRows(dd) = tj;
  };

  Rng rng(options.seed);
  ChannelFit best;
  best.choi_distance = INFINITY;
  for (int s = 0; s < std::max(1, options.n_starts); ++s) {
    const Vector c0 = random_start(rng, n, d);
    const Vector c = to_complex(detail::minimize_least_squares(prob, to_real(c0), 2000));
    if (!c.allFinite()) continue;
    const auto a = combine(basis, c, K, d);
    bool nonzero = false;
    for (const auto& m : a) nonzero = nonzero || m.norm() > 0;
    if (!nonzero) continue;
    const double dist = (choi(KrausSet(a)) - target).norm();
    if (dist < best.choi_distance) {
      best.coefficients = fix_phase_gauge(c);
      best.choi_distance = dist;
      best.tp_residual = tp_residual_of(basis, c, K, d);
    }
    if (best.choi_distance < 1e-13 && best.tp_residual < 1e-12) break;
  }
  if (!std::isfinite(best.choi_distance))
    throw Error(ErrorCode::EmptyManifold, "no start produced a usable channel");
  return best;
}

}  // namespace gcec
