#include "cornerindex/spectral.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include "cornerindex/errors.hpp"

namespace cornerindex::spectral {

namespace {

using dec::Factorization;
using Eigen::MatrixXd;
using Eigen::VectorXd;
using Triplet = Eigen::Triplet<double>;

// What the iteration needs from a pencil.
struct Operator {
  const SparseMatrix* mass = nullptr;
  std::function<MatrixXd(const MatrixXd&)> shifted_solve;  // (K - sigma M)^{-1} X
  std::function<MatrixXd(const MatrixXd&)> stiffness_gram;  // V^T K V
  std::function<VectorXd(const VectorXd&)> stiffness_apply;
};

// Two passes of classical Gram-Schmidt in the M inner product.
void m_orthonormalize(MatrixXd& v, const SparseMatrix& mass) {
  for (Eigen::Index j = 0; j < v.cols(); ++j) {
    for (int pass = 0; pass < 2; ++pass) {
      if (j > 0) {
        const VectorXd mv = mass * v.col(j);
        const VectorXd c = v.leftCols(j).transpose() * mv;
        v.col(j) -= v.leftCols(j) * c;
      }
    }
    const double n = std::sqrt(v.col(j).dot(mass * v.col(j)));
    if (!(n > 0.0)) throw SolverError("subspace collapsed during orthonormalization");
    v.col(j) /= n;
  }
}

Eigenpairs iterate(const Operator& op, std::size_t n, const SolverOptions& opt) {
  if (opt.m < 1) throw SolverError("m must be at least 1");
  if (opt.m > n) throw SolverError("requested more eigenvalues than degrees of freedom");
  std::size_t p = opt.block == 0 ? opt.m + 6 : std::max(opt.block, opt.m);
  p = std::min(p, n);

  Factorization mass_solver(*op.mass);
  if (mass_solver.info() != Eigen::Success) throw SolverError("mass matrix is not positive definite");

  std::mt19937_64 rng(opt.seed);
  std::normal_distribution<double> normal;
  MatrixXd v(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(p));
  for (Eigen::Index j = 0; j < v.cols(); ++j)
    for (Eigen::Index i = 0; i < v.rows(); ++i) v(i, j) = normal(rng);
  m_orthonormalize(v, *op.mass);

  Eigenpairs out;
  const auto m = static_cast<Eigen::Index>(opt.m);
  double worst = 0.0;
  for (std::size_t it = 1; it <= opt.max_iterations; ++it) {
    MatrixXd w = op.shifted_solve(*op.mass * v);
    m_orthonormalize(w, *op.mass);
    MatrixXd kp = op.stiffness_gram(w);
    kp = 0.5 * (kp + kp.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<MatrixXd> es(kp);
    v = w * es.eigenvectors();
    const VectorXd lambda = es.eigenvalues();

    worst = 0.0;
    std::vector<double> res(opt.m);
    for (Eigen::Index j = 0; j < m; ++j) {
      const VectorXd r = op.stiffness_apply(v.col(j)) - lambda(j) * (*op.mass * v.col(j));
      res[static_cast<std::size_t>(j)] = std::sqrt(std::max(0.0, r.dot(mass_solver.solve(r))));
      worst = std::max(worst, res[static_cast<std::size_t>(j)]);
    }
    if (worst <= opt.tol) {
      out.values.assign(lambda.data(), lambda.data() + m);
      out.vectors = v.leftCols(m);
      out.residuals = std::move(res);
      out.iterations = it;
      return out;
    }
  }
  std::ostringstream msg;
  msg << "eigensolver did not converge in " << opt.max_iterations << " iterations (worst residual " << worst
      << ")";
  throw SolverError(msg.str());
}

}  // namespace

Eigenpairs low_spectrum(const SparseMatrix& stiffness, const SparseMatrix& mass, const SolverOptions& options) {
  if (stiffness.rows() != mass.rows() || stiffness.cols() != mass.cols() || mass.rows() != mass.cols())
    throw SolverError("stiffness and mass must be square of equal size");
  const SparseMatrix shifted = stiffness - options.shift * mass;
  auto solver = std::make_shared<Factorization>(shifted);
  if (solver->info() != Eigen::Success) throw SolverError("shifted operator factorization failed");
  Operator op;
  op.mass = &mass;
  op.shifted_solve = [solver](const MatrixXd& x) { return MatrixXd(solver->solve(x)); };
  op.stiffness_gram = [&stiffness](const MatrixXd& v) { return MatrixXd(v.transpose() * (stiffness * v)); };
  op.stiffness_apply = [&stiffness](const VectorXd& x) { return VectorXd(stiffness * x); };
  return iterate(op, static_cast<std::size_t>(mass.rows()), options);
}

Eigenpairs low_spectrum(const dec::LaplacianPencil& pencil, const SolverOptions& options) {
  const auto n = static_cast<Eigen::Index>(pencil.size());
  const Eigen::Index nd = pencil.has_down() ? pencil.down.cols() : 0;

  // Quasi-definite augmented system [[U^T W U - sigma M, B], [B^T, -N]].
  SparseMatrix top = -options.shift * pencil.mass;
  if (pencil.has_up()) top += SparseMatrix(pencil.up.transpose()) * pencil.up_weight * pencil.up;
  std::vector<Triplet> t;
  t.reserve(static_cast<std::size_t>(top.nonZeros() + 2 * (nd > 0 ? pencil.down.nonZeros() : 0) +
                                     (nd > 0 ? pencil.down_weight.nonZeros() : 0)));
  for (int k = 0; k < top.outerSize(); ++k)
    for (SparseMatrix::InnerIterator it(top, k); it; ++it) t.emplace_back(it.row(), it.col(), it.value());
  if (nd > 0) {
    for (int k = 0; k < pencil.down.outerSize(); ++k)
      for (SparseMatrix::InnerIterator it(pencil.down, k); it; ++it) {
        t.emplace_back(it.row(), n + it.col(), it.value());
        t.emplace_back(n + it.col(), it.row(), it.value());
      }
    for (int k = 0; k < pencil.down_weight.outerSize(); ++k)
      for (SparseMatrix::InnerIterator it(pencil.down_weight, k); it; ++it)
        t.emplace_back(n + it.row(), n + it.col(), -it.value());
  }
  SparseMatrix augmented(n + nd, n + nd);
  augmented.setFromTriplets(t.begin(), t.end());
  auto aug = std::make_shared<SparseMatrix>(std::move(augmented));
  auto solver = std::make_shared<Factorization>(*aug);
  if (solver->info() != Eigen::Success) throw SolverError("shifted augmented system factorization failed");

  Operator op;
  op.mass = &pencil.mass;
  op.shifted_solve = [solver, aug, n, nd](const MatrixXd& x) {
    MatrixXd rhs = MatrixXd::Zero(n + nd, x.cols());
    rhs.topRows(n) = x;
    // The factorization is unpivoted on an indefinite matrix; two steps of
    // iterative refinement recover working accuracy.
    MatrixXd y = solver->solve(rhs);
    for (int step = 0; step < 2; ++step) y += MatrixXd(solver->solve(MatrixXd(rhs - *aug * y)));
    return MatrixXd(y.topRows(n));
  };
  op.stiffness_gram = [&pencil](const MatrixXd& v) {
    MatrixXd g = MatrixXd::Zero(v.cols(), v.cols());
    if (pencil.has_up()) {
      const MatrixXd u = pencil.up * v;
      g += u.transpose() * (pencil.up_weight * u);
    }
    if (pencil.has_down()) {
      const MatrixXd y = pencil.down.transpose() * v;
      g += y.transpose() * MatrixXd(pencil.down_solver->solve(y));
    }
    return g;
  };
  op.stiffness_apply = [&pencil](const VectorXd& x) { return pencil.apply_stiffness(x); };
  return iterate(op, pencil.size(), options);
}

KernelCount kernel_dimension(const std::vector<double>& values, const KernelRule& rule) {
  KernelCount kc;
  if (values.empty()) return kc;
  std::vector<double> upper(values.begin() + static_cast<std::ptrdiff_t>(values.size() / 2), values.end());
  std::sort(upper.begin(), upper.end());
  const std::size_t u = upper.size();
  const double median = u % 2 == 1 ? upper[u / 2] : 0.5 * (upper[u / 2 - 1] + upper[u / 2]);
  kc.tau = rule.relative_cutoff * std::abs(median);
  std::size_t k = 0;
  while (k < values.size() && values[k] < kc.tau) ++k;
  if (k == values.size()) return kc;
  const double below = k == 0 ? kc.tau : std::max(values[k - 1], kc.tau);
  kc.gap_ratio = below > 0.0 ? values[k] / below : 0.0;
  if (kc.gap_ratio >= rule.min_gap_ratio) kc.count = k;
  return kc;
}

SpectralReport analyze(const dec::HodgeSystem& system, int degree, const SolverOptions& options,
                       const KernelRule& rule) {
  const auto start = std::chrono::steady_clock::now();
  const auto pencil = dec::hodge_laplacian(system, degree);
  SolverOptions opt = options;
  opt.m = std::min(opt.m, pencil.size());
  const auto pairs = low_spectrum(pencil, opt);
  SpectralReport rep;
  rep.degree = degree;
  rep.bc = system.bc.describe();
  rep.h = system.mesh->h;
  rep.rho = system.bc.treatment == dec::VertexTreatment::minimal ? system.bc.rho : 0.0;
  rep.dofs = pencil.size();
  rep.eigenvalues = pairs.values;
  rep.kernel = kernel_dimension(pairs.values, rule);
  for (double r : pairs.residuals) rep.max_residual = std::max(rep.max_residual, r);
  rep.iterations = pairs.iterations;
  rep.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace cornerindex::spectral
