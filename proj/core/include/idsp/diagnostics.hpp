#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include <Eigen/Dense>

#include "idsp/graph.hpp"
#include "idsp/kernels.hpp"
#include "idsp/solver.hpp"

namespace idsp {

// Fraction of exact matches.
double accuracy(std::span<const int> pred, std::span<const int> truth);

struct SmoothnessReport {
  double radius = 0.0;
  double epsilon_hat = 0.0;
  int samples_per_point = 0;
  Eigen::Index points_used = 0;
};

// Batch score function: maps a q x d block of points to q x C scores.
using ScoreFn = std::function<Eigen::MatrixXd(const Eigen::MatrixXd&)>;

// Empirical model-smoothness probe: for each evaluation point the inner sup
// over the radius-r infinity-ball is approximated by the max score change
// (infinity norm across classes) over sampled perturbations; epsilon_hat is
// the mean of the per-point maxima. When 2^d <= samples_per_point the 2^d
// sign corners of the ball are enumerated, which makes linear scores exact
// (their maximizer is the corner r*sign(w), value r*|w|_1). Perturbation
// directions depend only on (seed, point index) and are scaled by r, so nested
// radii see nested sample sets and the estimate is monotone for linear scores.
SmoothnessReport smoothness_probe(const ScoreFn& score_fn, const Eigen::MatrixXd& points,
                                  double radius, int samples_per_point, std::uint64_t seed);

struct GdControls {
  double tol = 1e-8;          // gradient infinity-norm target
  long max_iter = 2'000'000;  // iteration cap
};

struct GdOracleResult {
  Eigen::MatrixXd alpha;
  long iterations = 0;
  bool converged = false;
};

// Independent first-order minimizer of the solver objective, for verification:
// accelerated gradient descent with backtracking line search and restart. It
// evaluates the objective and gradient directly from K, L, V, Y and never
// calls the closed-form path. Instances are capped at order 50.
GdOracleResult gd_oracle(const KernelMatrix& K, const Laplacian& L, const LabelEncoding& enc,
                         double lambda, double gamma, double eta = 0.0,
                         const MmdMatrix* mmd = nullptr, const GdControls& controls = {});

}  // namespace idsp
