#pragma once

#include <span>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "idsp/domain.hpp"

namespace idsp {

// Which edges of the p-NN affinity graph survive:
//   NP  - none (no structure preserving)
//   T   - target-target edges only
//   ST  - same-domain edges (source-source and target-target)
//   CST - all edges
enum class GraphMode { NP, T, ST, CST };

struct AffinityGraph {
  Eigen::SparseMatrix<double> weights;  // symmetric, nonnegative, zero diagonal
  int p = 0;
  GraphMode mode = GraphMode::CST;

  Eigen::Index order() const { return weights.rows(); }
};

struct Laplacian {
  Eigen::SparseMatrix<double> values;  // L = D - G

  Eigen::Index order() const { return values.rows(); }
};

// p-nearest-neighbor graph under cosine similarity, OR-symmetrized: an edge
// (i,j) exists when either endpoint ranks the other among its p most similar
// neighbors (ties broken toward the lower index). Edge weight is the cosine
// similarity clamped at zero; weight-zero edges are not stored.
AffinityGraph knn_affinity(const Eigen::MatrixXd& X, int p);

// Keeps only the edges allowed by `mode`; see GraphMode.
AffinityGraph apply_mode(const AffinityGraph& g_hat, std::span<const Domain> domains,
                         GraphMode mode);

// L = D - G with D the degree diagonal. The input must be symmetric.
Laplacian laplacian(const AffinityGraph& g);

// sum_ij |f(x_i) - f(x_j)|^2 G_ij over ordered pairs; equals tr(f' L f).
double laplacian_quadratic(const Eigen::MatrixXd& f_values, const AffinityGraph& g);

}  // namespace idsp
