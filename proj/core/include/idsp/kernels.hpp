#pragma once

#include <Eigen/Dense>

namespace idsp {

enum class KernelKind { Linear, Rbf, Cosine };
enum class BandwidthRule { Explicit, MedianHeuristic };

// Describes how a Gram matrix is computed from a feature matrix. The pair
// (kind, bandwidth_rule) fully determines K; rbf with the median heuristic
// resolves its bandwidth at build time and the resolved spec is frozen into
// the returned KernelMatrix so out-of-sample rows reuse the same bandwidth.
struct KernelSpec {
  KernelKind kind = KernelKind::Linear;
  double bandwidth = 0.0;  // rbf only; ignored otherwise
  BandwidthRule bandwidth_rule = BandwidthRule::MedianHeuristic;
};

struct KernelMatrix {
  Eigen::MatrixXd values;  // (n+m) x (n+m), symmetric
  KernelSpec spec;         // resolved spec (explicit bandwidth after a median-heuristic build)

  Eigen::Index order() const { return values.rows(); }
};

// Median of the Euclidean distances over all distinct unordered row pairs.
// Even pair counts take the average of the two middle order statistics.
double median_pairwise_distance(const Eigen::MatrixXd& X);

// Gram matrix of X under `spec`. Entries are computed once per unordered pair
// and mirrored, so the result is symmetric bit-for-bit.
KernelMatrix build_kernel_matrix(const Eigen::MatrixXd& X, const KernelSpec& spec);

// Rectangular kernel block K(i,j) = k(x_i^train, x_j^query). For rbf the
// bandwidth must already be resolved (explicit, or frozen by a previous build).
Eigen::MatrixXd cross_kernel(const Eigen::MatrixXd& X_train,
                             const Eigen::MatrixXd& X_query,
                             const KernelSpec& spec);

}  // namespace idsp
