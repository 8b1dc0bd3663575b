#include "idsp/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "idsp/errors.hpp"

namespace idsp {

namespace {

void require_finite(const Eigen::MatrixXd& X, const char* name) {
  if (!X.allFinite()) {
    throw InputError(std::string(name) + ": feature matrix contains non-finite values");
  }
}

Eigen::VectorXd row_norms_checked(const Eigen::MatrixXd& X, const char* context) {
  Eigen::VectorXd norms = X.rowwise().norm();
  for (Eigen::Index i = 0; i < norms.size(); ++i) {
    if (norms[i] == 0.0) {
      throw InputError(std::string(context) + ": row " + std::to_string(i) +
                       " has zero norm, cosine similarity undefined");
    }
  }
  return norms;
}

double resolve_bandwidth(const Eigen::MatrixXd& X, const KernelSpec& spec) {
  if (spec.bandwidth_rule == BandwidthRule::Explicit) {
    if (!(spec.bandwidth > 0.0)) {
      throw InputError("rbf kernel: explicit bandwidth must be positive");
    }
    return spec.bandwidth;
  }
  if (X.rows() < 2) {
    throw InputError("rbf median heuristic needs at least two rows");
  }
  const double med = median_pairwise_distance(X);
  if (med == 0.0) {
    throw InputError("rbf median heuristic degenerate: median pairwise distance is zero");
  }
  return med;
}

double rbf_entry(const Eigen::MatrixXd& A, Eigen::Index i, const Eigen::MatrixXd& B,
                 Eigen::Index j, double sigma) {
  const double d2 = (A.row(i) - B.row(j)).squaredNorm();
  return std::exp(-d2 / (2.0 * sigma * sigma));
}

}  // namespace

double median_pairwise_distance(const Eigen::MatrixXd& X) {
  const Eigen::Index n = X.rows();
  std::vector<double> dists;
  dists.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      dists.push_back((X.row(i) - X.row(j)).norm());
    }
  }
  std::sort(dists.begin(), dists.end());
  const std::size_t k = dists.size();
  if (k == 0) return 0.0;
  if (k % 2 == 1) return dists[k / 2];
  return 0.5 * (dists[k / 2 - 1] + dists[k / 2]);
}

KernelMatrix build_kernel_matrix(const Eigen::MatrixXd& X, const KernelSpec& spec) {
  if (X.rows() < 1 || X.cols() < 1) {
    throw InputError("build_kernel_matrix: empty feature matrix");
  }
  require_finite(X, "build_kernel_matrix");

  const Eigen::Index n = X.rows();
  KernelSpec resolved = spec;
  Eigen::MatrixXd K(n, n);

  switch (spec.kind) {
    case KernelKind::Linear: {
      for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i; j < n; ++j) {
          K(i, j) = X.row(i).dot(X.row(j));
        }
      }
      break;
    }
    case KernelKind::Rbf: {
      const double sigma = resolve_bandwidth(X, spec);
      resolved.bandwidth = sigma;
      resolved.bandwidth_rule = BandwidthRule::Explicit;
      for (Eigen::Index i = 0; i < n; ++i) {
        K(i, i) = 1.0;
        for (Eigen::Index j = i + 1; j < n; ++j) {
          K(i, j) = rbf_entry(X, i, X, j, sigma);
        }
      }
      break;
    }
    case KernelKind::Cosine: {
      // diagonal goes through the same formula as cross_kernel so the two
      // paths agree entrywise
      const Eigen::VectorXd norms = row_norms_checked(X, "build_kernel_matrix");
      for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i; j < n; ++j) {
          const double v = X.row(i).dot(X.row(j)) / (norms[i] * norms[j]);
          K(i, j) = std::clamp(v, -1.0, 1.0);
        }
      }
      break;
    }
  }
  // mirror the upper triangle so K_ij == K_ji bit-exactly
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      K(j, i) = K(i, j);
    }
  }
  return KernelMatrix{std::move(K), resolved};
}

Eigen::MatrixXd cross_kernel(const Eigen::MatrixXd& X_train, const Eigen::MatrixXd& X_query,
                             const KernelSpec& spec) {
  if (X_query.rows() > 0 && X_train.cols() != X_query.cols()) {
    throw InputError("cross_kernel: feature dimension mismatch (" +
                     std::to_string(X_train.cols()) + " vs " +
                     std::to_string(X_query.cols()) + ")");
  }
  require_finite(X_train, "cross_kernel");
  require_finite(X_query, "cross_kernel");

  const Eigen::Index n = X_train.rows();
  const Eigen::Index q = X_query.rows();
  Eigen::MatrixXd K(n, q);
  if (q == 0) return K;

  switch (spec.kind) {
    case KernelKind::Linear: {
      for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < q; ++j) {
          K(i, j) = X_train.row(i).dot(X_query.row(j));
        }
      }
      break;
    }
    case KernelKind::Rbf: {
      if (spec.bandwidth_rule != BandwidthRule::Explicit) {
        throw InputError("cross_kernel: rbf bandwidth not resolved; build the Gram matrix "
                         "first or pass an explicit bandwidth");
      }
      if (!(spec.bandwidth > 0.0)) {
        throw InputError("cross_kernel: rbf bandwidth must be positive");
      }
      for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < q; ++j) {
          K(i, j) = rbf_entry(X_train, i, X_query, j, spec.bandwidth);
        }
      }
      break;
    }
    case KernelKind::Cosine: {
      const Eigen::VectorXd tn = row_norms_checked(X_train, "cross_kernel (train)");
      const Eigen::VectorXd qn = row_norms_checked(X_query, "cross_kernel (query)");
      for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < q; ++j) {
          const double v = X_train.row(i).dot(X_query.row(j)) / (tn[i] * qn[j]);
          K(i, j) = std::clamp(v, -1.0, 1.0);
        }
      }
      break;
    }
  }
  return K;
}

}  // namespace idsp
