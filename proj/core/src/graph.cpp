#include "idsp/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "idsp/errors.hpp"

namespace idsp {

namespace {

bool edge_allowed(GraphMode mode, Domain a, Domain b) {
  switch (mode) {
    case GraphMode::NP:  return false;
    case GraphMode::T:   return a == Domain::Target && b == Domain::Target;
    case GraphMode::ST:  return a == b;
    case GraphMode::CST: return true;
  }
  return false;
}

}  // namespace

AffinityGraph knn_affinity(const Eigen::MatrixXd& X, int p) {
  const Eigen::Index n = X.rows();
  if (p < 1) throw InputError("knn_affinity: p must be >= 1");
  if (p >= n) {
    throw InputError("knn_affinity: p = " + std::to_string(p) +
                     " must be smaller than the sample count " + std::to_string(n));
  }
  if (!X.allFinite()) throw InputError("knn_affinity: non-finite feature values");

  Eigen::MatrixXd Xn = X;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double norm = Xn.row(i).norm();
    if (norm == 0.0) {
      throw InputError("knn_affinity: row " + std::to_string(i) +
                       " has zero norm, cosine similarity undefined");
    }
    Xn.row(i) /= norm;
  }

  // one similarity value per unordered pair, read canonically from the upper triangle
  Eigen::MatrixXd S = Xn * Xn.transpose();
  auto sim = [&S](Eigen::Index i, Eigen::Index j) {
    return i < j ? S(i, j) : S(j, i);
  };

  // OR-symmetrized neighbor selection
  std::set<std::pair<Eigen::Index, Eigen::Index>> edges;
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n) - 1);
  for (Eigen::Index i = 0; i < n; ++i) {
    Eigen::Index k = 0;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j != i) order[k++] = j;
    }
    std::partial_sort(order.begin(), order.begin() + p, order.end(),
                      [&](Eigen::Index a, Eigen::Index b) {
                        const double sa = sim(i, a), sb = sim(i, b);
                        if (sa != sb) return sa > sb;
                        return a < b;  // ties toward the lower index
                      });
    for (int t = 0; t < p; ++t) {
      const Eigen::Index j = order[static_cast<std::size_t>(t)];
      edges.emplace(std::min(i, j), std::max(i, j));
    }
  }

  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(edges.size() * 2);
  for (const auto& [i, j] : edges) {
    const double w = std::max(0.0, sim(i, j));
    if (w > 0.0) {
      triplets.emplace_back(i, j, w);
      triplets.emplace_back(j, i, w);
    }
  }
  Eigen::SparseMatrix<double> W(n, n);
  W.setFromTriplets(triplets.begin(), triplets.end());
  W.makeCompressed();
  return AffinityGraph{std::move(W), p, GraphMode::CST};
}

AffinityGraph apply_mode(const AffinityGraph& g_hat, std::span<const Domain> domains,
                         GraphMode mode) {
  const Eigen::Index n = g_hat.order();
  if (static_cast<Eigen::Index>(domains.size()) != n) {
    throw InputError("apply_mode: domain tag count " + std::to_string(domains.size()) +
                     " does not match graph order " + std::to_string(n));
  }
  std::vector<Eigen::Triplet<double>> kept;
  kept.reserve(static_cast<std::size_t>(g_hat.weights.nonZeros()));
  for (Eigen::Index col = 0; col < g_hat.weights.outerSize(); ++col) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(g_hat.weights, col); it; ++it) {
      if (edge_allowed(mode, domains[static_cast<std::size_t>(it.row())],
                       domains[static_cast<std::size_t>(it.col())])) {
        kept.emplace_back(it.row(), it.col(), it.value());
      }
    }
  }
  Eigen::SparseMatrix<double> W(n, n);
  W.setFromTriplets(kept.begin(), kept.end());
  W.makeCompressed();
  return AffinityGraph{std::move(W), g_hat.p, mode};
}

Laplacian laplacian(const AffinityGraph& g) {
  const Eigen::SparseMatrix<double>& G = g.weights;
  const Eigen::Index n = G.rows();

  Eigen::SparseMatrix<double> Gt = G.transpose();
  if (!G.isApprox(Gt, 0.0)) {
    throw InvariantViolation("laplacian: affinity matrix is not symmetric");
  }

  Eigen::VectorXd degree = Eigen::VectorXd::Zero(n);
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(static_cast<std::size_t>(G.nonZeros()) + static_cast<std::size_t>(n));
  for (Eigen::Index col = 0; col < G.outerSize(); ++col) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(G, col); it; ++it) {
      if (it.value() < 0.0) {
        throw InvariantViolation("laplacian: negative affinity weight");
      }
      degree[it.row()] += it.value();
      triplets.emplace_back(it.row(), it.col(), -it.value());
    }
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    triplets.emplace_back(i, i, degree[i]);
  }
  Eigen::SparseMatrix<double> L(n, n);
  L.setFromTriplets(triplets.begin(), triplets.end());
  L.makeCompressed();
  return Laplacian{std::move(L)};
}

double laplacian_quadratic(const Eigen::MatrixXd& f_values, const AffinityGraph& g) {
  if (f_values.rows() != g.order()) {
    throw InputError("laplacian_quadratic: row count " + std::to_string(f_values.rows()) +
                     " does not match graph order " + std::to_string(g.order()));
  }
  double total = 0.0;
  for (Eigen::Index col = 0; col < g.weights.outerSize(); ++col) {
    for (Eigen::SparseMatrix<double>::InnerIterator it(g.weights, col); it; ++it) {
      total += (f_values.row(it.row()) - f_values.row(it.col())).squaredNorm() * it.value();
    }
  }
  return total;
}

}  // namespace idsp
