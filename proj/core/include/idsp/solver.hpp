#pragma once

#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "idsp/data.hpp"
#include "idsp/graph.hpp"
#include "idsp/kernels.hpp"

namespace idsp {

struct SolverConfig {
  double lambda = 0.1;   // l2 weight, must be > 0
  double gamma = 1.0;    // Laplacian weight, >= 0
  double eta = 0.0;      // MMD weight, 0 disables the JDA loop
  int p = 10;            // neighbor count
  GraphMode mode = GraphMode::T;
  KernelSpec kernel;
  int max_iter = 10;     // JDA loop cap
  bool stop_on_stable_labels = true;
};

// Y is C x (n+m) with one-hot source columns and zero target columns; v is the
// diagonal of the source indicator V.
struct LabelEncoding {
  Eigen::MatrixXd Y;
  Eigen::VectorXd v;

  Eigen::Index order() const { return v.size(); }
  int class_count() const { return static_cast<int>(Y.rows()); }
};

// Representer weights: column c of alpha scores class c via f_c(x) = sum_i alpha_ic k(x_i, x).
struct Coefficients {
  Eigen::MatrixXd alpha;  // (n+m) x C
  KernelSpec kernel;      // frozen spec the weights were trained with
};

// M = M_0 + sum_c M_c; each block is the rank-1 outer product u u' with
// u_i = 1/n_c on source class c, -1/m_c on pseudo-class-c target samples.
struct MmdMatrix {
  Eigen::MatrixXd values;
};

struct Prediction {
  Eigen::MatrixXd scores;   // rows x C
  std::vector<int> labels;  // per-row argmax, ties to the lower class index
};

struct JdaHistory {
  std::vector<std::vector<int>> pseudo_labels;  // per iteration, init first
  bool converged = false;
  int iterations = 0;  // extended solves performed
};

struct FitTimings {
  double graph_seconds = 0.0;
  double kernel_seconds = 0.0;
  double solve_seconds = 0.0;
};

// Everything a fit produces; kernel and graph are kept so callers can score
// out-of-sample points and inspect the structure that was used.
struct FitResult {
  Coefficients coefficients;
  KernelMatrix kernel;
  AffinityGraph graph;
  Laplacian lap;
  LabelEncoding encoding;
  Prediction in_sample;
  std::vector<int> target_predictions;  // length m
  std::optional<JdaHistory> jda;
  std::optional<MmdMatrix> final_mmd;   // last M of the JDA loop, when run
  FitTimings timings;
};

LabelEncoding encode_labels(std::span<const int> source_labels, int class_count,
                            Eigen::Index target_count);

// Unique solution of ((V + gamma L) K + lambda I) alpha = V Y'.
Coefficients solve_closed_form(const KernelMatrix& K, const Laplacian& L,
                               const LabelEncoding& enc, double lambda, double gamma);

// Extended form with the MMD term: ((V + gamma L + eta M) K + lambda I) alpha = V Y'.
Coefficients solve_closed_form(const KernelMatrix& K, const Laplacian& L,
                               const LabelEncoding& enc, double lambda, double gamma,
                               double eta, const MmdMatrix* mmd);

// |(Y - alpha'K)V|_F^2 + tr(lambda alpha'K alpha + alpha'K(gamma L + eta M)K alpha).
double objective_value(const Eigen::MatrixXd& alpha, const KernelMatrix& K,
                       const Laplacian& L, const LabelEncoding& enc, double lambda,
                       double gamma, double eta = 0.0, const MmdMatrix* mmd = nullptr);

MmdMatrix mmd_matrix(std::span<const Domain> domains, std::span<const int> source_labels,
                     std::span<const int> pseudo_labels, int class_count);

Prediction predict_in_sample(const Coefficients& coeffs, const KernelMatrix& K);

// Scores arbitrary query points through the representer form and the frozen
// kernel spec; returns per-query argmax labels.
std::vector<int> predict_out_of_sample(const Coefficients& coeffs,
                                       const Eigen::MatrixXd& X_train,
                                       const Eigen::MatrixXd& X_query);

// Pseudo-label iteration of the JDA-extended objective. Pseudo-labels are
// initialized by a plain (eta = 0) solve; each iteration rebuilds M only,
// re-solves, and re-predicts, stopping when the labels repeat or max_iter is
// reached. Domains are recovered from the encoding's indicator diagonal.
struct JdaResult {
  Coefficients coefficients;
  JdaHistory history;
  MmdMatrix final_mmd;
};
JdaResult solve_jda(const Eigen::MatrixXd& X, const SolverConfig& config,
                    const LabelEncoding& enc);

// Algorithm: build the p-NN graph restricted by the configured mode, its
// Laplacian, and the kernel; solve in closed form (or run the JDA loop when
// eta > 0); predict all samples in-sample.
FitResult fit(const Dataset& ds, const SolverConfig& config);

}  // namespace idsp
