#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "idsp/domain.hpp"

namespace idsp {

// A transductive task: features for source and target samples in one matrix,
// canonicalized so the n source rows precede the m target rows.
struct Dataset {
  Eigen::MatrixXd X;                               // (n+m) x d
  std::vector<Domain> domains;                     // length n+m, source block first
  std::vector<int> source_labels;                  // length n, values in [0, class_count)
  std::optional<std::vector<int>> target_truth;    // length m, evaluation only
  int class_count = 0;
  std::vector<std::string> ids;                    // original ids in canonical order

  Eigen::Index n() const { return static_cast<Eigen::Index>(source_labels.size()); }
  Eigen::Index m() const { return X.rows() - n(); }
  Eigen::Index dim() const { return X.cols(); }
};

// Desk-scale synthetic PDA/UDA task. All three scale knobs are distances in
// feature space: shared-class means are mutually `separation` apart, target
// clusters drift from their source position by `shift`, and `noise` is the
// typical within-class displacement radius (per-coordinate sigma is
// noise/sqrt(feature_dim)). Private source classes are placed near the drifted
// target clusters (at distance separation/2), which is what makes extra
// source structure genuinely hazardous in the partial setting.
struct SynthTaskSpec {
  int class_count = 2;
  int private_source_classes = 0;     // must be < class_count
  int samples_per_class = 20;         // per class per domain
  int feature_dim = 2;                // must be >= class_count
  double separation = 4.0;
  double shift = 0.0;
  double noise = 1.0;
  std::uint64_t seed = 0;
};

struct SplitSummary {
  Eigen::Index n = 0;
  Eigen::Index m = 0;
  int class_count = 0;
  std::vector<Eigen::Index> source_per_class;
  std::vector<Eigen::Index> target_per_class;  // zeros when target truth is absent
  std::optional<bool> partial;                 // set only when target truth is present
};

// CSV schema: header "id,domain,label,f0,...,f{d-1}"; domain is "s" or "t";
// label is an integer, -1 for unlabeled target rows. Target rows must either
// all carry labels or all be -1. Rows are reordered to the canonical
// source-block/target-block layout.
Dataset load_dataset(const std::filesystem::path& path,
                     std::optional<int> class_count_override = std::nullopt);

// Inverse of load_dataset; feature values are written as shortest decimal
// strings that parse back to the identical double.
void save_dataset(const Dataset& ds, const std::filesystem::path& path);

// "id,pred" rows for the target samples.
void save_predictions(const Dataset& ds, const std::vector<int>& target_predictions,
                      const std::filesystem::path& path);

Dataset generate_synth(const SynthTaskSpec& spec);

SplitSummary split_counts(const Dataset& ds);

}  // namespace idsp
