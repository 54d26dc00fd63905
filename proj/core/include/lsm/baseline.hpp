#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lsm/document.hpp"
#include "lsm/evaluation.hpp"
#include "lsm/segmenter.hpp"

namespace lsm {

struct RandomTrialConfig {
    int trials = 1;
    std::uint64_t seed = 0;
    /// Empty means match the boundary count of the segmentation under
    /// comparison per document; otherwise use this fixed k.
    std::optional<int> fixed_boundary_count;
};

/// k boundary positions drawn uniformly without replacement from {2..n}.
/// Reproducible: the same (n, k, seed) always yields the same set.
/// Throws std::invalid_argument when k < 0 or k > n - 1.
Segmentation random_segmentation(int sentence_count, int boundary_count, std::uint64_t seed,
                                 const std::string& doc_id = "");

struct TrialScore {
    std::optional<double> recall;
    std::optional<double> precision;
};

/// Scores of `config.trials` independent random segmentations of `doc`
/// against `ref`, each trial seeded with derive_seed(config.seed, trial) so
/// results do not depend on execution order. `boundary_count` is the k to
/// match (ignored when config.fixed_boundary_count is set).
std::vector<TrialScore> random_trial_scores(const Document& doc, const ReferenceSegments& ref,
                                            int boundary_count, const RandomTrialConfig& config,
                                            int window = 0);

}  // namespace lsm
