#include "lsm/baseline.hpp"

#include <numeric>
#include <stdexcept>

#include "lsm/rng.hpp"

namespace lsm {

Segmentation random_segmentation(int sentence_count, int boundary_count, std::uint64_t seed,
                                 const std::string& doc_id) {
    if (boundary_count < 0 || boundary_count > sentence_count - 1)
        throw std::invalid_argument("random_segmentation: boundary count " +
                                    std::to_string(boundary_count) + " not in {0.." +
                                    std::to_string(sentence_count - 1) + "}");

    std::vector<int> candidates(static_cast<std::size_t>(sentence_count - 1));
    std::iota(candidates.begin(), candidates.end(), 2);  // {2..n}

    std::mt19937_64 engine(seed);
    Segmentation seg;
    seg.doc_id = doc_id;
    seg.sentence_count = sentence_count;
    seg.method = SegmentationMethod::random;
    // partial Fisher-Yates: the first k slots end up a uniform k-subset
    for (int drawn = 0; drawn < boundary_count; ++drawn) {
        std::size_t i = static_cast<std::size_t>(drawn);
        std::size_t j = i + uniform_below(engine, candidates.size() - i);
        std::swap(candidates[i], candidates[j]);
        seg.boundaries.insert(candidates[i]);
    }
    return seg;
}

std::vector<TrialScore> random_trial_scores(const Document& doc, const ReferenceSegments& ref,
                                            int boundary_count, const RandomTrialConfig& config,
                                            int window) {
    if (config.trials < 1) throw std::invalid_argument("random trials must be >= 1");
    const int k = config.fixed_boundary_count.value_or(boundary_count);

    std::vector<TrialScore> scores;
    scores.reserve(static_cast<std::size_t>(config.trials));
    for (int trial = 0; trial < config.trials; ++trial) {
        Segmentation seg = random_segmentation(doc.size(), k,
                                               derive_seed(config.seed, static_cast<std::uint64_t>(trial)),
                                               doc.id);
        EvalReport report = score(seg, ref, window);
        scores.push_back({report.recall, report.precision});
    }
    return scores;
}

}  // namespace lsm
