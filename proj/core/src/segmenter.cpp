#include "lsm/segmenter.hpp"

#include <algorithm>
#include <stdexcept>

namespace lsm {

std::string to_string(EmptySetPolicy policy) {
    switch (policy) {
        case EmptySetPolicy::carry_forward: return "carry_forward";
        case EmptySetPolicy::zero: return "zero";
        case EmptySetPolicy::exclude: return "exclude";
    }
    throw std::logic_error("unknown empty-set policy");
}

EmptySetPolicy empty_set_policy_from_string(const std::string& name) {
    if (name == "carry_forward" || name == "carry") return EmptySetPolicy::carry_forward;
    if (name == "zero") return EmptySetPolicy::zero;
    if (name == "exclude") return EmptySetPolicy::exclude;
    throw std::invalid_argument("unknown empty-set policy: " + name);
}

std::string to_string(SegmentationMethod method) {
    switch (method) {
        case SegmentationMethod::lsm: return "lsm";
        case SegmentationMethod::random: return "random";
        case SegmentationMethod::combined: return "combined";
        case SegmentationMethod::external: return "external";
    }
    throw std::logic_error("unknown segmentation method");
}

SegmentationMethod method_from_string(const std::string& name) {
    if (name == "lsm") return SegmentationMethod::lsm;
    if (name == "random") return SegmentationMethod::random;
    if (name == "combined") return SegmentationMethod::combined;
    if (name == "external") return SegmentationMethod::external;
    throw std::invalid_argument("unknown segmentation method: " + name);
}

Rational median(const std::vector<int>& entries) {
    if (entries.empty()) throw std::invalid_argument("median of an empty multiset is undefined");
    std::vector<int> sorted = entries;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();
    if (n % 2 == 1) return Rational(sorted[n / 2]);
    return Rational(static_cast<std::int64_t>(sorted[n / 2 - 1]) + sorted[n / 2], 2);
}

MedianSeries link_set_medians(const std::vector<LinkSet>& sets) {
    MedianSeries series(sets.size());
    for (std::size_t k = 0; k < sets.size(); ++k)
        if (!sets[k].entries.empty()) series[k] = median(sets[k].entries);
    return series;
}

MedianSeries effective_medians(const MedianSeries& raw, EmptySetPolicy policy) {
    MedianSeries out = raw;
    switch (policy) {
        case EmptySetPolicy::carry_forward:
            for (std::size_t k = 1; k < out.size(); ++k)
                if (!out[k] && out[k - 1]) out[k] = out[k - 1];
            break;
        case EmptySetPolicy::zero:
            for (auto& value : out)
                if (!value) value = Rational(0);
            break;
        case EmptySetPolicy::exclude:
            break;
    }
    return out;
}

DifferenceSeries median_differences(const MedianSeries& raw, EmptySetPolicy policy) {
    DifferenceSeries diffs(raw.size());
    if (raw.empty()) return diffs;

    if (policy == EmptySetPolicy::exclude) {
        std::optional<std::size_t> previous_defined;
        for (std::size_t k = 0; k < raw.size(); ++k) {
            if (!raw[k]) continue;
            if (previous_defined) diffs[k] = boost::abs(*raw[k] - *raw[*previous_defined]);
            previous_defined = k;
        }
        return diffs;
    }

    const MedianSeries effective = effective_medians(raw, policy);
    for (std::size_t k = 1; k < effective.size(); ++k)
        if (effective[k] && effective[k - 1]) diffs[k] = boost::abs(*effective[k] - *effective[k - 1]);
    return diffs;
}

std::optional<Rational> mean_median_difference(const DifferenceSeries& diffs) {
    Rational sum(0);
    std::int64_t defined = 0;
    for (const auto& diff : diffs) {
        if (!diff) continue;
        sum += *diff;
        ++defined;
    }
    if (defined == 0) return std::nullopt;
    return sum / defined;
}

std::set<int> boundaries_from_differences(const DifferenceSeries& diffs) {
    std::set<int> boundaries;
    const auto mean = mean_median_difference(diffs);
    if (!mean) return boundaries;
    for (std::size_t k = 0; k < diffs.size(); ++k)
        if (diffs[k] && *diffs[k] > *mean) boundaries.insert(static_cast<int>(k) + 1);
    return boundaries;
}

void validate(const Segmentation& seg) {
    for (int b : seg.boundaries)
        if (b < 2 || b > seg.sentence_count)
            throw std::invalid_argument("boundary " + std::to_string(b) + " outside {2.." +
                                        std::to_string(seg.sentence_count) + "}");
}

Segmentation segment(const Document& doc, LinkLevel level, const SegmenterOptions& options) {
    return segment_matrix(build_link_matrix(doc), level, options, doc.id);
}

Segmentation segment_matrix(const LinkMatrix& matrix, LinkLevel level,
                            const SegmenterOptions& options, const std::string& doc_id) {
    const auto sets = build_link_sets(matrix, level);
    const auto medians = link_set_medians(sets);
    const auto diffs = median_differences(medians, options.empty_set_policy);

    Segmentation seg;
    seg.doc_id = doc_id;
    seg.sentence_count = matrix.size();
    seg.method = SegmentationMethod::lsm;
    seg.link_level = level.value();
    seg.boundaries = boundaries_from_differences(diffs);
    seg.degenerate = !mean_median_difference(diffs).has_value();
    return seg;
}

Segmentation combine(const Segmentation& a, const Segmentation& b) {
    if (a.sentence_count != b.sentence_count)
        throw std::invalid_argument("combine: segmentations cover different document lengths (" +
                                    std::to_string(a.sentence_count) + " vs " +
                                    std::to_string(b.sentence_count) + ")");
    if (!a.doc_id.empty() && !b.doc_id.empty() && a.doc_id != b.doc_id)
        throw std::invalid_argument("combine: segmentations cover different documents ('" +
                                    a.doc_id + "' vs '" + b.doc_id + "')");

    Segmentation out;
    out.doc_id = a.doc_id.empty() ? b.doc_id : a.doc_id;
    out.sentence_count = a.sentence_count;
    out.method = SegmentationMethod::combined;
    if (a.link_level && b.link_level && *a.link_level == *b.link_level) out.link_level = a.link_level;
    out.boundaries = a.boundaries;
    out.boundaries.insert(b.boundaries.begin(), b.boundaries.end());
    out.degenerate = a.degenerate && b.degenerate;
    return out;
}

}  // namespace lsm
