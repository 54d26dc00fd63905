#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "lsm/cohesion.hpp"
#include "lsm/document.hpp"

namespace lsm {

/// Exact arithmetic for medians and their mean: link-set medians are integers
/// or half-integers and the boundary rule is a strict comparison, so floating
/// point is avoided throughout.
using Rational = boost::rational<std::int64_t>;

/// What to do with sentences whose link set is empty.
///   carry_forward - reuse the previous effective median (a leading empty run
///                   stays undefined); such sentences contribute zero
///                   differences and never receive boundaries
///   zero          - treat the missing median as 0
///   exclude       - drop the sentence from the series; differences are taken
///                   against the nearest preceding sentence with a median
enum class EmptySetPolicy { carry_forward, zero, exclude };

std::string to_string(EmptySetPolicy policy);
EmptySetPolicy empty_set_policy_from_string(const std::string& name);

enum class SegmentationMethod { lsm, random, combined, external };

std::string to_string(SegmentationMethod method);
SegmentationMethod method_from_string(const std::string& name);

/// Per-sentence link-set medians; element k belongs to sentence k+1 and is
/// empty when that sentence's link set is empty.
using MedianSeries = std::vector<std::optional<Rational>>;

/// Per-sentence median differences, aligned with MedianSeries (element k for
/// sentence k+1). The first element is always empty: sentence 1 has no
/// predecessor.
using DifferenceSeries = std::vector<std::optional<Rational>>;

/// Median of a non-empty multiset: middle element for odd sizes, mean of the
/// two middle elements for even sizes. Throws std::invalid_argument on empty
/// input (an empty link set has no median; callers decide per EmptySetPolicy).
Rational median(const std::vector<int>& entries);

/// Medians of all link sets, empty sets giving empty values.
MedianSeries link_set_medians(const std::vector<LinkSet>& sets);

/// The series actually compared by median_differences after the empty-set
/// policy is applied. For exclude this is the raw series unchanged.
MedianSeries effective_medians(const MedianSeries& raw, EmptySetPolicy policy);

/// |median(i) - median(i-1)| over the effective series; empty wherever either
/// side is undefined. Under exclude the predecessor is the nearest preceding
/// sentence with a defined median.
DifferenceSeries median_differences(const MedianSeries& raw,
                                    EmptySetPolicy policy = EmptySetPolicy::carry_forward);

/// Mean over the defined differences; empty when none are defined (the
/// degenerate-text case, which produces no boundaries).
std::optional<Rational> mean_median_difference(const DifferenceSeries& diffs);

/// Sentences whose difference is defined and strictly greater than the text
/// mean. Always a subset of {2..n}.
std::set<int> boundaries_from_differences(const DifferenceSeries& diffs);

struct Segmentation {
    std::string doc_id;
    int sentence_count = 0;
    SegmentationMethod method = SegmentationMethod::lsm;
    std::optional<int> link_level;
    std::set<int> boundaries;  // each boundary starts a new segment; subset of {2..n}
    bool degenerate = false;   // no defined median differences anywhere
};

/// Throws std::invalid_argument when boundaries fall outside {2..n}.
void validate(const Segmentation& seg);

struct SegmenterOptions {
    EmptySetPolicy empty_set_policy = EmptySetPolicy::carry_forward;
};

/// The full pipeline: link sets at `level`, medians, differences, then a
/// boundary before every sentence whose difference exceeds the text mean.
Segmentation segment(const Document& doc, LinkLevel level, const SegmenterOptions& options = {});

/// Same, starting from a prebuilt matrix (doc_id supplied by the caller).
Segmentation segment_matrix(const LinkMatrix& matrix, LinkLevel level,
                            const SegmenterOptions& options = {}, const std::string& doc_id = "");

/// Boundary-set union of two segmentations over the same document. Throws
/// std::invalid_argument on mismatched lengths or ids.
Segmentation combine(const Segmentation& a, const Segmentation& b);

}  // namespace lsm
