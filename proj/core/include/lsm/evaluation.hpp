#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lsm/document.hpp"
#include "lsm/segmenter.hpp"

namespace lsm {

/// Author-placed section starts usable as reference boundaries. Sections
/// starting with sentence 1 are disregarded: every text starts there.
struct ReferenceSegments {
    std::set<int> positions;  // subset of {2..n}
};

ReferenceSegments extract_reference(const Document& doc);

struct EvalReport {
    std::string doc_id;
    SegmentationMethod method = SegmentationMethod::lsm;
    std::optional<int> link_level;
    std::set<int> matches;  // matched reference positions
    std::optional<double> recall;     // empty when reference_count == 0
    std::optional<double> precision;  // empty when inserted_count == 0
    int inserted_count = 0;
    int reference_count = 0;
    int window = 0;
};

/// Recall/precision of a segmentation against a reference. With window 0 a
/// match is exact index equality; with window w an inserted boundary may
/// match a reference within distance w. Each reference is matched at most
/// once; inserted boundaries are processed in ascending order and take the
/// nearest unmatched reference, ties going to the leftmost.
EvalReport score(const Segmentation& seg, const ReferenceSegments& ref, int window = 0);

/// One aggregation cell: a (method, genre, link level) group of documents.
struct SummaryCell {
    std::string method;
    std::string genre;
    std::optional<int> link_level;
    std::optional<double> mean_recall;
    std::optional<double> recall_stddev;
    std::optional<double> mean_precision;
    std::optional<double> precision_stddev;
    int doc_count = 0;
};

/// Per-genre value in the style of the summary table: the unweighted mean of
/// that genre's per-level cell means.
struct GenreMean {
    std::string method;
    std::string genre;
    std::optional<double> mean_recall;
    std::optional<double> mean_precision;
};

struct MethodOverall {
    std::string method;
    std::optional<double> mean_recall;
    std::optional<double> mean_precision;
};

struct SignificanceEntry {
    std::string measure;  // "recall" | "precision"
    std::string method_a;
    std::string method_b;
    std::optional<int> link_level;
    double p = 1.0;
    int permutations = 0;
    std::uint64_t seed = 0;
};

struct CorpusSummary {
    std::vector<int> levels;
    std::vector<SummaryCell> cells;
    std::vector<GenreMean> genre_means;
    std::vector<MethodOverall> overall;
    std::vector<SignificanceEntry> p_values;
};

/// Genre of a document id: the directory part ("reports/acme" -> "reports"),
/// or "all" for ids without one.
std::string genre_of(const std::string& doc_id);

/// Unweighted means per (method, genre, level) cell, skipping not-applicable
/// scores; then per-genre means across levels and per-method overall means
/// across genres, each stage unweighted.
CorpusSummary aggregate(const std::vector<EvalReport>& reports, const std::vector<int>& levels);

/// One-sided Monte Carlo permutation test of mean(a) > mean(b) by label
/// shuffling. Returns the add-one estimate (1 + hits) / (permutations + 1),
/// always in (0, 1]. Throws std::invalid_argument on an empty group.
double significance(const std::vector<double>& a, const std::vector<double>& b,
                    std::uint64_t seed, int permutations = 10000);

}  // namespace lsm
