#include "lsm/evaluation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <tuple>

#include "lsm/rng.hpp"

namespace lsm {

ReferenceSegments extract_reference(const Document& doc) {
    ReferenceSegments ref;
    ref.positions = doc.heading_positions;
    ref.positions.erase(1);
    return ref;
}

EvalReport score(const Segmentation& seg, const ReferenceSegments& ref, int window) {
    if (window < 0) throw std::invalid_argument("score: window must be >= 0");

    EvalReport report;
    report.doc_id = seg.doc_id;
    report.method = seg.method;
    report.link_level = seg.link_level;
    report.window = window;
    report.inserted_count = static_cast<int>(seg.boundaries.size());
    report.reference_count = static_cast<int>(ref.positions.size());

    if (window == 0) {
        std::set_intersection(seg.boundaries.begin(), seg.boundaries.end(),
                              ref.positions.begin(), ref.positions.end(),
                              std::inserter(report.matches, report.matches.end()));
    } else {
        std::set<int> unmatched = ref.positions;
        for (int boundary : seg.boundaries) {
            std::optional<int> best;
            int best_distance = window + 1;
            for (int position : unmatched) {
                if (position > boundary + window) break;
                int distance = std::abs(boundary - position);
                // ascending iteration + strict < keeps the leftmost on ties
                if (distance <= window && distance < best_distance) {
                    best = position;
                    best_distance = distance;
                }
            }
            if (best) {
                report.matches.insert(*best);
                unmatched.erase(*best);
            }
        }
    }

    const auto matched = static_cast<double>(report.matches.size());
    if (report.reference_count > 0) report.recall = matched / report.reference_count;
    if (report.inserted_count > 0) report.precision = matched / report.inserted_count;
    return report;
}

std::string genre_of(const std::string& doc_id) {
    auto slash = doc_id.rfind('/');
    if (slash == std::string::npos || slash == 0) return "all";
    return doc_id.substr(0, slash);
}

namespace {

struct Accumulator {
    std::vector<double> recalls;
    std::vector<double> precisions;
    int doc_count = 0;
};

std::optional<double> mean_of(const std::vector<double>& values) {
    if (values.empty()) return std::nullopt;
    double sum = 0;
    for (double v : values) sum += v;
    return sum / static_cast<double>(values.size());
}

std::optional<double> stddev_of(const std::vector<double>& values) {
    if (values.empty()) return std::nullopt;
    const double mean = *mean_of(values);
    double sum_sq = 0;
    for (double v : values) sum_sq += (v - mean) * (v - mean);
    return std::sqrt(sum_sq / static_cast<double>(values.size()));
}

std::optional<double> mean_of_defined(const std::vector<std::optional<double>>& values) {
    std::vector<double> defined;
    for (const auto& v : values)
        if (v) defined.push_back(*v);
    return mean_of(defined);
}

}  // namespace

CorpusSummary aggregate(const std::vector<EvalReport>& reports, const std::vector<int>& levels) {
    CorpusSummary summary;
    summary.levels = levels;
    if (reports.empty()) return summary;

    // level key -1 stands for "no level" (combined/external methods)
    std::map<std::tuple<std::string, std::string, int>, Accumulator> groups;
    for (const EvalReport& report : reports) {
        auto key = std::make_tuple(to_string(report.method), genre_of(report.doc_id),
                                   report.link_level.value_or(-1));
        Accumulator& acc = groups[key];
        ++acc.doc_count;
        if (report.recall) acc.recalls.push_back(*report.recall);
        if (report.precision) acc.precisions.push_back(*report.precision);
    }

    for (const auto& [key, acc] : groups) {
        SummaryCell cell;
        cell.method = std::get<0>(key);
        cell.genre = std::get<1>(key);
        if (std::get<2>(key) >= 0) cell.link_level = std::get<2>(key);
        cell.mean_recall = mean_of(acc.recalls);
        cell.recall_stddev = stddev_of(acc.recalls);
        cell.mean_precision = mean_of(acc.precisions);
        cell.precision_stddev = stddev_of(acc.precisions);
        cell.doc_count = acc.doc_count;
        summary.cells.push_back(std::move(cell));
    }

    // per-genre means across levels, then per-method means across genres,
    // unweighted at each stage
    std::map<std::pair<std::string, std::string>,
             std::pair<std::vector<std::optional<double>>, std::vector<std::optional<double>>>>
        by_genre;
    for (const SummaryCell& cell : summary.cells) {
        auto& [recalls, precisions] = by_genre[{cell.method, cell.genre}];
        recalls.push_back(cell.mean_recall);
        precisions.push_back(cell.mean_precision);
    }
    for (const auto& [key, values] : by_genre) {
        GenreMean gm;
        gm.method = key.first;
        gm.genre = key.second;
        gm.mean_recall = mean_of_defined(values.first);
        gm.mean_precision = mean_of_defined(values.second);
        summary.genre_means.push_back(std::move(gm));
    }

    std::map<std::string, std::pair<std::vector<std::optional<double>>, std::vector<std::optional<double>>>>
        by_method;
    for (const GenreMean& gm : summary.genre_means) {
        auto& [recalls, precisions] = by_method[gm.method];
        recalls.push_back(gm.mean_recall);
        precisions.push_back(gm.mean_precision);
    }
    for (const auto& [method, values] : by_method) {
        MethodOverall overall;
        overall.method = method;
        overall.mean_recall = mean_of_defined(values.first);
        overall.mean_precision = mean_of_defined(values.second);
        summary.overall.push_back(std::move(overall));
    }

    return summary;
}

double significance(const std::vector<double>& a, const std::vector<double>& b,
                    std::uint64_t seed, int permutations) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("significance: both score lists must be non-empty");
    if (permutations < 1) throw std::invalid_argument("significance: permutations must be >= 1");

    // mean(A) - mean(B) is strictly increasing in sum(A) for a fixed pool, so
    // the tail count can use subset sums directly
    std::vector<double> pool = a;
    pool.insert(pool.end(), b.begin(), b.end());
    double observed = 0;
    for (double v : a) observed += v;

    std::mt19937_64 engine(seed);
    const std::size_t na = a.size();
    int hits = 0;
    for (int p = 0; p < permutations; ++p) {
        shuffle_in_place(pool, engine);
        double sum = 0;
        for (std::size_t i = 0; i < na; ++i) sum += pool[i];
        if (sum >= observed) ++hits;
    }
    return static_cast<double>(1 + hits) / static_cast<double>(permutations + 1);
}

}  // namespace lsm
