#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "lsm/evaluation.hpp"
#include "lsm/segmenter.hpp"

namespace lsm {

/// Free-form scalar metadata attached to serialized artifacts (normalization
/// settings, seeds, manifest hash, ...).
using ParamValue = std::variant<bool, std::int64_t, double, std::string, std::vector<std::string>>;
using Params = std::map<std::string, ParamValue>;

/// Segmentation interchange JSON:
///   {"doc_id", "method", "link_level", "boundaries", "params"}
/// The sentence count is carried as params["sentence_count"] so files are
/// self-contained for combination.
std::string segmentation_to_json(const Segmentation& seg, const Params& params = {});

struct ParsedSegmentation {
    Segmentation segmentation;
    Params params;
};

/// Parses and validates segmentation JSON (method must be one of
/// lsm|random|combined|external, boundaries within {2..n}). Throws
/// std::runtime_error with context on malformed input.
ParsedSegmentation segmentation_from_json(const std::string& text);

std::string eval_report_to_json(const EvalReport& report, const Params& params = {});
EvalReport eval_report_from_json(const std::string& text);

std::string corpus_summary_to_json(const CorpusSummary& summary, const Params& params = {});

/// Summary-table CSV: header "measure,method,genre,value" and one row per
/// measure x method x genre with the across-level mean as a percentage.
/// `comment` lines, when given, are prepended as "# ..." rows.
std::string corpus_summary_to_csv(const CorpusSummary& summary,
                                  const std::vector<std::string>& comments = {});

}  // namespace lsm
