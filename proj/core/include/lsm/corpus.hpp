#pragma once

#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lsm/document.hpp"

namespace lsm {

/// Corpus file error carrying the 1-based line number it was detected at.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string doc_id, int line, const std::string& message)
        : std::runtime_error(doc_id + ":" + std::to_string(line) + ": " + message),
          doc_id_(std::move(doc_id)),
          line_(line) {}

    const std::string& doc_id() const { return doc_id_; }
    int line() const { return line_; }

private:
    std::string doc_id_;
    int line_;
};

/// Parses the line-oriented corpus format:
///   - one sentence per line, tokenized with `config`
///   - a line starting "## " marks a section heading before the next sentence
///   - lines starting "# " are comments, blank lines are ignored
/// A heading with no following sentence is a ParseError; a document with
/// fewer than two sentences fails validation (std::invalid_argument).
Document parse_document(std::istream& source, const std::string& id, const NormalizationConfig& config);
Document parse_document(const std::string& text, const std::string& id, const NormalizationConfig& config);

/// Inverse of parse_document up to comments, blank lines and heading text
/// (heading positions are kept; their text is not). Re-parsing the output
/// yields an equal Document.
std::string serialize_document(const Document& doc);

/// Loads every regular file under `dir` (recursively, hidden files skipped).
/// Document ids are the relative paths minus extension, so files grouped in
/// subdirectories keep that grouping in the id ("reports/acme-1993").
/// Returns documents sorted by id; empty or unreadable directory throws.
std::vector<Document> load_corpus(const std::filesystem::path& dir, const NormalizationConfig& config);

}  // namespace lsm
