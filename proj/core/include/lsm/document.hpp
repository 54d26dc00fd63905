#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

namespace lsm {

/// Normalization knobs applied during tokenization. The stoplist held here
/// must already be normalized under the same flags; build instances through
/// make_config() rather than by hand.
struct NormalizationConfig {
    std::unordered_set<std::string> stoplist;
    bool stem = true;
    bool case_fold = true;
    int min_token_len = 2;

    /// Identifier recorded in run metadata ("builtin-english-v1" or a hash
    /// of a user-supplied list).
    std::string stoplist_id = "builtin-english-v1";
};

struct NormalizationOptions {
    bool stem = true;
    bool case_fold = true;
    int min_token_len = 2;
};

/// Config with the shipped English stoplist, entries normalized per options.
NormalizationConfig make_config(const NormalizationOptions& options = {});

/// Config with a caller-supplied stoplist (raw words; they are normalized
/// here so lookups agree with token normalization).
NormalizationConfig make_config(const std::vector<std::string>& stoplist_words,
                                const NormalizationOptions& options = {});

struct Token {
    std::string surface;
    std::string normalized;  // empty for punctuation runs
    bool is_lexical = false;
};

/// Lowercase (if case_fold) and stem (if stem, alphabetic words only).
/// Idempotent: normalize(normalize(w)) == normalize(w).
std::string normalize_word(const std::string& word, const NormalizationConfig& config);

/// Splits raw text into tokens. Word tokens are maximal alphanumeric runs
/// (bytes >= 0x80 count as letters so UTF-8 passes through); everything
/// between them becomes a non-lexical punctuation token. A word token is
/// lexical unless it contains a digit, its normalized form is shorter than
/// min_token_len, or the normalized form is in the stoplist.
std::vector<Token> tokenize(const std::string& raw, const NormalizationConfig& config);

struct Sentence {
    int index = 0;  // 1-based position in the document
    std::vector<Token> tokens;
    std::string raw;
};

/// A document is an ordered sentence list plus the positions at which the
/// source text opened an orthographic section (1-based sentence indices).
struct Document {
    std::string id;
    std::vector<Sentence> sentences;
    std::set<int> heading_positions;

    int size() const { return static_cast<int>(sentences.size()); }
    const Sentence& sentence(int index) const { return sentences.at(static_cast<std::size_t>(index - 1)); }
};

/// Validates the Document invariants: consecutive 1-based indices, at least
/// two sentences, heading positions within range. Throws std::invalid_argument.
void validate(const Document& doc);

}  // namespace lsm
