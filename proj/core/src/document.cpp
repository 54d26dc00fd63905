#include "lsm/document.hpp"

#include <cctype>
#include <stdexcept>

#include "lsm/porter.hpp"
#include "lsm/stoplist.hpp"

namespace lsm {
namespace {

bool is_word_byte(unsigned char c) {
    // Bytes >= 0x80 are UTF-8 continuation/lead bytes; treat them as letters
    // so multibyte words survive as single tokens.
    return std::isalnum(c) != 0 || c >= 0x80;
}

bool is_all_alpha_ascii(const std::string& s) {
    for (unsigned char c : s)
        if (c < 'a' || c > 'z') return false;
    return !s.empty();
}

bool contains_digit(const std::string& s) {
    for (unsigned char c : s)
        if (std::isdigit(c)) return true;
    return false;
}

std::string lowercase_ascii(const std::string& s) {
    std::string out = s;
    for (char& c : out)
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    return out;
}

NormalizationConfig build_config(const std::vector<std::string>& raw_words,
                                 const NormalizationOptions& options,
                                 std::string stoplist_id) {
    NormalizationConfig config;
    config.stem = options.stem;
    config.case_fold = options.case_fold;
    config.min_token_len = options.min_token_len;
    config.stoplist_id = std::move(stoplist_id);
    for (const auto& word : raw_words) config.stoplist.insert(normalize_word(word, config));
    return config;
}

}  // namespace

NormalizationConfig make_config(const NormalizationOptions& options) {
    return build_config(default_english_stoplist(), options, "builtin-english-v1");
}

NormalizationConfig make_config(const std::vector<std::string>& stoplist_words,
                                const NormalizationOptions& options) {
    return build_config(stoplist_words, options, "custom");
}

std::string normalize_word(const std::string& word, const NormalizationConfig& config) {
    std::string out = config.case_fold ? lowercase_ascii(word) : word;
    if (config.stem && is_all_alpha_ascii(out)) {
        // Stem to a fixed point: a single Porter pass is not idempotent on
        // every word (step 4 can expose a trailing s that step 1a would strip
        // on a second pass), and normalization must be. Terminates because no
        // pass lengthens the word.
        std::string next = porter_stem(out);
        while (next != out) {
            out = std::move(next);
            next = porter_stem(out);
        }
    }
    return out;
}

std::vector<Token> tokenize(const std::string& raw, const NormalizationConfig& config) {
    std::vector<Token> tokens;
    std::size_t i = 0;
    const std::size_t n = raw.size();
    while (i < n) {
        // skip whitespace entirely; it delimits but is not a token
        if (std::isspace(static_cast<unsigned char>(raw[i]))) {
            ++i;
            continue;
        }
        const bool word = is_word_byte(static_cast<unsigned char>(raw[i]));
        std::size_t start = i;
        while (i < n && !std::isspace(static_cast<unsigned char>(raw[i])) &&
               is_word_byte(static_cast<unsigned char>(raw[i])) == word)
            ++i;
        Token token;
        token.surface = raw.substr(start, i - start);
        if (word) {
            token.normalized = normalize_word(token.surface, config);
            token.is_lexical = !contains_digit(token.normalized) &&
                               static_cast<int>(token.normalized.size()) >= config.min_token_len &&
                               !config.stoplist.contains(token.normalized);
        }
        tokens.push_back(std::move(token));
    }
    return tokens;
}

void validate(const Document& doc) {
    if (doc.sentences.size() < 2)
        throw std::invalid_argument("document '" + doc.id + "': needs at least 2 sentences, has " +
                                    std::to_string(doc.sentences.size()));
    for (std::size_t k = 0; k < doc.sentences.size(); ++k) {
        if (doc.sentences[k].index != static_cast<int>(k) + 1)
            throw std::invalid_argument("document '" + doc.id + "': sentence indices not consecutive from 1");
    }
    for (int pos : doc.heading_positions) {
        if (pos < 1 || pos > doc.size())
            throw std::invalid_argument("document '" + doc.id + "': heading position " +
                                        std::to_string(pos) + " out of range");
    }
}

}  // namespace lsm
