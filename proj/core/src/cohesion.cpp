#include "lsm/cohesion.hpp"

#include <algorithm>
#include <unordered_map>

namespace lsm {
namespace {

std::unordered_map<std::string, int> lexical_type_counts(const Sentence& s) {
    std::unordered_map<std::string, int> counts;
    for (const Token& token : s.tokens)
        if (token.is_lexical) ++counts[token.normalized];
    return counts;
}

}  // namespace

LinkMatrix::LinkMatrix(int sentence_count, std::map<std::pair<int, int>, int> counts)
    : n_(sentence_count), counts_(std::move(counts)) {
    for (const auto& [pair, value] : counts_) {
        auto [i, j] = pair;
        if (i < 1 || j <= i || j > n_ || value < 0)
            throw std::invalid_argument("link matrix entry out of range");
    }
}

int LinkMatrix::count(int i, int j) const {
    if (i == j) throw std::invalid_argument("link count undefined for a sentence with itself");
    if (i < 1 || j < 1 || i > n_ || j > n_)
        throw std::invalid_argument("link matrix index out of range");
    if (i > j) std::swap(i, j);
    auto it = counts_.find({i, j});
    return it == counts_.end() ? 0 : it->second;
}

void LinkMatrix::add(int i, int j, int links) {
    if (i == j) throw std::invalid_argument("link count undefined for a sentence with itself");
    if (i > j) std::swap(i, j);
    if (i < 1 || j > n_) throw std::invalid_argument("link matrix index out of range");
    if (links != 0) counts_[{i, j}] += links;
}

int count_links(const Sentence& a, const Sentence& b) {
    if (a.index == b.index)
        throw std::invalid_argument("count_links requires two separate sentences");
    auto counts_a = lexical_type_counts(a);
    auto counts_b = lexical_type_counts(b);
    if (counts_b.size() < counts_a.size()) std::swap(counts_a, counts_b);
    int links = 0;
    for (const auto& [type, occurrences] : counts_a) {
        auto it = counts_b.find(type);
        if (it != counts_b.end()) links += std::min(occurrences, it->second);
    }
    return links;
}

LinkMatrix build_link_matrix(const Document& doc) {
    LinkMatrix matrix(doc.size());

    // Inverted index over normalized lexical types; each type contributes
    // min(count_i, count_j) to every pair of sentences it appears in.
    std::unordered_map<std::string, std::vector<std::pair<int, int>>> postings;
    for (const Sentence& sentence : doc.sentences)
        for (const auto& [type, occurrences] : lexical_type_counts(sentence))
            postings[type].emplace_back(sentence.index, occurrences);

    for (const auto& [type, entries] : postings) {
        for (std::size_t a = 0; a + 1 < entries.size(); ++a)
            for (std::size_t b = a + 1; b < entries.size(); ++b)
                matrix.add(entries[a].first, entries[b].first,
                           std::min(entries[a].second, entries[b].second));
    }
    return matrix;
}

std::vector<LinkSet> build_link_sets(const LinkMatrix& matrix, LinkLevel level) {
    std::vector<LinkSet> sets(static_cast<std::size_t>(matrix.size()));
    for (int i = 1; i <= matrix.size(); ++i) sets[static_cast<std::size_t>(i - 1)].owner = i;

    for (const auto& [pair, count] : matrix.pairs()) {
        if (count < level.value()) continue;
        auto [i, j] = pair;
        auto& entries_i = sets[static_cast<std::size_t>(i - 1)].entries;
        auto& entries_j = sets[static_cast<std::size_t>(j - 1)].entries;
        entries_i.insert(entries_i.end(), static_cast<std::size_t>(count), j);
        entries_j.insert(entries_j.end(), static_cast<std::size_t>(count), i);
    }
    for (LinkSet& set : sets) std::sort(set.entries.begin(), set.entries.end());
    return sets;
}

std::string to_csv(const LinkMatrix& matrix) {
    std::string out;
    for (const auto& [pair, count] : matrix.pairs()) {
        out += std::to_string(pair.first);
        out += ',';
        out += std::to_string(pair.second);
        out += ',';
        out += std::to_string(count);
        out += '\n';
    }
    return out;
}

}  // namespace lsm
