#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "lsm/document.hpp"

namespace lsm {

/// Minimum pairwise link count for a partner sentence to enter a link set.
class LinkLevel {
public:
    explicit LinkLevel(int value) : value_(value) {
        if (value < 1) throw std::invalid_argument("link level must be >= 1");
    }
    int value() const { return value_; }

private:
    int value_;
};

/// Symmetric sentence-pair link counts. Pairs are stored once with i < j;
/// count() accepts either order. The diagonal is undefined: links hold
/// between two distinct sentences only.
class LinkMatrix {
public:
    LinkMatrix() = default;
    explicit LinkMatrix(int sentence_count) : n_(sentence_count) {}
    LinkMatrix(int sentence_count, std::map<std::pair<int, int>, int> counts);

    int size() const { return n_; }
    int count(int i, int j) const;
    void add(int i, int j, int links);

    /// Nonzero pairs, keyed (i, j) with i < j, ascending.
    const std::map<std::pair<int, int>, int>& pairs() const { return counts_; }

private:
    int n_ = 0;
    std::map<std::pair<int, int>, int> counts_;
};

/// Number of links between two sentences: for every normalized lexical item
/// type they share, min(occurrences in a, occurrences in b). Non-lexical
/// tokens never link. Throws std::invalid_argument on a same-index pair.
int count_links(const Sentence& a, const Sentence& b);

/// Pairwise link counts over the whole document.
LinkMatrix build_link_matrix(const Document& doc);

/// Per-sentence multiset of partner indices: partner j enters sentence i's
/// set with multiplicity count(i, j) whenever count(i, j) >= level.
struct LinkSet {
    int owner = 0;
    std::vector<int> entries;  // sorted ascending, one entry per link
};

std::vector<LinkSet> build_link_sets(const LinkMatrix& matrix, LinkLevel level);

/// Debug export: one "i,j,count" row per nonzero pair, i < j ascending.
std::string to_csv(const LinkMatrix& matrix);

}  // namespace lsm
