#include "lsm/porter.hpp"

#include <cstddef>
#include <string_view>

namespace lsm {
namespace {

bool is_vowel_letter(char c) {
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

// y counts as a consonant at the start of a word or after a vowel.
bool is_consonant(std::string_view w, std::size_t i) {
    char c = w[i];
    if (is_vowel_letter(c)) return false;
    if (c == 'y') return i == 0 ? true : !is_consonant(w, i - 1);
    return true;
}

// m in the [C](VC)^m[V] decomposition of the word.
int measure(std::string_view w) {
    std::size_t i = 0;
    const std::size_t n = w.size();
    int m = 0;
    while (i < n && is_consonant(w, i)) ++i;
    while (i < n) {
        while (i < n && !is_consonant(w, i)) ++i;
        if (i == n) break;
        ++m;
        while (i < n && is_consonant(w, i)) ++i;
    }
    return m;
}

bool contains_vowel(std::string_view w) {
    for (std::size_t i = 0; i < w.size(); ++i)
        if (!is_consonant(w, i)) return true;
    return false;
}

bool ends_double_consonant(std::string_view w) {
    const std::size_t n = w.size();
    return n >= 2 && w[n - 1] == w[n - 2] && is_consonant(w, n - 1);
}

// *o: ends consonant-vowel-consonant where the final consonant is not w, x or y.
bool ends_cvc(std::string_view w) {
    const std::size_t n = w.size();
    if (n < 3) return false;
    if (!is_consonant(w, n - 3) || is_consonant(w, n - 2) || !is_consonant(w, n - 1)) return false;
    char c = w[n - 1];
    return c != 'w' && c != 'x' && c != 'y';
}

bool ends_with(std::string_view w, std::string_view suffix) {
    return w.size() >= suffix.size() && w.substr(w.size() - suffix.size()) == suffix;
}

std::string_view stem_before(const std::string& w, std::size_t suffix_len) {
    return std::string_view(w).substr(0, w.size() - suffix_len);
}

void step1a(std::string& w) {
    if (ends_with(w, "sses")) {
        w.erase(w.size() - 2);  // sses -> ss
    } else if (ends_with(w, "ies")) {
        w.erase(w.size() - 2);  // ies -> i
    } else if (ends_with(w, "ss")) {
        // keep
    } else if (ends_with(w, "s")) {
        w.pop_back();
    }
}

void step1b(std::string& w) {
    if (ends_with(w, "eed")) {
        if (measure(stem_before(w, 3)) > 0) w.pop_back();  // eed -> ee
        return;
    }
    bool stripped = false;
    if (ends_with(w, "ed")) {
        if (!contains_vowel(stem_before(w, 2))) return;
        w.erase(w.size() - 2);
        stripped = true;
    } else if (ends_with(w, "ing")) {
        if (!contains_vowel(stem_before(w, 3))) return;
        w.erase(w.size() - 3);
        stripped = true;
    }
    if (!stripped) return;

    if (ends_with(w, "at") || ends_with(w, "bl") || ends_with(w, "iz")) {
        w.push_back('e');
    } else if (ends_double_consonant(w)) {
        char c = w.back();
        if (c != 'l' && c != 's' && c != 'z') w.pop_back();
    } else if (measure(w) == 1 && ends_cvc(w)) {
        w.push_back('e');
    }
}

void step1c(std::string& w) {
    if (!w.empty() && w.back() == 'y' && contains_vowel(stem_before(w, 1))) w.back() = 'i';
}

struct Rule {
    std::string_view suffix;
    std::string_view replacement;
    bool require_s_or_t = false;  // the step-4 ION rule
};

// Within a step only the longest matching suffix is considered; if its
// condition fails no other rule of the step applies.
void apply_table(std::string& w, const Rule* rules, std::size_t count, int min_measure) {
    const Rule* best = nullptr;
    for (std::size_t k = 0; k < count; ++k) {
        const Rule& r = rules[k];
        if (ends_with(w, r.suffix) && (!best || r.suffix.size() > best->suffix.size())) best = &r;
    }
    if (!best) return;
    std::string_view stem = stem_before(w, best->suffix.size());
    if (measure(stem) <= min_measure) return;
    if (best->require_s_or_t && !(ends_with(stem, "s") || ends_with(stem, "t"))) return;
    w.erase(w.size() - best->suffix.size());
    w.append(best->replacement);
}

constexpr Rule kStep2[] = {
    {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"}, {"anci", "ance"},
    {"izer", "ize"},    {"abli", "able"},   {"alli", "al"},   {"entli", "ent"},
    {"eli", "e"},       {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
    {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"}, {"fulness", "ful"},
    {"ousness", "ous"}, {"aliti", "al"},    {"iviti", "ive"},   {"biliti", "ble"},
};

constexpr Rule kStep3[] = {
    {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
    {"ical", "ic"},  {"ful", ""},   {"ness", ""},
};

constexpr Rule kStep4[] = {
    {"al", ""},   {"ance", ""}, {"ence", ""}, {"er", ""},  {"ic", ""},
    {"able", ""}, {"ible", ""}, {"ant", ""},  {"ement", ""}, {"ment", ""},
    {"ent", ""},  {"ion", "", true}, {"ou", ""}, {"ism", ""}, {"ate", ""},
    {"iti", ""},  {"ous", ""},  {"ive", ""},  {"ize", ""},
};

void step5a(std::string& w) {
    if (w.empty() || w.back() != 'e') return;
    std::string_view stem = stem_before(w, 1);
    int m = measure(stem);
    if (m > 1 || (m == 1 && !ends_cvc(stem))) w.pop_back();
}

void step5b(std::string& w) {
    if (!w.empty() && w.back() == 'l' && ends_double_consonant(w) && measure(w) > 1) w.pop_back();
}

}  // namespace

std::string porter_stem(const std::string& word) {
    if (word.size() < 3) return word;
    for (char c : word)
        if (c < 'a' || c > 'z') return word;

    std::string w = word;
    step1a(w);
    step1b(w);
    step1c(w);
    apply_table(w, kStep2, sizeof(kStep2) / sizeof(kStep2[0]), 0);
    apply_table(w, kStep3, sizeof(kStep3) / sizeof(kStep3[0]), 0);
    apply_table(w, kStep4, sizeof(kStep4) / sizeof(kStep4[0]), 1);
    step5a(w);
    step5b(w);
    return w;
}

}  // namespace lsm
