#include "lsm/stoplist.hpp"

namespace lsm {

// Grammatical/function words only: articles, prepositions, conjunctions,
// pronouns, auxiliaries and a few frequency-list adverbials. Content words
// stay out so they can still form links.
const std::vector<std::string>& default_english_stoplist() {
    static const std::vector<std::string> words = {
        // articles
        "a", "an", "the",
        // prepositions
        "about", "above", "across", "after", "against", "along", "amid",
        "among", "around", "at", "before", "behind", "below", "beneath",
        "beside", "besides", "between", "beyond", "by", "despite", "down",
        "during", "except", "for", "from", "in", "inside", "into", "near",
        "of", "off", "on", "onto", "out", "outside", "over", "past", "per",
        "since", "through", "throughout", "till", "to", "toward", "towards",
        "under", "underneath", "until", "unto", "up", "upon", "via", "with",
        "within", "without",
        // conjunctions
        "although", "and", "as", "because", "but", "if", "lest", "nor", "once",
        "or", "so", "than", "that", "though", "unless", "when", "whenever",
        "where", "whereas", "wherever", "whether", "while", "yet",
        // pronouns and determiners
        "all", "another", "any", "anybody", "anyone", "anything", "both",
        "each", "either", "everybody", "everyone", "everything", "few", "he",
        "her", "hers", "herself", "him", "himself", "his", "i", "it", "its",
        "itself", "many", "me", "mine", "my", "myself", "neither", "no",
        "nobody", "none", "nothing", "one", "other", "others", "our", "ours",
        "ourselves", "several", "she", "some", "somebody", "someone",
        "something", "such", "their", "theirs", "them", "themselves", "these",
        "they", "this", "those", "us", "we", "what", "whatever", "which",
        "whichever", "who", "whoever", "whom", "whose", "you", "your", "yours",
        "yourself", "yourselves",
        // auxiliaries and modals
        "am", "are", "be", "been", "being", "can", "cannot", "could", "did",
        "do", "does", "doing", "done", "had", "has", "have", "having", "is",
        "may", "might", "must", "ought", "shall", "should", "was", "were",
        "will", "would",
        // high-frequency adverbials and particles
        "again", "almost", "already", "also", "always", "else", "even", "ever",
        "here", "how", "however", "just", "more", "most", "much", "never",
        "not", "now", "often", "only", "quite", "rather", "same", "still",
        "then", "there", "therefore", "thus", "too", "very", "why",
    };
    return words;
}

}  // namespace lsm
