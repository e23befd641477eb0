#include "knowmap/termspace.hpp"

namespace knowmap {

const std::vector<std::string>& default_stopwords() {
    static const std::vector<std::string> words = {
        "a", "about", "above", "after", "again", "against", "all", "also",
        "although", "am", "among", "an", "and", "any", "are", "as",
        "at", "be", "because", "been", "before", "being", "below", "between",
        "both", "but", "by", "can", "cannot", "could", "did", "do",
        "does", "doing", "down", "during", "each", "either", "else", "etc",
        "even", "ever", "every", "few", "for", "from", "further", "had",
        "has", "have", "having", "he", "hence", "her", "here", "hers",
        "herself", "him", "himself", "his", "how", "however", "i", "if",
        "in", "into", "is", "it", "its", "itself", "just", "like",
        "may", "me", "might", "more", "moreover", "most", "much", "must",
        "my", "myself", "neither", "never", "nevertheless", "no", "nor", "not",
        "now", "of", "off", "often", "on", "once", "one", "only",
        "onto", "or", "other", "otherwise", "our", "ours", "ourselves", "out",
        "over", "own", "per", "perhaps", "quite", "rather", "really", "same",
        "shall", "she", "should", "since", "so", "some", "something", "sometimes",
        "still", "such", "than", "that", "the", "their", "theirs", "them",
        "themselves", "then", "there", "therefore", "these", "they", "this", "those",
        "though", "through", "thus", "to", "too", "under", "unless", "until",
        "up", "upon", "us", "usually", "very", "via", "was", "we",
        "were", "what", "when", "where", "whereas", "whether", "which", "while",
        "who", "whom", "whose", "why", "will", "with", "within", "without",
        "would", "yet", "you", "your", "yours", "yourself", "yourselves",
    };
    return words;
}

TermConfig default_term_config() {
    TermConfig config;
    const auto& words = default_stopwords();
    config.stopwords.insert(words.begin(), words.end());
    return config;
}

} // namespace knowmap
