#ifndef SRCLABEL_STEMMER_HPP
#define SRCLABEL_STEMMER_HPP

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace srclabel {

struct LexiconError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dictionary plus irregular-form tables, loaded from WordNet-format data
/// files. Immutable after load.
struct Lexicon {
    std::unordered_set<std::string> base_words;
    std::unordered_map<std::string, std::string> exceptions;  // inflected -> base

    struct Stats {
        std::size_t words = 0;
        std::size_t exceptions = 0;
        std::size_t malformed_lines = 0;
    } stats;

    bool contains(std::string_view w) const {
        return base_words.count(std::string(w)) != 0;
    }
};

namespace detail {

inline std::string ascii_lower(std::string_view s) {
    std::string out(s);
    for (char& c : out)
        if (c >= 'A' && c <= 'Z') c += 32;
    return out;
}

inline bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace detail

/// Reads index.{noun,verb,adj,adv} (lemmas) and {noun,verb,adj,adv}.exc
/// (irregular forms) from `dir`. Multiword entries (containing '_') are
/// skipped; for exception lines with several bases the first wins; across
/// files the first-loaded mapping wins (noun before verb before adj/adv).
inline Lexicon load_lexicon(const std::filesystem::path& dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir))
        throw LexiconError("lexicon directory not found: " + dir.string() +
                           " (omit --lexicon to run in rule-only mode)");

    Lexicon lex;
    bool any_file = false;
    static const char* kPos[] = {"noun", "verb", "adj", "adv"};

    for (const char* pos : kPos) {
        std::ifstream in(dir / (std::string("index.") + pos));
        if (!in) continue;
        any_file = true;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == ' ') continue;  // license header
            std::istringstream ls(line);
            std::string lemma;
            if (!(ls >> lemma)) { ++lex.stats.malformed_lines; continue; }
            if (lemma.find('_') != std::string::npos) continue;
            lex.base_words.insert(detail::ascii_lower(lemma));
        }
    }
    for (const char* pos : kPos) {
        std::ifstream in(dir / (std::string(pos) + ".exc"));
        if (!in) continue;
        any_file = true;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line[0] == ' ') continue;
            std::istringstream ls(line);
            std::string inflected, base;
            if (!(ls >> inflected >> base)) {
                if (!inflected.empty()) ++lex.stats.malformed_lines;
                continue;
            }
            if (inflected.find('_') != std::string::npos ||
                base.find('_') != std::string::npos)
                continue;
            lex.exceptions.emplace(detail::ascii_lower(inflected), detail::ascii_lower(base));
        }
    }
    if (!any_file)
        throw LexiconError("no lexicon files found in " + dir.string());

    // Collapse exception chains (a->b, b->c becomes a->c) so lookup is a
    // single hop and stemming stays idempotent.
    for (auto& [inflected, base] : lex.exceptions) {
        int hops = 0;
        auto it = lex.exceptions.find(base);
        while (it != lex.exceptions.end() && it->second != base && ++hops < 5) {
            base = it->second;
            it = lex.exceptions.find(base);
        }
    }

    lex.stats.words = lex.base_words.size();
    lex.stats.exceptions = lex.exceptions.size();
    return lex;
}

namespace detail {

struct Rule {
    const char* suffix;
    const char* replacement;
    bool undouble;  // also try collapsing a trailing doubled consonant
};

// Detachment rules in their fixed order: plural forms first (the -es
// variants matter for words ending "es"), then -ed, then -ing.
inline constexpr Rule kRules[] = {
    {"s", "", false},
    {"ses", "s", false},
    {"xes", "x", false},
    {"zes", "z", false},
    {"ches", "ch", false},
    {"shes", "sh", false},
    {"ies", "y", false},
    {"es", "e", false},
    {"es", "", false},
    {"ed", "e", false},
    {"ed", "", true},
    {"ing", "e", false},
    {"ing", "", true},
};

inline bool is_vowel(char c) {
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

// "dragg" -> true; "press"/"call" keep their doubled letter.
inline bool has_collapsible_double(std::string_view stem) {
    if (stem.size() < 2) return false;
    const char a = stem[stem.size() - 2];
    const char b = stem[stem.size() - 1];
    return a == b && !is_vowel(b) && b != 's' && b != 'l';
}

inline std::string apply_rule(std::string_view word, const Rule& r) {
    std::string out(word.substr(0, word.size() - std::string_view(r.suffix).size()));
    out += r.replacement;
    return out;
}

// One pass of dictionary-validated stemming.
inline std::string stem_step_dict(const std::string& word, const Lexicon& lex) {
    if (auto it = lex.exceptions.find(word); it != lex.exceptions.end())
        return it->second;
    if (lex.base_words.count(word)) return word;
    for (const Rule& r : kRules) {
        if (!ends_with(word, r.suffix)) continue;
        if (r.suffix[0] == 's' && r.suffix[1] == '\0' && ends_with(word, "ss"))
            continue;  // "ss" never loses its final s
        std::string cand = apply_rule(word, r);
        if (cand.size() >= 2 && lex.base_words.count(cand)) return cand;
        if (r.undouble && has_collapsible_double(cand)) {
            cand.pop_back();
            if (cand.size() >= 2 && lex.base_words.count(cand)) return cand;
        }
    }
    return word;
}

// One pass of rule-only stemming: same suffixes, no dictionary, first
// candidate of length >= 3 wins. The -es variants run before the bare -s
// rule, and the bare strip of -ed/-ing runs before its e-restoring variant
// (with the collapsed-double form preferred), which is what keeps the
// common regular inflections correct without a dictionary.
inline std::string stem_step_rules(const std::string& word) {
    if (word.size() <= 3 || ends_with(word, "ss")) return word;

    auto accept = [](const std::string& cand) { return cand.size() >= 3; };

    if (ends_with(word, "ies")) {
        std::string cand = word.substr(0, word.size() - 3) + "y";
        if (accept(cand)) return cand;
    }
    if (ends_with(word, "es")) {
        static const Rule kEsRules[] = {
            {"ses", "s", false}, {"xes", "x", false}, {"zes", "z", false},
            {"ches", "ch", false}, {"shes", "sh", false},
            {"es", "e", false}, {"es", "", false},
        };
        for (const Rule& r : kEsRules) {
            if (!ends_with(word, r.suffix)) continue;
            std::string cand = apply_rule(word, r);
            if (accept(cand)) return cand;
        }
    }
    if (ends_with(word, "s") && !ends_with(word, "es")) {
        std::string cand(word.substr(0, word.size() - 1));
        if (accept(cand)) return cand;
    }
    for (const char* suffix : {"ed", "ing"}) {
        if (!ends_with(word, suffix)) continue;
        std::string stripped(word.substr(0, word.size() - std::string_view(suffix).size()));
        if (has_collapsible_double(stripped)) {
            std::string collapsed = stripped.substr(0, stripped.size() - 1);
            if (accept(collapsed)) return collapsed;
        }
        if (accept(stripped)) return stripped;
        std::string restored = stripped + "e";
        if (accept(restored)) return restored;
    }
    return word;
}

}  // namespace detail

/// Reduces a lowercase keyword to its base form. With a lexicon, candidates
/// are validated against the dictionary (irregular forms first); without
/// one, the suffix rules run unvalidated. Total and idempotent in both
/// modes.
inline std::string stem(std::string_view keyword, const Lexicon* lexicon = nullptr) {
    std::string word(keyword);
    if (word.empty()) return word;
    for (int iter = 0; iter < 10; ++iter) {
        std::string next =
            lexicon ? detail::stem_step_dict(word, *lexicon) : detail::stem_step_rules(word);
        if (next == word) break;
        word = std::move(next);
    }
    return word;
}

}  // namespace srclabel

#endif  // SRCLABEL_STEMMER_HPP
