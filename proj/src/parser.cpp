#include "casekit/parser.hpp"

#include "casekit/text.hpp"

namespace casekit {

namespace {

// Concept pattern tokens tolerate a plural surface form, so "masses" matches
// the pattern token "mass". Cue phrases match exactly.
bool token_matches_pattern(const std::string& text_token, const std::string& pattern_token) {
    if (text_token == pattern_token) return true;
    const std::size_t n = pattern_token.size();
    if (text_token.size() == n + 1 && text_token.compare(0, n, pattern_token) == 0 &&
        text_token[n] == 's')
        return true;
    if (text_token.size() == n + 2 && text_token.compare(0, n, pattern_token) == 0 &&
        text_token[n] == 'e' && text_token[n + 1] == 's')
        return true;
    return false;
}

bool phrase_at(const std::vector<std::string>& tokens, std::size_t pos,
               const std::vector<std::string>& phrase, bool plural_tolerant) {
    if (pos + phrase.size() > tokens.size()) return false;
    for (std::size_t i = 0; i < phrase.size(); ++i) {
        if (plural_tolerant) {
            if (!token_matches_pattern(tokens[pos + i], phrase[i])) return false;
        } else if (tokens[pos + i] != phrase[i]) {
            return false;
        }
    }
    return true;
}

bool contains_cue(const std::vector<std::string>& tokens,
                  const std::vector<std::vector<std::string>>& cues) {
    for (const auto& cue : cues) {
        if (cue.empty()) continue;
        for (std::size_t pos = 0; pos + cue.size() <= tokens.size(); ++pos) {
            if (phrase_at(tokens, pos, cue, /*plural_tolerant=*/false)) return true;
        }
    }
    return false;
}

}  // namespace

ConceptSet::ConceptSet(std::vector<std::string> ids) {
    for (auto& id : ids) ids_.insert(std::move(id));
}

ClausePolarity classify_clause(const std::string& clause, const Lexicon& lexicon) {
    const auto tokens = tokenize(clause);
    if (contains_cue(tokens, lexicon.negation_cues())) return ClausePolarity::negated;
    if (contains_cue(tokens, lexicon.uncertainty_cues())) return ClausePolarity::uncertain;
    return ClausePolarity::positive;
}

std::vector<std::string> positive_clauses(const std::string& report, const Lexicon& lexicon) {
    std::vector<std::string> out;
    for (const auto& sentence : split_sentences(normalize_text(report))) {
        bool scope_open = false;  // a cue earlier in this sentence suppresses the rest
        for (auto& clause : split_clauses(sentence)) {
            if (classify_clause(clause, lexicon) != ClausePolarity::positive) {
                scope_open = true;
            } else if (!scope_open) {
                out.push_back(std::move(clause));
            }
        }
    }
    return out;
}

std::vector<std::size_t> match_concepts_in_clause(const std::vector<std::string>& tokens,
                                                  const Lexicon& lexicon) {
    std::vector<std::size_t> hits;
    const auto& patterns = lexicon.ranked_patterns();
    std::size_t pos = 0;
    while (pos < tokens.size()) {
        bool matched = false;
        for (const auto& rp : patterns) {
            if (phrase_at(tokens, pos, rp.tokens, /*plural_tolerant=*/true)) {
                hits.push_back(rp.concept_idx);
                pos += rp.tokens.size();
                matched = true;
                break;
            }
        }
        if (!matched) ++pos;
    }
    return hits;
}

ConceptSet extract_concepts(const std::string& report, const Lexicon& lexicon) {
    ConceptSet result;
    for (const auto& clause : positive_clauses(report, lexicon)) {
        for (std::size_t idx : match_concepts_in_clause(tokenize(clause), lexicon)) {
            result.insert(lexicon.concepts()[idx].id);
        }
    }
    return result;
}

}  // namespace casekit
