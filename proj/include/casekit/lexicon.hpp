#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace casekit {

/// One lexicon concept: a canonical id, its category, and the surface phrases
/// that assert it. Patterns are stored tokenized.
struct ConceptEntry {
    std::string id;
    std::string category;
    std::vector<std::vector<std::string>> patterns;
};

/// Immutable rule base for concept extraction: concept patterns plus negation
/// and uncertainty cue phrases. Loaded once, shared read-only afterwards.
class Lexicon {
public:
    /// Parses the line-oriented config format:
    ///   [concepts]   concept_id | category | pattern | pattern ...
    ///   [negation]   one cue phrase per line
    ///   [uncertainty] one cue phrase per line
    /// '#' starts a comment. Throws DataError on structural problems.
    static Lexicon parse(const std::string& contents, const std::string& source_name = "<string>");

    /// Reads and parses a lexicon file; records the file checksum.
    static Lexicon load(const std::string& path);

    const std::vector<ConceptEntry>& concepts() const { return concepts_; }
    const std::vector<std::vector<std::string>>& negation_cues() const { return negation_cues_; }
    const std::vector<std::vector<std::string>>& uncertainty_cues() const {
        return uncertainty_cues_;
    }

    /// Checksum of the source text, for staleness detection in persisted indices.
    const std::string& version_hash() const { return version_hash_; }

    std::size_t concept_count() const { return concepts_.size(); }

    /// Position of a concept id in file order, used as its feature index.
    std::optional<std::size_t> concept_index(const std::string& concept_id) const;

    /// Concept ids belonging to one category, in file order.
    std::vector<std::string> concepts_in_category(const std::string& category) const;

    /// Patterns of every concept ordered longest first (token count, then text),
    /// each paired with the owning concept's index. Precomputed for matching.
    struct RankedPattern {
        std::vector<std::string> tokens;
        std::size_t concept_idx;
    };
    const std::vector<RankedPattern>& ranked_patterns() const { return ranked_patterns_; }

private:
    std::vector<ConceptEntry> concepts_;
    std::vector<std::vector<std::string>> negation_cues_;
    std::vector<std::vector<std::string>> uncertainty_cues_;
    std::string version_hash_;
    std::vector<RankedPattern> ranked_patterns_;
};

/// The category vocabulary is closed; anything else is a config error.
bool is_known_category(const std::string& category);

}  // namespace casekit
