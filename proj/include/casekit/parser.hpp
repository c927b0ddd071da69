#pragma once

#include <set>
#include <string>
#include <vector>

#include "casekit/lexicon.hpp"

namespace casekit {

/// Canonical set of concept ids. Iteration order is sorted regardless of how
/// concepts were inserted.
class ConceptSet {
public:
    ConceptSet() = default;
    explicit ConceptSet(std::vector<std::string> ids);

    void insert(const std::string& concept_id) { ids_.insert(concept_id); }
    bool contains(const std::string& concept_id) const { return ids_.count(concept_id) > 0; }
    bool empty() const { return ids_.empty(); }
    std::size_t size() const { return ids_.size(); }

    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }

    bool operator==(const ConceptSet&) const = default;

private:
    std::set<std::string> ids_;
};

enum class ClausePolarity { positive, negated, uncertain };

/// Per-clause polarity: negation cues win over uncertainty cues, cues match as
/// whole-word phrases. The clause must already be normalized.
ClausePolarity classify_clause(const std::string& clause, const Lexicon& lexicon);

/// Clauses of a raw report that are effectively positive. A negation or
/// uncertainty cue opens a scope lasting to the end of its sentence, so a
/// clause is excluded if it or any earlier clause of the same sentence holds
/// a cue. ("right breast: no masses, calcifications" excludes the trailing
/// list even though the cue sits in an earlier clause.)
std::vector<std::string> positive_clauses(const std::string& report, const Lexicon& lexicon);

/// Full extraction pipeline: normalize -> sentences -> clauses -> polarity ->
/// longest-pattern-first whole-word matching in positive clauses.
ConceptSet extract_concepts(const std::string& report, const Lexicon& lexicon);

/// Concepts asserted by a single normalized clause, non-overlapping,
/// longest pattern first. Exposed for featurization and tests.
std::vector<std::size_t> match_concepts_in_clause(const std::vector<std::string>& tokens,
                                                  const Lexicon& lexicon);

}  // namespace casekit
