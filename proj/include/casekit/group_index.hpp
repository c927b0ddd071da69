#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "casekit/corpus.hpp"
#include "casekit/lexicon.hpp"

namespace casekit {

/// Canonical group id: concept ids sorted lexicographically and joined with
/// '+'. The empty concept set maps to "no_finding".
std::string group_id_of(const ConceptSet& concepts);

struct PartitionPolicy {
    enum class Mode { top_n, min_count };
    Mode mode = Mode::top_n;
    std::size_t value = 20;  // n for top_n, threshold for min_count

    static PartitionPolicy top_n(std::size_t n);
    static PartitionPolicy min_count(std::size_t threshold);

    bool operator==(const PartitionPolicy&) const = default;
};

/// Dataset-wide map group -> instances, with frequency statistics and the
/// frequent/rare partition. Immutable once built; shareable across threads.
struct GroupIndex {
    std::map<std::string, std::vector<std::string>> groups;  // group id -> instance ids
    std::map<std::string, std::size_t> frequencies;
    std::set<std::string> frequent;
    std::set<std::string> rare;
    std::string lexicon_hash;
    PartitionPolicy policy;

    std::size_t group_count() const { return groups.size(); }
    std::size_t instance_count() const;

    /// Group of an instance id, or empty string if unknown.
    std::string group_of(const std::string& instance_id) const;

    /// Group ids ordered by descending frequency, ties by ascending group id.
    /// Rank 1 is the most frequent group.
    std::vector<std::string> groups_by_frequency() const;

    bool operator==(const GroupIndex&) const = default;
};

/// Extracts concepts for every instance (filling instance.concept_set),
/// groups the corpus, and partitions groups per the policy.
GroupIndex build_group_index(Corpus& corpus, const Lexicon& lexicon,
                             const PartitionPolicy& policy);

/// Recomputes the frequent/rare split of an already-built index.
/// top_n(n): the n highest-count groups are frequent (ties broken by group id,
/// smaller id first); requires n < group count. min_count(t): count >= t.
std::pair<std::set<std::string>, std::set<std::string>> partition_frequent_rare(
    const GroupIndex& index, const PartitionPolicy& policy);

/// Few-shot support set: per group min(K, group size) instances sampled
/// uniformly without replacement. Returned sorted; deterministic given seed.
std::vector<std::string> build_support_set(const GroupIndex& index, std::size_t K,
                                           std::uint64_t seed);

/// Versioned JSON persistence with sorted keys; save/load round-trips
/// field-for-field. load refuses an index whose lexicon_hash differs from
/// `expected_lexicon_hash` unless allow_lexicon_mismatch is set.
void save_index(const GroupIndex& index, const std::string& path);
GroupIndex load_index(const std::string& path, const std::string& expected_lexicon_hash,
                      bool allow_lexicon_mismatch = false);

}  // namespace casekit
