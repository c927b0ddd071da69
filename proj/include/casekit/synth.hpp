#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "casekit/corpus.hpp"
#include "casekit/lexicon.hpp"

namespace casekit {

/// Knobs for a deterministic long-tail paired corpus. Group frequencies
/// follow rank^(-zipf_exponent); feature separability is controlled by
/// signal_strength (centroid weight) and noise (per-component sigma).
struct SynthConfig {
    std::size_t n_instances = 2000;
    std::size_t n_groups = 50;
    double zipf_exponent = 1.2;
    std::size_t dim = 32;
    double signal_strength = 0.8;  // alpha in [0, 1]
    double noise = 0.3;            // sigma >= 0
    double negated_sentence_rate = 0.25;
    std::uint64_t seed = 17;

    void validate() const;
};

/// Builds n_groups distinct concept sets (each holding one breast-composition
/// concept plus up to two findings), assigns instances to groups with a
/// one-per-group floor followed by seeded Zipf draws, renders report text from
/// lexicon patterns (so extraction round-trips exactly) with optional negated
/// filler sentences, and draws features as
/// alpha * group_centroid + (1 - alpha) * N(0, sigma^2).
Corpus generate_corpus(const SynthConfig& cfg, const Lexicon& lexicon);

struct CorpusStats {
    std::vector<std::pair<std::string, std::size_t>> counts;  // descending, ties by group id
    std::size_t total = 0;

    /// Fraction of instances covered by the top n groups.
    double top_mass(std::size_t n) const;
};

CorpusStats describe_corpus(const Corpus& corpus, const Lexicon& lexicon);

std::string stats_to_json(const CorpusStats& stats, std::size_t top_n = 20);

}  // namespace casekit
