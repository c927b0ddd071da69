#pragma once

#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "casekit/corpus.hpp"
#include "casekit/encoder.hpp"
#include "casekit/group_index.hpp"

namespace casekit {

enum class Direction { image_to_report, report_to_image };

std::string to_string(Direction d);

/// Candidates ordered by descending similarity, ties broken by ascending id.
struct Ranking {
    std::string query_id;
    std::vector<std::string> candidate_ids;
};

struct MetricsReport {
    Direction direction = Direction::image_to_report;
    std::map<std::size_t, double> recall_at;
    std::size_t n_queries = 0;
    std::string model_hash;
    std::string corpus_hash;
};

std::string metrics_to_json(const MetricsReport& report);

/// Cosine ranking of unit-norm candidates against a unit-norm query
/// (dot product equals cosine). Deterministic: score desc, then id asc.
Ranking rank(const std::string& query_id, const std::vector<double>& query_embedding,
             const std::vector<std::pair<std::string, std::vector<double>>>& candidates);

/// Fraction of queries whose top-K candidates contain at least one candidate
/// from the query's own group. Throws DataError naming any unlabeled id.
double recall_at_k(const std::vector<Ranking>& rankings,
                   const std::unordered_map<std::string, std::string>& group_of, std::size_t K);

/// Rank (1-based) of the first same-group candidate per query; 0 means the
/// query has no same-group candidate. Equivalent to composing rank() with the
/// recall hit criterion; kept O(n) per query.
struct QueryOutcome {
    std::string query_id;
    std::string group_id;
    std::size_t first_hit_rank = 0;
};

double recall_from_outcomes(const std::vector<QueryOutcome>& outcomes, std::size_t K);
double recall_from_outcomes(const std::vector<QueryOutcome>& outcomes, std::size_t K,
                            const std::set<std::string>& query_groups);

struct EvalOutcomes {
    std::vector<QueryOutcome> image_to_report;
    std::vector<QueryOutcome> report_to_image;
};

/// Encodes every instance once and scores both retrieval directions over the
/// given instances. A query is never its own candidate. Group labels come
/// from concept extraction, so held-out splits need no prebuilt index.
EvalOutcomes evaluate_bidirectional_outcomes(const EncoderParams& params, const Corpus& corpus,
                                             const Lexicon& lexicon);

std::pair<MetricsReport, MetricsReport> evaluate_bidirectional(
    const EncoderParams& params, const Corpus& corpus, const Lexicon& lexicon,
    const std::vector<std::size_t>& ks, const std::string& model_hash,
    const std::string& corpus_hash);

/// Raw image-feature nearest-neighbor baseline: cosine over unencoded feature
/// vectors, image-to-report direction, same group-aware hit criterion.
std::vector<QueryOutcome> nn_baseline_outcomes(const Corpus& corpus, const Lexicon& lexicon);

MetricsReport nn_baseline(const Corpus& corpus, const Lexicon& lexicon,
                          const std::vector<std::size_t>& ks, const std::string& corpus_hash);

}  // namespace casekit
