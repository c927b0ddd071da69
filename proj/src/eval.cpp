#include "casekit/eval.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "casekit/errors.hpp"

namespace casekit {

using nlohmann::json;

std::string to_string(Direction d) {
    return d == Direction::image_to_report ? "image_to_report" : "report_to_image";
}

std::string metrics_to_json(const MetricsReport& report) {
    json recall;
    for (const auto& [k, v] : report.recall_at) recall[std::to_string(k)] = v;
    json j{{"direction", to_string(report.direction)},
           {"recall", recall},
           {"n_queries", report.n_queries},
           {"model_hash", report.model_hash},
           {"corpus_hash", report.corpus_hash}};
    return j.dump(2);
}

Ranking rank(const std::string& query_id, const std::vector<double>& query_embedding,
             const std::vector<std::pair<std::string, std::vector<double>>>& candidates) {
    if (candidates.empty()) throw DataError("rank called with an empty candidate list");

    std::vector<std::pair<double, const std::string*>> scored;
    scored.reserve(candidates.size());
    for (const auto& [id, emb] : candidates) {
        if (emb.size() != query_embedding.size())
            throw DataError("candidate " + id + " embedding dimension mismatch");
        double dot = 0.0;
        for (std::size_t d = 0; d < emb.size(); ++d) dot += query_embedding[d] * emb[d];
        scored.emplace_back(dot, &id);
    }
    std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return *a.second < *b.second;
    });

    Ranking ranking;
    ranking.query_id = query_id;
    ranking.candidate_ids.reserve(scored.size());
    for (const auto& [score, id] : scored) ranking.candidate_ids.push_back(*id);
    return ranking;
}

double recall_at_k(const std::vector<Ranking>& rankings,
                   const std::unordered_map<std::string, std::string>& group_of, std::size_t K) {
    if (K < 1) throw ConfigError("recall requires K >= 1");
    if (rankings.empty()) throw DataError("recall over zero queries is undefined");

    auto label = [&group_of](const std::string& id) -> const std::string& {
        auto it = group_of.find(id);
        if (it == group_of.end()) throw DataError("missing group label for id " + id);
        return it->second;
    };

    std::size_t hits = 0;
    for (const auto& ranking : rankings) {
        const std::string& query_group = label(ranking.query_id);
        const std::size_t top = std::min(K, ranking.candidate_ids.size());
        for (std::size_t i = 0; i < top; ++i) {
            if (label(ranking.candidate_ids[i]) == query_group) {
                ++hits;
                break;
            }
        }
    }
    return static_cast<double>(hits) / static_cast<double>(rankings.size());
}

double recall_from_outcomes(const std::vector<QueryOutcome>& outcomes, std::size_t K) {
    if (outcomes.empty()) throw DataError("recall over zero queries is undefined");
    std::size_t hits = 0;
    for (const auto& o : outcomes) {
        if (o.first_hit_rank != 0 && o.first_hit_rank <= K) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(outcomes.size());
}

double recall_from_outcomes(const std::vector<QueryOutcome>& outcomes, std::size_t K,
                            const std::set<std::string>& query_groups) {
    std::vector<QueryOutcome> subset;
    for (const auto& o : outcomes) {
        if (query_groups.count(o.group_id) > 0) subset.push_back(o);
    }
    return recall_from_outcomes(subset, K);
}

namespace {

// Rank of the best same-group candidate under (score desc, id asc), computed
// without materializing the full ordering.
std::vector<QueryOutcome> score_direction(
    const std::vector<std::string>& ids, const std::vector<std::string>& groups,
    const std::vector<std::vector<double>>& query_vecs,
    const std::vector<std::vector<double>>& cand_vecs) {
    const std::size_t n = ids.size();
    std::vector<QueryOutcome> outcomes;
    outcomes.reserve(n);

    std::vector<double> scores(n);
    for (std::size_t q = 0; q < n; ++q) {
        const auto& qv = query_vecs[q];
        for (std::size_t c = 0; c < n; ++c) {
            if (c == q) continue;
            const auto& cv = cand_vecs[c];
            double dot = 0.0;
            for (std::size_t d = 0; d < qv.size(); ++d) dot += qv[d] * cv[d];
            scores[c] = dot;
        }

        std::size_t best = n;  // best same-group candidate
        for (std::size_t c = 0; c < n; ++c) {
            if (c == q || groups[c] != groups[q]) continue;
            if (best == n || scores[c] > scores[best] ||
                (scores[c] == scores[best] && ids[c] < ids[best]))
                best = c;
        }

        QueryOutcome outcome{ids[q], groups[q], 0};
        if (best != n) {
            std::size_t ahead = 0;
            for (std::size_t c = 0; c < n; ++c) {
                if (c == q || c == best) continue;
                if (scores[c] > scores[best] ||
                    (scores[c] == scores[best] && ids[c] < ids[best]))
                    ++ahead;
            }
            outcome.first_hit_rank = ahead + 1;
        }
        outcomes.push_back(std::move(outcome));
    }
    return outcomes;
}

MetricsReport report_from_outcomes(const std::vector<QueryOutcome>& outcomes, Direction direction,
                                   const std::vector<std::size_t>& ks,
                                   const std::string& model_hash, const std::string& corpus_hash) {
    MetricsReport report;
    report.direction = direction;
    report.n_queries = outcomes.size();
    report.model_hash = model_hash;
    report.corpus_hash = corpus_hash;
    for (std::size_t k : ks) report.recall_at[k] = recall_from_outcomes(outcomes, k);
    return report;
}

std::vector<std::vector<double>> raw_unit_features(const Corpus& corpus) {
    std::vector<std::vector<double>> vecs;
    vecs.reserve(corpus.instances.size());
    for (const auto& inst : corpus.instances) {
        std::vector<double> v = inst.image_features;
        double norm_sq = 0.0;
        for (double x : v) norm_sq += x * x;
        if (norm_sq > 0.0) {
            const double inv = 1.0 / std::sqrt(norm_sq);
            for (double& x : v) x *= inv;
        }
        vecs.push_back(std::move(v));
    }
    return vecs;
}

}  // namespace

EvalOutcomes evaluate_bidirectional_outcomes(const EncoderParams& params, const Corpus& corpus,
                                             const Lexicon& lexicon) {
    if (corpus.instances.empty()) throw DataError("cannot evaluate an empty corpus");

    const std::size_t n = corpus.instances.size();
    std::vector<std::string> ids(n), groups(n);
    std::vector<std::vector<double>> img_embs(n), txt_embs(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& inst = corpus.instances[i];
        ids[i] = inst.instance_id;
        groups[i] = group_id_of(extract_concepts(inst.report_text, lexicon));
        img_embs[i] = encode_image(params, inst.image_features);
        txt_embs[i] =
            encode_text(params, featurize_text(inst.report_text, lexicon, params.hash_buckets));
    }

    EvalOutcomes out;
    out.image_to_report = score_direction(ids, groups, img_embs, txt_embs);
    out.report_to_image = score_direction(ids, groups, txt_embs, img_embs);
    return out;
}

std::pair<MetricsReport, MetricsReport> evaluate_bidirectional(
    const EncoderParams& params, const Corpus& corpus, const Lexicon& lexicon,
    const std::vector<std::size_t>& ks, const std::string& model_hash,
    const std::string& corpus_hash) {
    const EvalOutcomes outcomes = evaluate_bidirectional_outcomes(params, corpus, lexicon);
    return {report_from_outcomes(outcomes.image_to_report, Direction::image_to_report, ks,
                                 model_hash, corpus_hash),
            report_from_outcomes(outcomes.report_to_image, Direction::report_to_image, ks,
                                 model_hash, corpus_hash)};
}

std::vector<QueryOutcome> nn_baseline_outcomes(const Corpus& corpus, const Lexicon& lexicon) {
    if (corpus.instances.empty()) throw DataError("cannot evaluate an empty corpus");
    const std::size_t n = corpus.instances.size();
    std::vector<std::string> ids(n), groups(n);
    for (std::size_t i = 0; i < n; ++i) {
        ids[i] = corpus.instances[i].instance_id;
        groups[i] = group_id_of(extract_concepts(corpus.instances[i].report_text, lexicon));
    }
    const auto vecs = raw_unit_features(corpus);
    return score_direction(ids, groups, vecs, vecs);
}

MetricsReport nn_baseline(const Corpus& corpus, const Lexicon& lexicon,
                          const std::vector<std::size_t>& ks, const std::string& corpus_hash) {
    return report_from_outcomes(nn_baseline_outcomes(corpus, lexicon),
                                Direction::image_to_report, ks, "nn_baseline", corpus_hash);
}

}  // namespace casekit
