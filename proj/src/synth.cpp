#include "casekit/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>

#include <json.hpp>

#include "casekit/errors.hpp"
#include "casekit/group_index.hpp"
#include "casekit/hash.hpp"
#include "casekit/rng.hpp"

namespace casekit {

using nlohmann::json;

void SynthConfig::validate() const {
    if (n_groups < 2) throw ConfigError("synth corpus needs at least 2 groups");
    if (n_instances < n_groups)
        throw ConfigError("n_instances must be >= n_groups so every group is populated");
    if (!(zipf_exponent > 0.0)) throw ConfigError("zipf exponent must be positive");
    if (dim == 0) throw ConfigError("feature dim must be positive");
    if (signal_strength < 0.0 || signal_strength > 1.0)
        throw ConfigError("signal strength must lie in [0, 1]");
    if (noise < 0.0) throw ConfigError("noise sigma must be non-negative");
    if (negated_sentence_rate < 0.0 || negated_sentence_rate > 1.0)
        throw ConfigError("negated sentence rate must lie in [0, 1]");
}

namespace {

// Positive templates; filler words must never collide with lexicon patterns
// or cue phrases, so extraction returns exactly the generating concepts.
const char* kDensityTemplate = "the breasts are %s.";
const std::vector<std::string> kFindingTemplates = {
    "there is %s in the left breast.",
    "%s is seen in the right breast.",
    "stable %s noted.",
};
const std::vector<std::string> kNegatedFillers = {
    "there are no suspicious masses.",
    "no abnormal calcifications are identified.",
    "the remaining tissue is without suspicious findings.",
    "negative for architectural distortion.",
};

std::string render(const char* fmt, const std::string& phrase) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), fmt, phrase.c_str());
    return buf;
}

std::string pattern_text(const std::vector<std::string>& tokens) {
    std::string out;
    for (const auto& t : tokens) {
        if (!out.empty()) out += ' ';
        out += t;
    }
    return out;
}

// All candidate group concept sets: one density concept plus zero, one, or
// two distinct findings, enumerated in lexicon file order.
std::vector<std::vector<std::string>> enumerate_group_sets(const Lexicon& lexicon) {
    const auto densities = lexicon.concepts_in_category("breast_composition");
    std::vector<std::string> findings;
    for (const auto& entry : lexicon.concepts()) {
        if (entry.category != "breast_composition") findings.push_back(entry.id);
    }
    std::vector<std::vector<std::string>> sets;
    for (const auto& d : densities) {
        sets.push_back({d});
        for (std::size_t i = 0; i < findings.size(); ++i) {
            sets.push_back({d, findings[i]});
            for (std::size_t j = i + 1; j < findings.size(); ++j) {
                sets.push_back({d, findings[i], findings[j]});
            }
        }
    }
    return sets;
}

}  // namespace

Corpus generate_corpus(const SynthConfig& cfg, const Lexicon& lexicon) {
    cfg.validate();

    auto group_sets = enumerate_group_sets(lexicon);
    if (group_sets.size() < cfg.n_groups)
        throw DataError("lexicon supports only " + std::to_string(group_sets.size()) +
                        " distinct groups, need " + std::to_string(cfg.n_groups));

    Rng rng_groups(derive_seed(cfg.seed, "groups"));
    Rng rng_assign(derive_seed(cfg.seed, "assign"));
    Rng rng_feat(derive_seed(cfg.seed, "features"));
    Rng rng_text(derive_seed(cfg.seed, "text"));

    rng_groups.shuffle(group_sets);
    group_sets.resize(cfg.n_groups);

    // Zipf CDF over ranks 1..n_groups.
    std::vector<double> cdf(cfg.n_groups);
    double mass = 0.0;
    for (std::size_t r = 0; r < cfg.n_groups; ++r) {
        mass += std::pow(static_cast<double>(r + 1), -cfg.zipf_exponent);
        cdf[r] = mass;
    }
    for (double& v : cdf) v /= mass;

    // One instance per group keeps every group populated; the remainder
    // follows the seeded Zipf draws.
    std::vector<std::size_t> assignment(cfg.n_instances);
    for (std::size_t i = 0; i < cfg.n_groups; ++i) assignment[i] = i;
    for (std::size_t i = cfg.n_groups; i < cfg.n_instances; ++i) {
        const double u = rng_assign.uniform();
        assignment[i] = static_cast<std::size_t>(
            std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
    }

    std::vector<std::vector<double>> centroids(cfg.n_groups);
    for (std::size_t g = 0; g < cfg.n_groups; ++g) {
        Rng rng_centroid(derive_seed(cfg.seed, "centroid", g));
        std::vector<double> c(cfg.dim);
        double norm_sq = 0.0;
        for (double& v : c) {
            v = rng_centroid.normal();
            norm_sq += v * v;
        }
        const double inv = 1.0 / std::sqrt(norm_sq);
        for (double& v : c) v *= inv;
        centroids[g] = std::move(c);
    }

    Corpus corpus;
    corpus.dim = cfg.dim;
    corpus.instances.reserve(cfg.n_instances);
    std::vector<std::size_t> group_position(cfg.n_groups, 0);

    for (std::size_t i = 0; i < cfg.n_instances; ++i) {
        const std::size_t g = assignment[i];
        const auto& concepts = group_sets[g];

        Instance inst;
        char id_buf[32];
        std::snprintf(id_buf, sizeof(id_buf), "inst_%06zu", i);
        inst.instance_id = id_buf;

        // report text: density sentence first, then one sentence per finding
        std::string report;
        for (std::size_t ci = 0; ci < concepts.size(); ++ci) {
            const auto& entry =
                lexicon.concepts()[lexicon.concept_index(concepts[ci]).value()];
            const auto& pattern =
                entry.patterns[rng_text.below(entry.patterns.size())];
            if (!report.empty()) report += ' ';
            report += ci == 0 ? render(kDensityTemplate, pattern_text(pattern))
                              : render(kFindingTemplates[rng_text.below(
                                           kFindingTemplates.size())].c_str(),
                                       pattern_text(pattern));
        }
        if (rng_text.uniform() < cfg.negated_sentence_rate) {
            report += ' ';
            report += kNegatedFillers[rng_text.below(kNegatedFillers.size())];
        }
        inst.report_text = std::move(report);

        inst.image_features.resize(cfg.dim);
        for (std::size_t d = 0; d < cfg.dim; ++d) {
            inst.image_features[d] = cfg.signal_strength * centroids[g][d] +
                                     (1.0 - cfg.signal_strength) * cfg.noise * rng_feat.normal();
        }

        const std::size_t pos = group_position[g]++;
        inst.split = pos % 10 == 8 ? Split::val : pos % 10 == 9 ? Split::test : Split::train;

        corpus.instances.push_back(std::move(inst));
    }
    return corpus;
}

double CorpusStats::top_mass(std::size_t n) const {
    if (total == 0) return 0.0;
    std::size_t covered = 0;
    for (std::size_t i = 0; i < std::min(n, counts.size()); ++i) covered += counts[i].second;
    return static_cast<double>(covered) / static_cast<double>(total);
}

CorpusStats describe_corpus(const Corpus& corpus, const Lexicon& lexicon) {
    std::map<std::string, std::size_t> by_group;
    for (const auto& inst : corpus.instances) {
        ++by_group[group_id_of(extract_concepts(inst.report_text, lexicon))];
    }
    CorpusStats stats;
    stats.total = corpus.instances.size();
    stats.counts.assign(by_group.begin(), by_group.end());
    std::sort(stats.counts.begin(), stats.counts.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    return stats;
}

std::string stats_to_json(const CorpusStats& stats, std::size_t top_n) {
    json groups = json::array();
    for (const auto& [gid, count] : stats.counts) {
        groups.push_back({{"group", gid}, {"count", count}});
    }
    json j{{"n_instances", stats.total},
           {"n_groups", stats.counts.size()},
           {"groups", groups},
           {"top_mass", {{std::to_string(top_n), stats.top_mass(top_n)}, {"1", stats.top_mass(1)}}}};
    return j.dump(2);
}

}  // namespace casekit
