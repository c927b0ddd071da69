#include "casekit/group_index.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <unordered_set>

#include <json.hpp>

#include "casekit/errors.hpp"
#include "casekit/rng.hpp"

namespace casekit {

using nlohmann::json;

std::string group_id_of(const ConceptSet& concepts) {
    if (concepts.empty()) return "no_finding";
    std::string id;
    for (const auto& c : concepts) {  // ConceptSet iterates sorted
        if (!id.empty()) id += '+';
        id += c;
    }
    return id;
}

PartitionPolicy PartitionPolicy::top_n(std::size_t n) {
    if (n < 1) throw ConfigError("top_n partition requires n >= 1");
    return {Mode::top_n, n};
}

PartitionPolicy PartitionPolicy::min_count(std::size_t threshold) {
    if (threshold < 1) throw ConfigError("min_count partition requires threshold >= 1");
    return {Mode::min_count, threshold};
}

std::size_t GroupIndex::instance_count() const {
    std::size_t n = 0;
    for (const auto& [gid, members] : groups) n += members.size();
    return n;
}

std::string GroupIndex::group_of(const std::string& instance_id) const {
    for (const auto& [gid, members] : groups) {
        if (std::find(members.begin(), members.end(), instance_id) != members.end()) return gid;
    }
    return {};
}

std::vector<std::string> GroupIndex::groups_by_frequency() const {
    std::vector<std::string> order;
    order.reserve(groups.size());
    for (const auto& [gid, members] : groups) order.push_back(gid);
    std::stable_sort(order.begin(), order.end(), [this](const std::string& a, const std::string& b) {
        const std::size_t ca = frequencies.at(a);
        const std::size_t cb = frequencies.at(b);
        if (ca != cb) return ca > cb;
        return a < b;
    });
    return order;
}

std::pair<std::set<std::string>, std::set<std::string>> partition_frequent_rare(
    const GroupIndex& index, const PartitionPolicy& policy) {
    std::set<std::string> frequent, rare;
    if (policy.mode == PartitionPolicy::Mode::top_n) {
        if (policy.value >= index.group_count())
            throw DataError("top_n partition with n=" + std::to_string(policy.value) +
                            " would leave no rare groups (have " +
                            std::to_string(index.group_count()) + " groups)");
        const auto order = index.groups_by_frequency();
        for (std::size_t i = 0; i < order.size(); ++i) {
            (i < policy.value ? frequent : rare).insert(order[i]);
        }
    } else {
        for (const auto& [gid, count] : index.frequencies) {
            (count >= policy.value ? frequent : rare).insert(gid);
        }
    }
    return {std::move(frequent), std::move(rare)};
}

GroupIndex build_group_index(Corpus& corpus, const Lexicon& lexicon,
                             const PartitionPolicy& policy) {
    if (corpus.instances.empty()) throw DataError("cannot index an empty corpus");

    GroupIndex index;
    index.lexicon_hash = lexicon.version_hash();
    index.policy = policy;

    std::unordered_set<std::string> seen_ids;
    for (auto& inst : corpus.instances) {
        if (inst.image_features.size() != corpus.dim)
            throw DataError("feature dimension mismatch for instance " + inst.instance_id +
                            ": expected " + std::to_string(corpus.dim) + ", got " +
                            std::to_string(inst.image_features.size()));
        for (double v : inst.image_features) {
            if (!std::isfinite(v))
                throw DataError("non-finite feature value in instance " + inst.instance_id);
        }
        if (!seen_ids.insert(inst.instance_id).second)
            throw DataError("duplicate instance id: " + inst.instance_id);

        inst.concept_set = extract_concepts(inst.report_text, lexicon);
        const std::string gid = group_id_of(inst.concept_set);
        index.groups[gid].push_back(inst.instance_id);
    }
    for (const auto& [gid, members] : index.groups) index.frequencies[gid] = members.size();

    auto [frequent, rare] = partition_frequent_rare(index, policy);
    index.frequent = std::move(frequent);
    index.rare = std::move(rare);
    return index;
}

std::vector<std::string> build_support_set(const GroupIndex& index, std::size_t K,
                                           std::uint64_t seed) {
    if (K < 1) throw ConfigError("support set K must be >= 1");
    Rng rng(seed);
    std::vector<std::string> support;
    for (const auto& [gid, members] : index.groups) {  // sorted group order
        const std::size_t take = std::min(K, members.size());
        for (std::size_t idx : rng.sample_indices(members.size(), take)) {
            support.push_back(members[idx]);
        }
    }
    std::sort(support.begin(), support.end());
    return support;
}

namespace {

constexpr int kIndexVersion = 1;

json policy_to_json(const PartitionPolicy& policy) {
    return {{"mode", policy.mode == PartitionPolicy::Mode::top_n ? "top_n" : "min_count"},
            {"value", policy.value}};
}

PartitionPolicy policy_from_json(const json& j) {
    const std::string mode = j.at("mode").get<std::string>();
    const std::size_t value = j.at("value").get<std::size_t>();
    if (mode == "top_n") return PartitionPolicy::top_n(value);
    if (mode == "min_count") return PartitionPolicy::min_count(value);
    throw DataError("unknown partition mode: " + mode);
}

}  // namespace

void save_index(const GroupIndex& index, const std::string& path) {
    json j;
    j["version"] = kIndexVersion;
    j["lexicon_hash"] = index.lexicon_hash;
    j["policy"] = policy_to_json(index.policy);
    j["groups"] = index.groups;
    j["frequencies"] = index.frequencies;
    j["partition"] = {{"frequent", index.frequent}, {"rare", index.rare}};

    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write index file: " + path);
    out << j.dump(2) << '\n';
    if (!out) throw DataError("failed writing index file: " + path);
}

GroupIndex load_index(const std::string& path, const std::string& expected_lexicon_hash,
                      bool allow_lexicon_mismatch) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open index file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw DataError(path + ": malformed index JSON: " + e.what());
    }
    if (j.value("version", -1) != kIndexVersion)
        throw VersionMismatchError(path + ": unsupported index version");

    GroupIndex index;
    index.lexicon_hash = j.at("lexicon_hash").get<std::string>();
    if (!allow_lexicon_mismatch && index.lexicon_hash != expected_lexicon_hash)
        throw LexiconHashMismatchError(path + ": index was built with lexicon hash " +
                                       index.lexicon_hash + " but current lexicon hashes to " +
                                       expected_lexicon_hash);
    index.policy = policy_from_json(j.at("policy"));
    index.groups = j.at("groups").get<std::map<std::string, std::vector<std::string>>>();
    index.frequencies = j.at("frequencies").get<std::map<std::string, std::size_t>>();
    index.frequent = j.at("partition").at("frequent").get<std::set<std::string>>();
    index.rare = j.at("partition").at("rare").get<std::set<std::string>>();
    return index;
}

}  // namespace casekit
