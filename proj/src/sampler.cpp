#include "casekit/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "casekit/errors.hpp"

namespace casekit {

std::size_t compute_boundary(std::size_t batch_size, double ratio) {
    if (batch_size < 2) throw ConfigError("batch size must be >= 2, got " +
                                          std::to_string(batch_size));
    if (!(ratio >= 0.0 && ratio < 1.0))
        throw ConfigError("ratio must lie in [0, 1), got " + std::to_string(ratio));
    const double x = static_cast<double>(batch_size) * ratio;
    const double nearest = std::round(x);
    // snap to the mathematical product when floating rounding drifted off it
    const double ceiled = std::abs(x - nearest) < 1e-9 ? nearest : std::ceil(x);
    return static_cast<std::size_t>(ceiled);
}

SamplerConfig SamplerConfig::make(std::size_t batch_size, double ratio,
                                  bool shuffle_after_sampling, std::uint64_t seed) {
    SamplerConfig cfg;
    cfg.batch_size = batch_size;
    cfg.ratio = ratio;
    cfg.boundary = compute_boundary(batch_size, ratio);
    cfg.shuffle_after_sampling = shuffle_after_sampling;
    cfg.seed = seed;
    return cfg;
}

std::string to_string(Stratum s) { return s == Stratum::frequent ? "frequent" : "rare"; }

namespace {

// Sorted snapshot of a stratum, so draws depend only on set contents and seed.
std::vector<std::string> ordered(const std::set<std::string>& groups) {
    return {groups.begin(), groups.end()};
}

void draw_stratum(const GroupIndex& index, const std::vector<std::string>& stratum_groups,
                  std::size_t want, Stratum label, Rng& rng, std::vector<BatchSlot>& out) {
    for (std::size_t gi : rng.sample_indices(stratum_groups.size(), want)) {
        const std::string& gid = stratum_groups[gi];
        const auto& members = index.groups.at(gid);
        const std::string& chosen = members[rng.below(members.size())];
        out.push_back({chosen, gid, label});
    }
}

}  // namespace

MiniBatch sample_batch(const GroupIndex& index, const SamplerConfig& cfg, Rng& rng) {
    const std::size_t n_frequent = cfg.batch_size - cfg.boundary;
    const std::size_t n_rare = cfg.boundary;
    if (index.frequent.size() < n_frequent)
        throw InsufficientGroupsError("frequent", n_frequent, index.frequent.size());
    if (index.rare.size() < n_rare)
        throw InsufficientGroupsError("rare", n_rare, index.rare.size());

    MiniBatch batch;
    batch.slots.reserve(cfg.batch_size);
    draw_stratum(index, ordered(index.frequent), n_frequent, Stratum::frequent, rng, batch.slots);
    draw_stratum(index, ordered(index.rare), n_rare, Stratum::rare, rng, batch.slots);
    if (cfg.shuffle_after_sampling) rng.shuffle(batch.slots);
    return batch;
}

std::vector<MiniBatch> epoch_batches(const GroupIndex& index, const SamplerConfig& cfg,
                                     std::size_t n_instances, Rng& rng) {
    const std::size_t n_batches = (n_instances + cfg.batch_size - 1) / cfg.batch_size;
    std::vector<MiniBatch> batches;
    batches.reserve(n_batches);
    for (std::size_t i = 0; i < n_batches; ++i) batches.push_back(sample_batch(index, cfg, rng));
    return batches;
}

MiniBatch sample_random_batch(const GroupIndex& index,
                              const std::vector<std::string>& instance_ids, std::size_t batch_size,
                              Rng& rng) {
    if (instance_ids.size() < batch_size)
        throw DataError("random batch needs " + std::to_string(batch_size) +
                        " instances, corpus has " + std::to_string(instance_ids.size()));
    MiniBatch batch;
    batch.slots.reserve(batch_size);
    for (std::size_t idx : rng.sample_indices(instance_ids.size(), batch_size)) {
        const std::string& id = instance_ids[idx];
        const std::string gid = index.group_of(id);
        const Stratum stratum =
            index.frequent.count(gid) > 0 ? Stratum::frequent : Stratum::rare;
        batch.slots.push_back({id, gid, stratum});
    }
    return batch;
}

BatchValidation validate_batch(const MiniBatch& batch, const GroupIndex& index,
                               const SamplerConfig& cfg) {
    BatchValidation report;
    auto flag = [&report](std::string msg) {
        report.pass = false;
        report.violations.push_back(std::move(msg));
    };

    if (batch.slots.size() != cfg.batch_size)
        flag("slot count " + std::to_string(batch.slots.size()) + " != batch size " +
             std::to_string(cfg.batch_size));

    std::size_t n_rare = 0;
    std::set<std::string> seen_groups;
    for (std::size_t i = 0; i < batch.slots.size(); ++i) {
        const auto& slot = batch.slots[i];
        if (slot.stratum == Stratum::rare) ++n_rare;
        if (!seen_groups.insert(slot.group_id).second)
            flag("duplicate group in batch: " + slot.group_id);

        const auto it = index.groups.find(slot.group_id);
        if (it == index.groups.end()) {
            flag("unknown group: " + slot.group_id);
        } else if (std::find(it->second.begin(), it->second.end(), slot.instance_id) ==
                   it->second.end()) {
            flag("instance " + slot.instance_id + " is not a member of group " + slot.group_id);
        }

        const bool labeled_frequent = slot.stratum == Stratum::frequent;
        const bool is_frequent = index.frequent.count(slot.group_id) > 0;
        if (labeled_frequent != is_frequent)
            flag("slot " + std::to_string(i) + " stratum label disagrees with partition for " +
                 slot.group_id);
    }

    if (batch.slots.size() == cfg.batch_size) {
        if (n_rare != cfg.boundary)
            flag("rare slot count " + std::to_string(n_rare) + " != boundary " +
                 std::to_string(cfg.boundary));
        if (!cfg.shuffle_after_sampling) {
            for (std::size_t i = 0; i < batch.slots.size(); ++i) {
                const Stratum expect = i < cfg.batch_size - cfg.boundary ? Stratum::frequent
                                                                         : Stratum::rare;
                if (batch.slots[i].stratum != expect) {
                    flag("block layout violated at slot " + std::to_string(i));
                    break;
                }
            }
        }
    }
    return report;
}

}  // namespace casekit
