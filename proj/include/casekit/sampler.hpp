#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "casekit/group_index.hpp"
#include "casekit/rng.hpp"

namespace casekit {

/// Rare-slot count b = ceil(B * R). Requires B >= 2 and 0 <= R < 1, which
/// guarantees b < B.
std::size_t compute_boundary(std::size_t batch_size, double ratio);

struct SamplerConfig {
    std::size_t batch_size = 8;
    double ratio = 0.375;
    std::size_t boundary = 3;  // derived: ceil(batch_size * ratio)
    bool shuffle_after_sampling = false;
    std::uint64_t seed = 0;

    /// Validates and derives the boundary.
    static SamplerConfig make(std::size_t batch_size, double ratio,
                              bool shuffle_after_sampling = false, std::uint64_t seed = 0);
};

enum class Stratum { frequent, rare };

std::string to_string(Stratum s);

struct BatchSlot {
    std::string instance_id;
    std::string group_id;
    Stratum stratum = Stratum::frequent;

    bool operator==(const BatchSlot&) const = default;
};

/// One mini-batch with per-slot provenance. Without shuffling, slots
/// [0, B-b) are the frequent block and [B-b, B) the rare block.
struct MiniBatch {
    std::vector<BatchSlot> slots;

    bool operator==(const MiniBatch&) const = default;
};

/// Draws B-b distinct frequent groups and b distinct rare groups uniformly
/// without replacement, then one instance uniformly within each chosen group.
/// All B groups are pairwise distinct, so every within-batch negative pair
/// crosses groups. Throws InsufficientGroupsError when a stratum is too small.
MiniBatch sample_batch(const GroupIndex& index, const SamplerConfig& cfg, Rng& rng);

/// ceil(n_instances / B) batches drawn from one evolving generator state.
std::vector<MiniBatch> epoch_batches(const GroupIndex& index, const SamplerConfig& cfg,
                                     std::size_t n_instances, Rng& rng);

/// Baseline batch: B distinct instances drawn uniformly from the whole corpus
/// with no group constraint. Strata are labeled from the index partition but
/// nothing is guaranteed about them.
MiniBatch sample_random_batch(const GroupIndex& index,
                              const std::vector<std::string>& instance_ids, std::size_t batch_size,
                              Rng& rng);

/// Self-check result; violations are data, not errors.
struct BatchValidation {
    bool pass = true;
    std::vector<std::string> violations;
};

/// Verifies slot count, stratum composition, pairwise-distinct groups, block
/// layout (when shuffling is off), stratum labels against the index partition,
/// and membership of each instance in its claimed group.
BatchValidation validate_batch(const MiniBatch& batch, const GroupIndex& index,
                               const SamplerConfig& cfg);

}  // namespace casekit
