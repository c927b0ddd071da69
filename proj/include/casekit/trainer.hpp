#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "casekit/corpus.hpp"
#include "casekit/encoder.hpp"
#include "casekit/group_index.hpp"
#include "casekit/sampler.hpp"

namespace casekit {

enum class SamplerKind { selective, uniform_random };

struct TrainConfig {
    std::size_t epochs = 5;
    double learning_rate = 0.05;
    double momentum = 0.0;
    std::size_t embed_dim = 32;
    std::size_t hash_buckets = 64;
    double temperature = 0.07;
    std::uint64_t seed = 0;
    SamplerConfig sampler;
    SamplerKind sampler_kind = SamplerKind::selective;
    std::string loss_trace_path;  // optional; empty keeps the trace in memory only

    void validate() const;
};

struct TracePoint {
    std::size_t batch_index = 0;  // global, across epochs
    std::size_t epoch = 0;
    double loss = 0.0;
};

struct TrainResult {
    EncoderParams params;
    std::vector<TracePoint> trace;

    /// Mean loss of one epoch of the trace.
    double epoch_mean_loss(std::size_t epoch) const;
};

/// SGD over selectively sampled (or uniform baseline) mini-batches.
/// Deterministic given config seeds; aborts with DivergenceError if the loss
/// stops being finite.
TrainResult train(const Corpus& corpus, const GroupIndex& index, const Lexicon& lexicon,
                  const TrainConfig& cfg);

void write_loss_trace(const std::vector<TracePoint>& trace, const std::string& path);

}  // namespace casekit
