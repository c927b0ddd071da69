#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "casekit/eval.hpp"
#include "casekit/synth.hpp"
#include "casekit/trainer.hpp"

namespace casekit {

/// Everything a run needs, loadable from a flat key=value config file with
/// section headers. CLI flag names mirror the config keys exactly.
struct RunConfig {
    // [paths]
    std::string corpus_path;
    std::string lexicon_path;
    std::string index_path;
    std::string model_path;
    std::string out_dir;

    // [partition]
    std::string partition_mode = "top-n";  // "top-n" | "min-count"
    std::size_t partition_n = 20;
    std::size_t partition_threshold = 5;

    // [sampler]
    std::size_t batch_size = 8;
    double ratio = 0.375;
    bool shuffle = false;
    std::size_t num_batches = 200;

    // [train]
    std::size_t epochs = 5;
    double lr = 0.05;
    double momentum = 0.0;
    std::size_t embed_dim = 32;
    std::size_t hash_buckets = 64;
    double temperature = 0.07;
    std::string train_split = "train";  // "train" | "val" | "test" | "all"

    // [eval]
    std::string eval_split = "test";
    std::size_t head_ranks = 10;

    // [fewshot]
    std::size_t fewshot_k = 10;
    bool recalibrate = true;
    std::size_t recalibrate_threshold = 5;

    // [compare]
    std::size_t compare_seeds = 5;
    std::string compare_split = "all";

    // [synth]
    SynthConfig synth;

    // [global]
    std::uint64_t seed = 17;

    PartitionPolicy partition_policy() const;

    static RunConfig load(const std::string& path);
    void save(const std::string& path) const;

    bool operator==(const RunConfig&) const = default;
};

/// Corpus restricted to one split name, or the whole corpus for "all".
Corpus select_split(const Corpus& corpus, const std::string& split_name);

/// Batch concept extraction: one JSONL line {"id", "group", "concepts"} per
/// instance, written to out_path ("-" for stdout).
void run_extract(const RunConfig& config, const std::string& out_path);

enum class RunMode { full, fewshot };

struct ExperimentResult {
    MetricsReport image_to_report;
    MetricsReport report_to_image;
    std::size_t support_size = 0;  // fewshot only
    std::string manifest_path;
};

/// Full workflow: index the training split, train, evaluate, and write model,
/// loss trace, metrics, and a manifest embedding config and input hashes.
/// Fewshot mode trains on a K-per-group support set and re-partitions it
/// (min-count threshold) unless config.recalibrate is false, in which case
/// the support sub-index keeps a top-n partition of the same size as full
/// training. Partial outputs are removed on failure.
ExperimentResult run_experiment(const RunConfig& config, RunMode mode);

/// Trains selective-sampling and uniform-random models that differ only in
/// batch construction (shared init seed per trial), evaluates both, and
/// writes a side-by-side comparison with head-group vs tail-group breakdown.
/// Trial seeds are config.seed + 0 .. config.seed + compare_seeds - 1.
struct CompareResult {
    std::string report_path;
    double tail_gain_r10_report_to_image = 0.0;  // mean selective - random
};

CompareResult run_baseline_compare(const RunConfig& config);

}  // namespace casekit
