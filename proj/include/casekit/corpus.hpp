#pragma once

#include <string>
#include <vector>

#include "casekit/parser.hpp"

namespace casekit {

enum class Split { train, val, test };

std::string to_string(Split split);
Split split_from_string(const std::string& name);

/// One paired sample: a free-text report and its image feature vector.
/// concept_set is filled by extraction when the group index is built.
struct Instance {
    std::string instance_id;
    std::string report_text;
    std::vector<double> image_features;
    ConceptSet concept_set;
    Split split = Split::train;
};

/// A loaded corpus with its declared feature dimension.
struct Corpus {
    std::size_t dim = 0;
    std::vector<Instance> instances;

    /// Instances belonging to one split, in corpus order.
    Corpus filter(Split split) const;

    const Instance* find(const std::string& instance_id) const;
};

/// Reads the JSON-lines corpus format. The first line is a header
/// {"schema": 1, "dim": D}; each following line is one instance
/// {"id", "report", "features", "split"}. Errors cite the line number.
Corpus load_corpus(const std::string& path);

/// Writes the same format deterministically (sorted keys, shortest float
/// representation); identical corpora serialize to identical bytes.
void save_corpus(const Corpus& corpus, const std::string& path);

}  // namespace casekit
