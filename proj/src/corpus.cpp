#include "casekit/corpus.hpp"

#include <fstream>

#include <json.hpp>

#include "casekit/errors.hpp"

namespace casekit {

using nlohmann::json;

std::string to_string(Split split) {
    switch (split) {
        case Split::train: return "train";
        case Split::val: return "val";
        case Split::test: return "test";
    }
    return "train";
}

Split split_from_string(const std::string& name) {
    if (name == "train") return Split::train;
    if (name == "val") return Split::val;
    if (name == "test") return Split::test;
    throw DataError("unknown split value: " + name);
}

Corpus Corpus::filter(Split split) const {
    Corpus out;
    out.dim = dim;
    for (const auto& inst : instances) {
        if (inst.split == split) out.instances.push_back(inst);
    }
    return out;
}

const Instance* Corpus::find(const std::string& instance_id) const {
    for (const auto& inst : instances) {
        if (inst.instance_id == instance_id) return &inst;
    }
    return nullptr;
}

Corpus load_corpus(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open corpus file: " + path);

    Corpus corpus;
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::exception& e) {
            throw DataError(path + ":" + std::to_string(line_no) +
                            ": malformed JSON line: " + e.what());
        }
        const std::string where = path + ":" + std::to_string(line_no);
        try {
            if (!have_header) {
                if (j.value("schema", 0) != 1)
                    throw VersionMismatchError(where + ": unsupported corpus schema");
                corpus.dim = j.at("dim").get<std::size_t>();
                if (corpus.dim == 0) throw DataError(where + ": dim must be positive");
                have_header = true;
                continue;
            }
            Instance inst;
            inst.instance_id = j.at("id").get<std::string>();
            inst.report_text = j.at("report").get<std::string>();
            inst.image_features = j.at("features").get<std::vector<double>>();
            inst.split = split_from_string(j.at("split").get<std::string>());
            corpus.instances.push_back(std::move(inst));
        } catch (const json::exception& e) {
            throw DataError(where + ": bad instance record: " + e.what());
        }
    }
    if (!have_header) throw DataError(path + ": missing corpus header line");
    return corpus;
}

void save_corpus(const Corpus& corpus, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write corpus file: " + path);
    out << json{{"schema", 1}, {"dim", corpus.dim}}.dump() << '\n';
    for (const auto& inst : corpus.instances) {
        json j{{"id", inst.instance_id},
               {"report", inst.report_text},
               {"features", inst.image_features},
               {"split", to_string(inst.split)}};
        out << j.dump() << '\n';
    }
    if (!out) throw DataError("failed writing corpus file: " + path);
}

}  // namespace casekit
