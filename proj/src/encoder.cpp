#include "casekit/encoder.hpp"

#include <cmath>
#include <fstream>

#include <json.hpp>

#include "casekit/errors.hpp"
#include "casekit/hash.hpp"
#include "casekit/parser.hpp"
#include "casekit/rng.hpp"
#include "casekit/text.hpp"

namespace casekit {

using nlohmann::json;

namespace {

Matrix init_tower(std::size_t fan_in, std::size_t embed_dim, Rng& rng) {
    Matrix w(fan_in, embed_dim);
    const double bound = 1.0 / std::sqrt(static_cast<double>(fan_in));
    for (double& v : w.data()) v = (2.0 * rng.uniform() - 1.0) * bound;
    return w;
}

std::vector<double> project_normalized(const Matrix& w, const std::vector<double>& x,
                                       const char* tower) {
    if (x.size() != w.rows())
        throw DataError(std::string(tower) + " input dimension " + std::to_string(x.size()) +
                        " does not match weight rows " + std::to_string(w.rows()));
    std::vector<double> u(w.cols(), 0.0);
    for (std::size_t d = 0; d < w.rows(); ++d) {
        const double xd = x[d];
        if (xd == 0.0) continue;
        for (std::size_t j = 0; j < w.cols(); ++j) u[j] += xd * w(d, j);
    }
    double norm_sq = 0.0;
    for (double v : u) norm_sq += v * v;
    if (norm_sq == 0.0)
        throw DataError(std::string(tower) + " projection is the zero vector; "
                        "embedding direction undefined");
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (double& v : u) v *= inv;
    return u;
}

}  // namespace

EncoderParams init_params(std::size_t image_dim, std::size_t embed_dim, const Lexicon& lexicon,
                          std::size_t hash_buckets, double temperature, std::uint64_t seed) {
    if (image_dim == 0 || embed_dim == 0) throw ConfigError("encoder dimensions must be positive");
    if (!(temperature > 0.0)) throw ConfigError("temperature must be positive");
    EncoderParams params;
    Rng rng(derive_seed(seed, "encoder-init"));
    params.w_img = init_tower(image_dim, embed_dim, rng);
    params.w_txt = init_tower(lexicon.concept_count() + hash_buckets, embed_dim, rng);
    params.temperature = temperature;
    params.hash_buckets = hash_buckets;
    params.lexicon_hash = lexicon.version_hash();
    return params;
}

std::vector<double> featurize_text(const std::string& report, const Lexicon& lexicon,
                                   std::size_t hash_buckets) {
    const std::size_t n_concepts = lexicon.concept_count();
    std::vector<double> features(n_concepts + hash_buckets, 0.0);
    for (const auto& clause : positive_clauses(report, lexicon)) {
        const auto tokens = tokenize(clause);
        for (std::size_t idx : match_concepts_in_clause(tokens, lexicon)) features[idx] = 1.0;
        if (hash_buckets > 0) {
            for (const auto& token : tokens) {
                features[n_concepts + fnv1a64(token) % hash_buckets] += 1.0;
            }
        }
    }
    return features;
}

std::vector<double> encode_image(const EncoderParams& params,
                                 const std::vector<double>& features) {
    return project_normalized(params.w_img, features, "image");
}

std::vector<double> encode_text(const EncoderParams& params,
                                const std::vector<double>& txt_features) {
    return project_normalized(params.w_txt, txt_features, "text");
}

namespace {

constexpr int kModelVersion = 1;

json params_to_json(const EncoderParams& params) {
    return {{"version", kModelVersion},
            {"image_dim", params.w_img.rows()},
            {"text_dim", params.w_txt.rows()},
            {"embed_dim", params.w_img.cols()},
            {"temperature", params.temperature},
            {"hash_buckets", params.hash_buckets},
            {"lexicon_hash", params.lexicon_hash},
            {"w_img", params.w_img.data()},
            {"w_txt", params.w_txt.data()}};
}

}  // namespace

void save_params(const EncoderParams& params, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write model file: " + path);
    out << params_to_json(params).dump(2) << '\n';
    if (!out) throw DataError("failed writing model file: " + path);
}

EncoderParams load_params(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open model file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw DataError(path + ": malformed model JSON: " + e.what());
    }
    if (j.value("version", -1) != kModelVersion)
        throw VersionMismatchError(path + ": unsupported model version");

    EncoderParams params;
    const auto rows_img = j.at("image_dim").get<std::size_t>();
    const auto rows_txt = j.at("text_dim").get<std::size_t>();
    const auto embed = j.at("embed_dim").get<std::size_t>();
    params.temperature = j.at("temperature").get<double>();
    params.hash_buckets = j.at("hash_buckets").get<std::size_t>();
    params.lexicon_hash = j.at("lexicon_hash").get<std::string>();
    const auto w_img = j.at("w_img").get<std::vector<double>>();
    const auto w_txt = j.at("w_txt").get<std::vector<double>>();
    if (w_img.size() != rows_img * embed || w_txt.size() != rows_txt * embed)
        throw DataError(path + ": weight array sizes disagree with declared dimensions");
    params.w_img = Matrix(rows_img, embed);
    params.w_img.data() = w_img;
    params.w_txt = Matrix(rows_txt, embed);
    params.w_txt.data() = w_txt;
    return params;
}

std::string params_hash(const EncoderParams& params) {
    return hash_hex(fnv1a64(params_to_json(params).dump()));
}

}  // namespace casekit
