#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "casekit/lexicon.hpp"
#include "casekit/matrix.hpp"

namespace casekit {

/// Two-tower projection weights into the shared embedding space.
/// Text input dimension V = concept count + hashed-token buckets.
struct EncoderParams {
    Matrix w_img;  // D x E
    Matrix w_txt;  // V x E
    double temperature = 0.07;
    std::size_t hash_buckets = 64;
    std::string lexicon_hash;

    std::size_t image_dim() const { return w_img.rows(); }
    std::size_t text_dim() const { return w_txt.rows(); }
    std::size_t embed_dim() const { return w_img.cols(); }

    bool operator==(const EncoderParams&) const = default;
};

/// Seeded init, uniform in [-1/sqrt(fan_in), +1/sqrt(fan_in)] per tower.
EncoderParams init_params(std::size_t image_dim, std::size_t embed_dim, const Lexicon& lexicon,
                          std::size_t hash_buckets, double temperature, std::uint64_t seed);

/// Text featurization: a concept indicator block (one slot per lexicon
/// concept, in file order) followed by a hashed bag-of-words over the tokens
/// of effectively-positive clauses.
std::vector<double> featurize_text(const std::string& report, const Lexicon& lexicon,
                                   std::size_t hash_buckets);

/// Linear projection followed by Euclidean normalization. A zero projection
/// has no direction and raises DataError.
std::vector<double> encode_image(const EncoderParams& params, const std::vector<double>& features);
std::vector<double> encode_text(const EncoderParams& params,
                                const std::vector<double>& txt_features);

/// Versioned JSON model persistence; round-trips exactly.
void save_params(const EncoderParams& params, const std::string& path);
EncoderParams load_params(const std::string& path);

/// Canonical content hash of a model (hash of its serialized form).
std::string params_hash(const EncoderParams& params);

}  // namespace casekit
