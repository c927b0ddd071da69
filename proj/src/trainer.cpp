#include "casekit/trainer.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <unordered_map>

#include "casekit/errors.hpp"
#include "casekit/hash.hpp"
#include "casekit/loss.hpp"

namespace casekit {

void TrainConfig::validate() const {
    if (epochs < 1) throw ConfigError("epochs must be >= 1");
    if (learning_rate < 0.0) throw ConfigError("learning rate must be non-negative");
    if (momentum < 0.0 || momentum >= 1.0) throw ConfigError("momentum must lie in [0, 1)");
    if (embed_dim == 0) throw ConfigError("embed dim must be positive");
    if (!(temperature > 0.0)) throw ConfigError("temperature must be positive");
}

double TrainResult::epoch_mean_loss(std::size_t epoch) const {
    double sum = 0.0;
    std::size_t count = 0;
    for (const auto& point : trace) {
        if (point.epoch == epoch) {
            sum += point.loss;
            ++count;
        }
    }
    if (count == 0) throw DataError("loss trace holds no batches for epoch " +
                                    std::to_string(epoch));
    return sum / static_cast<double>(count);
}

TrainResult train(const Corpus& corpus, const GroupIndex& index, const Lexicon& lexicon,
                  const TrainConfig& cfg) {
    cfg.validate();
    if (corpus.instances.empty()) throw DataError("cannot train on an empty corpus");

    // Featurize once; instances are looked up per slot afterwards.
    std::unordered_map<std::string, const Instance*> by_id;
    std::unordered_map<std::string, std::vector<double>> text_features;
    std::vector<std::string> all_ids;
    by_id.reserve(corpus.instances.size());
    for (const auto& inst : corpus.instances) {
        by_id[inst.instance_id] = &inst;
        text_features[inst.instance_id] =
            featurize_text(inst.report_text, lexicon, cfg.hash_buckets);
        all_ids.push_back(inst.instance_id);
    }

    TrainResult result;
    result.params = init_params(corpus.dim, cfg.embed_dim, lexicon, cfg.hash_buckets,
                                cfg.temperature, cfg.seed);

    Matrix vel_img(corpus.dim, cfg.embed_dim);
    Matrix vel_txt(result.params.text_dim(), cfg.embed_dim);

    Rng batch_rng(cfg.sampler.seed);
    const std::size_t n = corpus.instances.size();
    const std::size_t batches_per_epoch = (n + cfg.sampler.batch_size - 1) / cfg.sampler.batch_size;

    std::size_t global_batch = 0;
    for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
        for (std::size_t bi = 0; bi < batches_per_epoch; ++bi, ++global_batch) {
            const MiniBatch batch =
                cfg.sampler_kind == SamplerKind::selective
                    ? sample_batch(index, cfg.sampler, batch_rng)
                    : sample_random_batch(index, all_ids, cfg.sampler.batch_size, batch_rng);

            Matrix img_in(batch.slots.size(), corpus.dim);
            Matrix txt_in(batch.slots.size(), result.params.text_dim());
            for (std::size_t s = 0; s < batch.slots.size(); ++s) {
                const Instance* inst = by_id.at(batch.slots[s].instance_id);
                for (std::size_t d = 0; d < corpus.dim; ++d)
                    img_in(s, d) = inst->image_features[d];
                const auto& tf = text_features.at(inst->instance_id);
                for (std::size_t d = 0; d < tf.size(); ++d) txt_in(s, d) = tf[d];
            }

            LossGradients grads = loss_gradients(result.params, img_in, txt_in);
            if (!std::isfinite(grads.loss))
                throw DivergenceError("loss became non-finite at epoch " + std::to_string(epoch) +
                                      ", batch " + std::to_string(bi));

            auto step = [&cfg](Matrix& w, Matrix& vel, const Matrix& grad) {
                for (std::size_t k = 0; k < w.data().size(); ++k) {
                    vel.data()[k] = cfg.momentum * vel.data()[k] -
                                    cfg.learning_rate * grad.data()[k];
                    w.data()[k] += vel.data()[k];
                }
            };
            step(result.params.w_img, vel_img, grads.d_w_img);
            step(result.params.w_txt, vel_txt, grads.d_w_txt);

            result.trace.push_back({global_batch, epoch, grads.loss});
        }
    }

    if (!cfg.loss_trace_path.empty()) write_loss_trace(result.trace, cfg.loss_trace_path);
    return result;
}

void write_loss_trace(const std::vector<TracePoint>& trace, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write loss trace: " + path);
    out << "batch_index,epoch,loss\n";
    char buf[64];
    for (const auto& point : trace) {
        std::snprintf(buf, sizeof(buf), "%.17g", point.loss);
        out << point.batch_index << ',' << point.epoch << ',' << buf << '\n';
    }
    if (!out) throw DataError("failed writing loss trace: " + path);
}

}  // namespace casekit
