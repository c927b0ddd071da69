#include "casekit/loss.hpp"

#include <cmath>
#include <string>

#include "casekit/errors.hpp"

namespace casekit {

namespace {

void check_unit_rows(const Matrix& m, const char* name) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        double norm_sq = 0.0;
        for (std::size_t j = 0; j < m.cols(); ++j) norm_sq += m(i, j) * m(i, j);
        if (std::abs(std::sqrt(norm_sq) - 1.0) > 1e-4)
            throw DataError(std::string(name) + " row " + std::to_string(i) +
                            " is not unit norm");
    }
}

double row_cross_entropy_sum(const Matrix& logits, bool by_rows) {
    const std::size_t n = logits.rows();
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double max_v = -INFINITY;
        for (std::size_t j = 0; j < n; ++j) {
            const double v = by_rows ? logits(i, j) : logits(j, i);
            if (v > max_v) max_v = v;
        }
        double sum_exp = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            const double v = by_rows ? logits(i, j) : logits(j, i);
            sum_exp += std::exp(v - max_v);
        }
        total += max_v + std::log(sum_exp) - logits(i, i);
    }
    return total;
}

// Row-normalize m; returns per-row norms. Zero rows are a contract violation.
std::vector<double> normalize_rows(Matrix& m, const char* name) {
    std::vector<double> norms(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        double norm_sq = 0.0;
        for (std::size_t j = 0; j < m.cols(); ++j) norm_sq += m(i, j) * m(i, j);
        if (norm_sq == 0.0)
            throw DataError(std::string(name) + " row " + std::to_string(i) +
                            " projects to the zero vector");
        norms[i] = std::sqrt(norm_sq);
        const double inv = 1.0 / norms[i];
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= inv;
    }
    return norms;
}

}  // namespace

LossResult contrastive_loss(const Matrix& img_embs, const Matrix& txt_embs, double temperature) {
    if (img_embs.rows() != txt_embs.rows() || img_embs.cols() != txt_embs.cols())
        throw DataError("embedding matrices must have matching shapes");
    if (img_embs.rows() == 0) throw DataError("contrastive loss needs at least one pair");
    if (!(temperature > 0.0)) throw ConfigError("temperature must be positive");
    check_unit_rows(img_embs, "image embeddings");
    check_unit_rows(txt_embs, "text embeddings");

    LossResult result;
    result.logits = matmul_a_bt(img_embs, txt_embs);
    for (double& v : result.logits.data()) v /= temperature;

    const double n = static_cast<double>(img_embs.rows());
    result.loss = 0.5 * (row_cross_entropy_sum(result.logits, true) +
                         row_cross_entropy_sum(result.logits, false)) /
                  n;
    return result;
}

LossGradients loss_gradients(const EncoderParams& params, const Matrix& img_inputs,
                             const Matrix& txt_inputs) {
    const std::size_t batch = img_inputs.rows();
    if (batch == 0 || txt_inputs.rows() != batch)
        throw DataError("gradient inputs must hold the same nonzero batch size");
    const double tau = params.temperature;

    Matrix u_hat = matmul(img_inputs, params.w_img);  // becomes normalized in place
    Matrix v_hat = matmul(txt_inputs, params.w_txt);
    const auto u_norms = normalize_rows(u_hat, "image");
    const auto v_norms = normalize_rows(v_hat, "text");

    Matrix logits = matmul_a_bt(u_hat, v_hat);
    for (double& v : logits.data()) v /= tau;

    const double n = static_cast<double>(batch);
    LossGradients out;
    out.loss = 0.5 * (row_cross_entropy_sum(logits, true) +
                      row_cross_entropy_sum(logits, false)) /
               n;

    // dL/dS = (row_softmax - I)/(2B) + (col_softmax - I)/(2B)
    Matrix grad_s(batch, batch);
    for (std::size_t i = 0; i < batch; ++i) {
        double max_v = -INFINITY;
        for (std::size_t j = 0; j < batch; ++j) max_v = std::max(max_v, logits(i, j));
        double sum_exp = 0.0;
        for (std::size_t j = 0; j < batch; ++j) sum_exp += std::exp(logits(i, j) - max_v);
        for (std::size_t j = 0; j < batch; ++j)
            grad_s(i, j) += std::exp(logits(i, j) - max_v) / sum_exp;
    }
    for (std::size_t j = 0; j < batch; ++j) {
        double max_v = -INFINITY;
        for (std::size_t i = 0; i < batch; ++i) max_v = std::max(max_v, logits(i, j));
        double sum_exp = 0.0;
        for (std::size_t i = 0; i < batch; ++i) sum_exp += std::exp(logits(i, j) - max_v);
        for (std::size_t i = 0; i < batch; ++i)
            grad_s(i, j) += std::exp(logits(i, j) - max_v) / sum_exp;
    }
    for (std::size_t i = 0; i < batch; ++i) grad_s(i, i) -= 2.0;
    for (double& v : grad_s.data()) v /= 2.0 * n;

    // back through the cosine logits
    Matrix d_u_hat = matmul(grad_s, v_hat);  // B x E
    Matrix d_v_hat = matmul_at_b(grad_s, u_hat);
    for (double& v : d_u_hat.data()) v /= tau;
    for (double& v : d_v_hat.data()) v /= tau;

    // back through row normalization: du = (g - (g.uhat) uhat) / |u|
    auto through_norm = [](Matrix& g, const Matrix& hat, const std::vector<double>& norms) {
        for (std::size_t i = 0; i < g.rows(); ++i) {
            double dot = 0.0;
            for (std::size_t j = 0; j < g.cols(); ++j) dot += g(i, j) * hat(i, j);
            for (std::size_t j = 0; j < g.cols(); ++j)
                g(i, j) = (g(i, j) - dot * hat(i, j)) / norms[i];
        }
    };
    through_norm(d_u_hat, u_hat, u_norms);
    through_norm(d_v_hat, v_hat, v_norms);

    out.d_w_img = matmul_at_b(img_inputs, d_u_hat);
    out.d_w_txt = matmul_at_b(txt_inputs, d_v_hat);
    return out;
}

}  // namespace casekit
