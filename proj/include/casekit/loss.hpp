#pragma once

#include "casekit/encoder.hpp"
#include "casekit/matrix.hpp"

namespace casekit {

struct LossResult {
    double loss = 0.0;
    Matrix logits;  // B x B, logits(i, j) = img_i . txt_j / temperature
};

/// Symmetric InfoNCE over in-batch candidates. Rows of both matrices must be
/// unit norm (deviation above 1e-4 is a contract error). The loss averages
/// row-wise and column-wise cross-entropy with the diagonal as target.
LossResult contrastive_loss(const Matrix& img_embs, const Matrix& txt_embs, double temperature);

struct LossGradients {
    double loss = 0.0;
    Matrix d_w_img;  // D x E
    Matrix d_w_txt;  // V x E
};

/// Analytic gradients of the symmetric InfoNCE through projection and
/// normalization. img_inputs is B x D raw image features, txt_inputs is
/// B x V featurized text.
LossGradients loss_gradients(const EncoderParams& params, const Matrix& img_inputs,
                             const Matrix& txt_inputs);

}  // namespace casekit
