#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "sectorcast/dataset.hpp"
#include "sectorcast/marketdata.hpp"
#include "sectorcast/matrix.hpp"

namespace sectorcast::nn {

struct ModelConfig {
    int lookback = 50;        // input steps L
    int features = 1;         // input width F
    int hidden_units = 256;   // LSTM units H per layer
    int num_lstm_layers = 2;
    double dropout_rate = 0.3;
    int dense_units = 256;    // hidden dense layer, ReLU
    int horizon = 1;          // output width h

    void validate() const;
    bool operator==(const ModelConfig&) const = default;
};

// One LSTM layer. Gate order throughout: input, forget, cell candidate,
// output.
enum GateIndex { gate_input = 0, gate_forget = 1, gate_cell = 2, gate_output = 3 };

struct LstmLayerParams {
    Matrix w[4];                // (H, F_in) input weights per gate
    Matrix u[4];                // (H, H) recurrent weights per gate
    std::vector<double> b[4];   // (H) biases per gate

    std::size_t hidden() const { return w[0].rows; }
    std::size_t input_width() const { return w[0].cols; }
};

struct DenseParams {
    Matrix w;                   // (out, in)
    std::vector<double> b;      // (out)
};

struct ModelParams {
    std::vector<LstmLayerParams> lstm;
    DenseParams dense;          // hidden dense, ReLU
    DenseParams head;           // output layer, sigmoid, horizon rows
};

// Gradients share the exact shape of the parameters they refer to.
using ModelGrads = ModelParams;

// Visit every parameter array in a fixed canonical order (per layer: W then U
// then b for gates i,f,c,o; then dense W,b; then head W,b). The optimizer and
// the checkpoint format both rely on this order.
template <typename P, typename F>
void for_each_param_array(P& params, F&& fn) {
    for (auto& layer : params.lstm) {
        for (int g = 0; g < 4; ++g) fn(layer.w[g].a);
        for (int g = 0; g < 4; ++g) fn(layer.u[g].a);
        for (int g = 0; g < 4; ++g) fn(layer.b[g]);
    }
    fn(params.dense.w.a);
    fn(params.dense.b);
    fn(params.head.w.a);
    fn(params.head.b);
}

ModelParams zeros_like(const ModelParams& params);
std::size_t param_count(const ModelParams& params);

// Glorot-uniform weights (k = sqrt(6/(fan_in+fan_out))), zero biases except
// forget-gate biases, which start at 1. Identical (config, seed) pairs yield
// bit-identical parameters.
ModelParams init_params(const ModelConfig& config, std::uint64_t seed);

// Single LSTM cell step:
//   i = sig(Wi x + Ui h + bi)   f = sig(Wf x + Uf h + bf)
//   g = tanh(Wc x + Uc h + bc)  o = sig(Wo x + Uo h + bo)
//   c' = f * c + i * g          h' = o * tanh(c')
void lstm_cell(std::span<const double> x, std::span<const double> h_prev,
               std::span<const double> c_prev, const LstmLayerParams& params,
               std::span<double> h_out, std::span<double> c_out);

enum class RunMode { train, infer };

// Everything backward() needs from a training-mode forward pass. Holds a
// pointer to the parameters it was produced with; the caller keeps them alive.
struct ForwardCache;

struct ForwardResult {
    Matrix predictions;  // (B, horizon), each strictly inside (0, 1)
    std::shared_ptr<ForwardCache> cache;  // null in infer mode
};

// Full stacked forward pass. Inverted dropout is applied to every LSTM
// layer's output in train mode (intermediate layers: the whole sequence; the
// last layer: its final hidden state). Infer mode applies no masks and is a
// pure function of (params, batch).
ForwardResult forward(const Tensor3& batch, const ModelParams& params, const ModelConfig& config,
                      RunMode mode, std::uint64_t dropout_seed = 0);

// Exact gradients of the loss wrt every parameter, given dLoss/dPrediction.
ModelGrads backward(const ForwardCache& cache, const Matrix& dloss_dpred);

// Scale the window with the training scaler, run an infer-mode forward and
// inverse-transform the close-channel prediction for the next day.
double predict_next(const ModelParams& params, const ModelConfig& config,
                    const dataset::FeatureSpec& spec, std::span<const marketdata::OhlcvBar> window,
                    const dataset::ScalerParams& scaler);

}  // namespace sectorcast::nn
