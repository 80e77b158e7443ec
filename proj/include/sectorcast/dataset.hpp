#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sectorcast/date.hpp"
#include "sectorcast/marketdata.hpp"
#include "sectorcast/matrix.hpp"

namespace sectorcast::dataset {

enum class Feature { open, high, low, close, volume };

const char* feature_name(Feature f);
Feature feature_from_name(std::string_view name);
double feature_value(const marketdata::OhlcvBar& bar, Feature f);

// Ordered input feature set; the prediction target is always close.
struct FeatureSpec {
    std::vector<Feature> features{Feature::close};

    void validate() const;          // close present, no duplicates
    std::size_t count() const { return features.size(); }
    std::size_t close_index() const;

    bool operator==(const FeatureSpec&) const = default;
};

// Per-feature min/max, aligned with the FeatureSpec order.
struct ScalerParams {
    std::vector<double> fmin;
    std::vector<double> fmax;

    bool operator==(const ScalerParams&) const = default;
};

// Min/max over bars [begin, end). Constant features are rejected: the model's
// sigmoid head needs a non-degenerate [0,1] image to represent prices.
ScalerParams fit_scaler(const marketdata::PriceSeries& series, const FeatureSpec& spec,
                        std::size_t begin, std::size_t end);

// (x - min) / (max - min). Out-of-fit-range inputs map outside [0,1]; that is
// intended behaviour, not an error.
double transform(double value, const ScalerParams& scaler, std::size_t feature_idx);
double inverse_transform(double scaled, const ScalerParams& scaler, std::size_t feature_idx);

// Scaled supervised-learning samples. Sample k's inputs cover bars [k, k+L);
// its targets are the scaled closes of bars k+L .. k+L+h-1. sample_dates[k]
// is the date of the final target bar, k+L+h-1.
struct WindowedDataset {
    Tensor3 inputs;                 // (N, L, F)
    Matrix targets;                 // (N, h)
    std::vector<Date> sample_dates; // ascending
    ScalerParams scaler;
    int lookback = 0;
    int horizon = 0;
    int n_features = 0;

    std::size_t size() const { return inputs.n; }
};

WindowedDataset make_windows(const marketdata::PriceSeries& series, const FeatureSpec& spec,
                             const ScalerParams& scaler, int lookback, int horizon);

struct SplitSpec {
    double train_fraction = 0.8;
    double val_fraction = 0.1;  // test gets the remainder

    void validate() const;
    bool operator==(const SplitSpec&) const = default;
};

struct Splits {
    WindowedDataset train;
    WindowedDataset val;
    WindowedDataset test;
};

// Contiguous chronological split: floor(N*train), floor(N*val), rest to test.
// Every part must be non-empty.
Splits chronological_split(const WindowedDataset& dataset, const SplitSpec& split);

// Convenience used by the pipeline: fits the scaler over exactly the bar span
// the training samples touch (no lookahead), windows, then splits. When
// test_window is given, samples whose final target date falls inside it form
// the test set, samples after it are discarded, and the earlier ones are
// divided train/val by val_fraction.
struct BuiltDataset {
    Splits splits;
    ScalerParams scaler;
    std::size_t n_train = 0;
    std::size_t n_val = 0;
    std::size_t n_test = 0;
};

BuiltDataset build_splits(const marketdata::PriceSeries& series, const FeatureSpec& spec,
                          int lookback, int horizon, const SplitSpec& split);
BuiltDataset build_splits(const marketdata::PriceSeries& series, const FeatureSpec& spec,
                          int lookback, int horizon, const SplitSpec& split,
                          const DateRange& test_window);

}  // namespace sectorcast::dataset
