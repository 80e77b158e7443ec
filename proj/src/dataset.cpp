#include "sectorcast/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "sectorcast/csv.hpp"
#include "sectorcast/errors.hpp"

namespace sectorcast::dataset {

const char* feature_name(Feature f) {
    switch (f) {
        case Feature::open: return "open";
        case Feature::high: return "high";
        case Feature::low: return "low";
        case Feature::close: return "close";
        case Feature::volume: return "volume";
    }
    return "?";
}

Feature feature_from_name(std::string_view name) {
    std::string n = lower(trim(name));
    if (n == "open") return Feature::open;
    if (n == "high") return Feature::high;
    if (n == "low") return Feature::low;
    if (n == "close") return Feature::close;
    if (n == "volume") return Feature::volume;
    throw ConfigError("unknown feature name: " + std::string(name));
}

double feature_value(const marketdata::OhlcvBar& bar, Feature f) {
    switch (f) {
        case Feature::open: return bar.open;
        case Feature::high: return bar.high;
        case Feature::low: return bar.low;
        case Feature::close: return bar.close;
        case Feature::volume: return bar.volume;
    }
    return 0.0;
}

void FeatureSpec::validate() const {
    if (features.empty()) throw ConfigError("feature set must not be empty");
    std::set<Feature> seen;
    for (Feature f : features) {
        if (!seen.insert(f).second) {
            throw ConfigError(std::string("duplicate feature: ") + feature_name(f));
        }
    }
    if (!seen.count(Feature::close)) {
        throw ConfigError("feature set must contain close (the prediction target)");
    }
}

std::size_t FeatureSpec::close_index() const {
    for (std::size_t i = 0; i < features.size(); ++i) {
        if (features[i] == Feature::close) return i;
    }
    throw ConfigError("feature set must contain close (the prediction target)");
}

ScalerParams fit_scaler(const marketdata::PriceSeries& series, const FeatureSpec& spec,
                        std::size_t begin, std::size_t end) {
    spec.validate();
    if (begin >= end || end > series.bars.size()) {
        throw ConfigError("scaler fit range [" + std::to_string(begin) + ", " +
                          std::to_string(end) + ") invalid for series of length " +
                          std::to_string(series.bars.size()));
    }
    ScalerParams out;
    for (Feature f : spec.features) {
        double lo = feature_value(series.bars[begin], f);
        double hi = lo;
        for (std::size_t i = begin + 1; i < end; ++i) {
            double v = feature_value(series.bars[i], f);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
        if (!(hi > lo)) {
            throw ScaleError(std::string("feature ") + feature_name(f) +
                             " is constant over the fit range (value " + format_double(lo) + ")");
        }
        out.fmin.push_back(lo);
        out.fmax.push_back(hi);
    }
    return out;
}

double transform(double value, const ScalerParams& scaler, std::size_t feature_idx) {
    return (value - scaler.fmin[feature_idx]) /
           (scaler.fmax[feature_idx] - scaler.fmin[feature_idx]);
}

double inverse_transform(double scaled, const ScalerParams& scaler, std::size_t feature_idx) {
    return scaler.fmin[feature_idx] +
           scaled * (scaler.fmax[feature_idx] - scaler.fmin[feature_idx]);
}

WindowedDataset make_windows(const marketdata::PriceSeries& series, const FeatureSpec& spec,
                             const ScalerParams& scaler, int lookback, int horizon) {
    spec.validate();
    if (lookback < 1 || horizon < 1) throw ConfigError("lookback and horizon must be positive");
    const std::size_t len = series.bars.size();
    const std::size_t need = static_cast<std::size_t>(lookback) + static_cast<std::size_t>(horizon);
    if (len < need) {
        throw InsufficientDataError(series.ticker + ": series length " + std::to_string(len) +
                                    " below required minimum " + std::to_string(need) +
                                    " (lookback " + std::to_string(lookback) + " + horizon " +
                                    std::to_string(horizon) + ")");
    }
    const std::size_t n = len - need + 1;

    const std::size_t L = static_cast<std::size_t>(lookback);
    const std::size_t h = static_cast<std::size_t>(horizon);
    const std::size_t F = spec.count();
    const std::size_t close_idx = spec.close_index();

    WindowedDataset ds;
    ds.inputs = Tensor3(n, L, F);
    ds.targets = Matrix(n, h);
    ds.sample_dates.reserve(n);
    ds.scaler = scaler;
    ds.lookback = lookback;
    ds.horizon = horizon;
    ds.n_features = static_cast<int>(F);

    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t t = 0; t < L; ++t) {
            const marketdata::OhlcvBar& bar = series.bars[k + t];
            for (std::size_t f = 0; f < F; ++f) {
                ds.inputs.at(k, t, f) = transform(feature_value(bar, spec.features[f]), scaler, f);
            }
        }
        for (std::size_t j = 0; j < h; ++j) {
            ds.targets(k, j) = transform(series.bars[k + L + j].close, scaler, close_idx);
        }
        ds.sample_dates.push_back(series.bars[k + L + h - 1].date);
    }
    return ds;
}

void SplitSpec::validate() const {
    if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
        throw ConfigError("train_fraction must be in (0, 1)");
    }
    if (!(val_fraction >= 0.0 && val_fraction < 1.0)) {
        throw ConfigError("val_fraction must be in [0, 1)");
    }
    if (!(train_fraction + val_fraction < 1.0)) {
        throw ConfigError("train_fraction + val_fraction must be below 1");
    }
}

namespace {

WindowedDataset slice(const WindowedDataset& ds, std::size_t begin, std::size_t count) {
    const std::size_t L = static_cast<std::size_t>(ds.lookback);
    const std::size_t h = static_cast<std::size_t>(ds.horizon);
    const std::size_t F = static_cast<std::size_t>(ds.n_features);

    WindowedDataset out;
    out.inputs = Tensor3(count, L, F);
    out.targets = Matrix(count, h);
    out.scaler = ds.scaler;
    out.lookback = ds.lookback;
    out.horizon = ds.horizon;
    out.n_features = ds.n_features;

    std::copy_n(ds.inputs.a.begin() + static_cast<std::ptrdiff_t>(begin * L * F), count * L * F,
                out.inputs.a.begin());
    std::copy_n(ds.targets.a.begin() + static_cast<std::ptrdiff_t>(begin * h), count * h,
                out.targets.a.begin());
    out.sample_dates.assign(ds.sample_dates.begin() + static_cast<std::ptrdiff_t>(begin),
                            ds.sample_dates.begin() + static_cast<std::ptrdiff_t>(begin + count));
    return out;
}

Splits split_by_counts(const WindowedDataset& ds, std::size_t n_train, std::size_t n_val,
                       std::size_t n_test) {
    if (n_train == 0 || n_val == 0 || n_test == 0) {
        throw SplitError("chronological split produced an empty part: train " +
                         std::to_string(n_train) + ", val " + std::to_string(n_val) + ", test " +
                         std::to_string(n_test));
    }
    Splits out;
    out.train = slice(ds, 0, n_train);
    out.val = slice(ds, n_train, n_val);
    out.test = slice(ds, n_train + n_val, n_test);
    return out;
}

}  // namespace

Splits chronological_split(const WindowedDataset& dataset, const SplitSpec& split) {
    split.validate();
    const std::size_t n = dataset.size();
    const std::size_t n_train =
        static_cast<std::size_t>(std::floor(static_cast<double>(n) * split.train_fraction));
    const std::size_t n_val =
        static_cast<std::size_t>(std::floor(static_cast<double>(n) * split.val_fraction));
    if (n_train + n_val > n) {
        throw SplitError("split fractions exceed the dataset size");
    }
    return split_by_counts(dataset, n_train, n_val, n - n_train - n_val);
}

BuiltDataset build_splits(const marketdata::PriceSeries& series, const FeatureSpec& spec,
                          int lookback, int horizon, const SplitSpec& split) {
    split.validate();
    const std::size_t len = series.bars.size();
    const std::size_t need = static_cast<std::size_t>(lookback) + static_cast<std::size_t>(horizon);
    if (len < need) {
        throw InsufficientDataError(series.ticker + ": series length " + std::to_string(len) +
                                    " below required minimum " + std::to_string(need));
    }
    const std::size_t n = len - need + 1;
    const std::size_t n_train =
        static_cast<std::size_t>(std::floor(static_cast<double>(n) * split.train_fraction));
    const std::size_t n_val =
        static_cast<std::size_t>(std::floor(static_cast<double>(n) * split.val_fraction));
    if (n_train == 0) throw SplitError(series.ticker + ": empty train split");

    // The last bar a training sample touches is its final target,
    // bar (n_train - 1) + lookback + horizon - 1. Fit stops there.
    const std::size_t fit_end = n_train + need - 1;
    BuiltDataset out;
    out.scaler = fit_scaler(series, spec, 0, fit_end);
    WindowedDataset full = make_windows(series, spec, out.scaler, lookback, horizon);
    out.n_train = n_train;
    out.n_val = n_val;
    out.n_test = n - n_train - n_val;
    out.splits = split_by_counts(full, out.n_train, out.n_val, out.n_test);
    return out;
}

BuiltDataset build_splits(const marketdata::PriceSeries& series, const FeatureSpec& spec,
                          int lookback, int horizon, const SplitSpec& split,
                          const DateRange& test_window) {
    split.validate();
    test_window.validate();
    const std::size_t len = series.bars.size();
    const std::size_t need = static_cast<std::size_t>(lookback) + static_cast<std::size_t>(horizon);
    if (len < need) {
        throw InsufficientDataError(series.ticker + ": series length " + std::to_string(len) +
                                    " below required minimum " + std::to_string(need));
    }
    const std::size_t n = len - need + 1;

    // Sample k's final target date is bars[k + need - 1].date.
    std::size_t test_begin = n;
    std::size_t test_end = n;  // exclusive
    for (std::size_t k = 0; k < n; ++k) {
        Date d = series.bars[k + need - 1].date;
        if (test_begin == n && d >= test_window.start) test_begin = k;
        if (d > test_window.end) {
            test_end = k;
            break;
        }
    }
    if (test_begin >= test_end) {
        throw SplitError(series.ticker + ": no samples fall inside test window " +
                         test_window.start.to_string() + ".." + test_window.end.to_string());
    }

    const std::size_t n_pre = test_begin;
    const std::size_t n_val =
        static_cast<std::size_t>(std::floor(static_cast<double>(n_pre) * split.val_fraction));
    const std::size_t n_train = n_pre - n_val;
    if (n_train == 0) throw SplitError(series.ticker + ": empty train split before test window");

    const std::size_t fit_end = n_train + need - 1;
    BuiltDataset out;
    out.scaler = fit_scaler(series, spec, 0, fit_end);
    WindowedDataset full = make_windows(series, spec, out.scaler, lookback, horizon);
    // Samples past the window end are outside the study; drop them.
    if (test_end < n) {
        full = slice(full, 0, test_end);
    }
    out.n_train = n_train;
    out.n_val = n_val;
    out.n_test = test_end - test_begin;
    out.splits = split_by_counts(full, out.n_train, out.n_val, out.n_test);
    return out;
}

}  // namespace sectorcast::dataset
