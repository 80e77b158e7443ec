#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sectorcast/date.hpp"

namespace sectorcast::marketdata {

struct OhlcvBar {
    Date date;
    double open = 0.0;
    double high = 0.0;
    double low = 0.0;
    double close = 0.0;
    double volume = 0.0;

    bool operator==(const OhlcvBar&) const = default;
};

// A ticker's cleaned, date-ascending bar history. Immutable after parsing.
struct PriceSeries {
    std::string ticker;
    std::string sector;
    std::vector<OhlcvBar> bars;

    bool operator==(const PriceSeries&) const = default;
};

struct SectorMember {
    std::string ticker;
    std::optional<double> weight;  // index weight in percent, metadata only
};

struct SectorUniverse {
    std::string sector;
    std::vector<SectorMember> members;
};

enum class ParseMode {
    lenient,  // drop and count rows with missing/invalid fields
    strict,   // any invalid row is an error
};

struct ParseResult {
    PriceSeries series;
    std::size_t rows_in = 0;      // data rows seen (header excluded)
    std::size_t rows_dropped = 0; // rows_in - bars kept
};

// Parse OHLCV CSV text. Header must name Date, Open, High, Low, Close and
// Volume (case-insensitive); unknown columns are ignored. Rows are sorted
// ascending by date. Duplicate dates are an error in both modes.
ParseResult parse_ohlcv_csv(std::string_view text, std::string_view ticker,
                            std::string_view sector, ParseMode mode = ParseMode::lenient);

// Canonical CSV emission; parse_ohlcv_csv(serialize_csv(s)) == s.
std::string serialize_csv(const PriceSeries& series);

// Bars with date inside [range.start, range.end].
PriceSeries filter_range(const PriceSeries& series, const DateRange& range);

// Universe file: CSV with header "sector,ticker,weight"; weight may be blank.
std::vector<SectorUniverse> load_universe(std::string_view document);

}  // namespace sectorcast::marketdata
