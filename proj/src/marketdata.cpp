#include "sectorcast/marketdata.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "sectorcast/csv.hpp"
#include "sectorcast/errors.hpp"

namespace sectorcast::marketdata {

namespace {

struct ColumnMap {
    std::size_t date, open, high, low, close, volume;
};

ColumnMap map_header(std::string_view header_line) {
    auto fields = split_csv_line(header_line);
    std::map<std::string, std::size_t> by_name;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        by_name.emplace(lower(trim(fields[i])), i);
    }
    auto need = [&](const char* name) -> std::size_t {
        auto it = by_name.find(name);
        if (it == by_name.end()) {
            throw FormatError(std::string("missing required column: ") + name);
        }
        return it->second;
    };
    return ColumnMap{need("date"), need("open"), need("high"),
                     need("low"),  need("close"), need("volume")};
}

bool bar_valid(const OhlcvBar& b) {
    return b.open > 0 && b.high > 0 && b.low > 0 && b.close > 0 && b.high >= b.low &&
           b.volume >= 0;
}

}  // namespace

ParseResult parse_ohlcv_csv(std::string_view text, std::string_view ticker,
                            std::string_view sector, ParseMode mode) {
    auto lines = split_lines(text);
    if (lines.empty()) throw FormatError("empty document for " + std::string(ticker));
    ColumnMap cols = map_header(lines[0]);

    ParseResult result;
    result.series.ticker = std::string(ticker);
    result.series.sector = std::string(sector);

    for (std::size_t li = 1; li < lines.size(); ++li) {
        if (trim(lines[li]).empty()) continue;
        ++result.rows_in;
        auto fields = split_csv_line(lines[li]);
        auto field = [&](std::size_t idx) -> std::string_view {
            return idx < fields.size() ? trim(fields[idx]) : std::string_view{};
        };

        auto reject = [&](const std::string& why) {
            if (mode == ParseMode::strict) {
                throw DataError(std::string(ticker) + " row " + std::to_string(li + 1) + ": " +
                                why);
            }
            ++result.rows_dropped;
        };

        auto date = Date::parse(field(cols.date));
        auto open = parse_double(field(cols.open));
        auto high = parse_double(field(cols.high));
        auto low = parse_double(field(cols.low));
        auto close = parse_double(field(cols.close));
        auto volume = parse_double(field(cols.volume));
        if (!date || !open || !high || !low || !close || !volume) {
            reject("missing or unparseable field");
            continue;
        }
        OhlcvBar bar{*date, *open, *high, *low, *close, *volume};
        if (!bar_valid(bar)) {
            reject("violates bar invariants (positive prices, high >= low, volume >= 0)");
            continue;
        }
        result.series.bars.push_back(bar);
    }

    std::stable_sort(result.series.bars.begin(), result.series.bars.end(),
                     [](const OhlcvBar& a, const OhlcvBar& b) { return a.date < b.date; });

    for (std::size_t i = 1; i < result.series.bars.size(); ++i) {
        if (result.series.bars[i].date == result.series.bars[i - 1].date) {
            throw DataError(std::string(ticker) + ": duplicate date " +
                            result.series.bars[i].date.to_string());
        }
    }

    if (result.series.bars.empty()) {
        throw EmptyDataError(std::string(ticker) + ": no valid rows");
    }
    return result;
}

std::string serialize_csv(const PriceSeries& series) {
    std::string out = "Date,Open,High,Low,Close,Volume\n";
    for (const OhlcvBar& b : series.bars) {
        out += b.date.to_string();
        out += ',';
        out += format_double(b.open);
        out += ',';
        out += format_double(b.high);
        out += ',';
        out += format_double(b.low);
        out += ',';
        out += format_double(b.close);
        out += ',';
        out += format_double(b.volume);
        out += '\n';
    }
    return out;
}

PriceSeries filter_range(const PriceSeries& series, const DateRange& range) {
    PriceSeries out;
    out.ticker = series.ticker;
    out.sector = series.sector;
    for (const OhlcvBar& b : series.bars) {
        if (range.contains(b.date)) out.bars.push_back(b);
    }
    return out;
}

std::vector<SectorUniverse> load_universe(std::string_view document) {
    auto lines = split_lines(document);
    if (lines.empty()) throw FormatError("empty universe document");

    auto header = split_csv_line(lines[0]);
    if (header.size() < 3 || lower(trim(header[0])) != "sector" ||
        lower(trim(header[1])) != "ticker" || lower(trim(header[2])) != "weight") {
        throw FormatError("universe header must be: sector,ticker,weight");
    }

    std::vector<SectorUniverse> out;
    std::map<std::string, std::size_t> sector_index;
    std::map<std::string, std::set<std::string>> seen_tickers;

    for (std::size_t li = 1; li < lines.size(); ++li) {
        if (trim(lines[li]).empty()) continue;
        auto fields = split_csv_line(lines[li]);
        if (fields.size() < 2) {
            throw FormatError("universe row " + std::to_string(li + 1) + ": too few fields");
        }
        std::string sector(trim(fields[0]));
        std::string ticker(trim(fields[1]));
        if (sector.empty() || ticker.empty()) {
            throw FormatError("universe row " + std::to_string(li + 1) +
                              ": blank sector or ticker");
        }

        std::optional<double> weight;
        if (fields.size() >= 3 && !trim(fields[2]).empty()) {
            auto w = parse_double(fields[2]);
            if (!w) {
                throw FormatError("universe row " + std::to_string(li + 1) +
                                  ": unparseable weight");
            }
            if (!(*w > 0.0 && *w <= 100.0)) {
                throw DataError("universe row " + std::to_string(li + 1) + ": weight " +
                                format_double(*w) + " outside (0, 100]");
            }
            weight = *w;
        }

        if (!seen_tickers[sector].insert(ticker).second) {
            throw DataError("duplicate ticker " + ticker + " in sector " + sector);
        }

        auto [it, inserted] = sector_index.emplace(sector, out.size());
        if (inserted) out.push_back(SectorUniverse{sector, {}});
        out[it->second].members.push_back(SectorMember{ticker, weight});
    }

    if (out.empty()) throw EmptyDataError("universe document has no records");
    return out;
}

}  // namespace sectorcast::marketdata
