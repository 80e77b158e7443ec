#pragma once

#include <filesystem>
#include <memory>
#include <string>

#include "sectorcast/date.hpp"

namespace sectorcast::marketdata {

// Remote history acquisition sits behind this interface so every other part
// of the pipeline can run offline against fixture files.
class FetchClient {
public:
    virtual ~FetchClient() = default;

    // Returns CSV text in the schema parse_ohlcv_csv accepts.
    virtual std::string fetch_history(const std::string& ticker, const DateRange& range) = 0;
};

// Serves <dir>/<ticker>.csv verbatim; unknown ticker if the file is absent.
class FileFetchClient final : public FetchClient {
public:
    explicit FileFetchClient(std::filesystem::path dir) : dir_(std::move(dir)) {}
    std::string fetch_history(const std::string& ticker, const DateRange& range) override;

private:
    std::filesystem::path dir_;
};

// Stand-in for test mode: every call fails with a disabled-transport error.
class DisabledFetchClient final : public FetchClient {
public:
    std::string fetch_history(const std::string& ticker, const DateRange& range) override;
};

// HTTP GET against a URL template containing {ticker}, {start_epoch} and
// {end_epoch} placeholders.
class HttpFetchClient final : public FetchClient {
public:
    explicit HttpFetchClient(std::string url_template) : template_(std::move(url_template)) {}
    std::string fetch_history(const std::string& ticker, const DateRange& range) override;

private:
    std::string template_;
};

// Expand {ticker}/{start_epoch}/{end_epoch} placeholders. Exposed for tests.
std::string expand_url_template(const std::string& url_template, const std::string& ticker,
                                const DateRange& range);

}  // namespace sectorcast::marketdata
