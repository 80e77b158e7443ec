#include "sectorcast/fetch.hpp"

#include <httplib.h>

#include "sectorcast/csv.hpp"
#include "sectorcast/errors.hpp"

namespace sectorcast::marketdata {

namespace {

std::string range_label(const std::string& ticker, const DateRange& range) {
    return ticker + " [" + range.start.to_string() + ".." + range.end.to_string() + "]";
}

}  // namespace

std::string FileFetchClient::fetch_history(const std::string& ticker, const DateRange& range) {
    std::filesystem::path path = dir_ / (ticker + ".csv");
    if (!std::filesystem::exists(path)) {
        throw FetchError(FetchError::Kind::unknown_ticker,
                         "unknown ticker " + range_label(ticker, range) + ": no fixture at " +
                             path.string());
    }
    std::string body = read_text_file(path.string());
    if (body.empty()) {
        throw FetchError(FetchError::Kind::empty_payload,
                         "empty payload for " + range_label(ticker, range));
    }
    return body;
}

std::string DisabledFetchClient::fetch_history(const std::string& ticker,
                                               const DateRange& range) {
    throw FetchError(FetchError::Kind::disabled,
                     "live fetch is disabled; requested " + range_label(ticker, range));
}

std::string expand_url_template(const std::string& url_template, const std::string& ticker,
                                const DateRange& range) {
    std::string url = url_template;
    auto replace_all = [&url](const std::string& key, const std::string& value) {
        std::size_t pos = 0;
        while ((pos = url.find(key, pos)) != std::string::npos) {
            url.replace(pos, key.size(), value);
            pos += value.size();
        }
    };
    replace_all("{ticker}", ticker);
    replace_all("{start_epoch}", std::to_string(range.start.epoch_seconds()));
    replace_all("{end_epoch}", std::to_string(range.end.epoch_seconds()));
    return url;
}

std::string HttpFetchClient::fetch_history(const std::string& ticker, const DateRange& range) {
    std::string url = expand_url_template(template_, ticker, range);

    // Split scheme://host[:port] from the path+query part.
    std::size_t scheme_end = url.find("://");
    if (scheme_end == std::string::npos) {
        throw FetchError(FetchError::Kind::transport,
                         "fetch URL lacks a scheme: " + url + " for " +
                             range_label(ticker, range));
    }
    std::size_t path_start = url.find('/', scheme_end + 3);
    std::string origin = path_start == std::string::npos ? url : url.substr(0, path_start);
    std::string path = path_start == std::string::npos ? "/" : url.substr(path_start);

    httplib::Client client(origin);
    client.set_follow_location(true);
    auto res = client.Get(path);
    if (!res) {
        throw FetchError(FetchError::Kind::transport,
                         "transport failure fetching " + range_label(ticker, range) + ": " +
                             httplib::to_string(res.error()));
    }
    if (res->status == 404) {
        throw FetchError(FetchError::Kind::unknown_ticker,
                         "unknown ticker " + range_label(ticker, range) + " (HTTP 404)");
    }
    if (res->status != 200) {
        throw FetchError(FetchError::Kind::transport,
                         "HTTP " + std::to_string(res->status) + " fetching " +
                             range_label(ticker, range));
    }
    if (res->body.empty()) {
        throw FetchError(FetchError::Kind::empty_payload,
                         "empty payload for " + range_label(ticker, range));
    }
    return res->body;
}

}  // namespace sectorcast::marketdata
