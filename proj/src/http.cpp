#include "ecrep/http.hpp"

#include <memory>

#include <httplib.h>

#include "ecrep/gateway.hpp"

namespace ecrep {

namespace {

std::unique_ptr<httplib::Client> make_client(const std::string& base_url, int timeout_seconds) {
#ifndef CPPHTTPLIB_OPENSSL_SUPPORT
    if (base_url.rfind("https://", 0) == 0) {
        throw TransportError("built without TLS support; cannot reach " + base_url);
    }
#endif
    auto client = std::make_unique<httplib::Client>(base_url);
    client->set_connection_timeout(timeout_seconds);
    client->set_read_timeout(timeout_seconds);
    client->set_write_timeout(timeout_seconds);
    return client;
}

std::string check_result(const httplib::Result& result, const std::string& what) {
    if (!result) {
        throw TransportError(what + ": " + httplib::to_string(result.error()));
    }
    const int status = result->status;
    const std::string& body = result->body;
    if (status == 401 || status == 403) {
        throw AuthError(what + ": HTTP " + std::to_string(status), body);
    }
    if (status == 429) {
        throw RateLimited(what + ": HTTP 429", body);
    }
    if (status >= 500) {
        throw TransportError(what + ": HTTP " + std::to_string(status), body);
    }
    if (status >= 400) {
        // 4xx other than the above: surface as a non-retryable policy error.
        throw ContentPolicyError(what + ": HTTP " + std::to_string(status), body);
    }
    return body;
}

} // namespace

std::string http_get(const std::string& base_url, const std::string& path,
                     int timeout_seconds) {
    auto client = make_client(base_url, timeout_seconds);
    return check_result(client->Get(path), "GET " + base_url + path);
}

std::string http_post_json(const std::string& base_url, const std::string& path,
                           const std::string& body,
                           const std::map<std::string, std::string>& headers,
                           int timeout_seconds) {
    auto client = make_client(base_url, timeout_seconds);
    httplib::Headers h(headers.begin(), headers.end());
    return check_result(client->Post(path, h, body, "application/json"),
                        "POST " + base_url + path);
}

} // namespace ecrep
