#pragma once

#include <map>
#include <string>

namespace ecrep {

/// Thin HTTP helpers over cpp-httplib with this library's error taxonomy:
/// connection failures and 5xx map to TransportError, 429 to RateLimited,
/// 401/403 to AuthError. Scheme http:// or https:// is taken from base_url.

std::string http_get(const std::string& base_url, const std::string& path,
                     int timeout_seconds);

std::string http_post_json(const std::string& base_url, const std::string& path,
                           const std::string& body,
                           const std::map<std::string, std::string>& headers,
                           int timeout_seconds);

} // namespace ecrep
