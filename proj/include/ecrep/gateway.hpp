#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "ecrep/errors.hpp"

namespace ecrep {

enum class ChatRole { System, User, Assistant };

struct ChatMessage {
    ChatRole role = ChatRole::User;
    std::string text;

    bool operator==(const ChatMessage&) const = default;
};

struct ChatRequest {
    std::string system_prompt;
    std::vector<ChatMessage> messages;
    std::string model_id;
    double temperature = 0.0;
    int max_output_tokens = 4096;

    bool operator==(const ChatRequest&) const = default;
};

struct TokenCounts {
    std::int64_t prompt = 0;
    std::int64_t completion = 0;
    bool estimated = false; // true when derived from word counts, not provider metadata

    bool operator==(const TokenCounts&) const = default;
};

struct ChatResponse {
    std::string text; // may legitimately be empty if the provider returned empty content
    std::chrono::milliseconds provider_latency{0};
    TokenCounts token_counts;

    bool operator==(const ChatResponse&) const = default;
};

class InvalidRequest : public Error {
public:
    using Error::Error;
};

/// Provider errors keep the raw provider payload around for diagnostics;
/// callers branch on the type only.
class ProviderError : public Error {
public:
    ProviderError(const std::string& message, std::string payload = {})
        : Error(message), payload_(std::move(payload)) {}

    const std::string& payload() const noexcept { return payload_; }

private:
    std::string payload_;
};

class AuthError : public ProviderError {
public:
    using ProviderError::ProviderError;
};

class ContentPolicyError : public ProviderError {
public:
    using ProviderError::ProviderError;
};

class RateLimited : public ProviderError {
public:
    using ProviderError::ProviderError;
};

class TransportError : public ProviderError {
public:
    using ProviderError::ProviderError;
};

/// A scripted backend ran past the end of its response queue.
class ScriptExhausted : public Error {
public:
    using Error::Error;
};

/// One chat-completion provider (remote endpoint or scripted queue).
/// attempt() performs a single call; retry policy lives in complete() so
/// every backend gets the same treatment. Implementations must tolerate
/// concurrent callers.
class ChatBackend {
public:
    virtual ~ChatBackend() = default;
    virtual ChatResponse attempt(const ChatRequest& request) = 0;
};

struct RetryPolicy {
    int budget = 2; // retries after the first attempt; total attempts = budget + 1
    std::chrono::milliseconds base_delay{200};
    std::chrono::milliseconds max_delay{5000};
};

/// Validates the request and calls the backend, retrying transient transport
/// failures (TransportError, RateLimited) with exponential backoff.
/// AuthError, ContentPolicyError and ScriptExhausted are never retried.
ChatResponse complete(ChatBackend& backend, const ChatRequest& request,
                      const RetryPolicy& retry = {});

void validate_request(const ChatRequest& request);

/// Whitespace word count scaled by 4/3, the fallback when the provider
/// reports no usage metadata.
std::int64_t estimate_token_count(const std::string& text);

} // namespace ecrep
