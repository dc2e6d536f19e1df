#include "ecrep/gateway.hpp"

#include <cctype>
#include <thread>

namespace ecrep {

void validate_request(const ChatRequest& request) {
    if (request.messages.empty()) {
        throw InvalidRequest("chat request has no messages");
    }
    if (request.model_id.empty()) {
        throw InvalidRequest("chat request has no model_id");
    }
    if (request.temperature < 0.0) {
        throw InvalidRequest("temperature must be >= 0");
    }
    if (request.max_output_tokens <= 0) {
        throw InvalidRequest("max_output_tokens must be > 0");
    }
}

std::int64_t estimate_token_count(const std::string& text) {
    std::int64_t words = 0;
    bool in_word = false;
    for (char c : text) {
        const bool space = std::isspace(static_cast<unsigned char>(c)) != 0;
        if (!space && !in_word) ++words;
        in_word = !space;
    }
    return words * 4 / 3;
}

ChatResponse complete(ChatBackend& backend, const ChatRequest& request,
                      const RetryPolicy& retry) {
    validate_request(request);

    auto delay = retry.base_delay;
    for (int attempt = 0;; ++attempt) {
        try {
            return backend.attempt(request);
        } catch (const AuthError&) {
            throw;
        } catch (const ContentPolicyError&) {
            throw;
        } catch (const ScriptExhausted&) {
            throw;
        } catch (const ProviderError&) {
            // TransportError or RateLimited: transient, retry within budget.
            if (attempt >= retry.budget) throw;
        }
        if (delay.count() > 0) {
            std::this_thread::sleep_for(delay);
        }
        delay = std::min(delay * 2, retry.max_delay);
    }
}

} // namespace ecrep
