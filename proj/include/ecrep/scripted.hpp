#pragma once

#include <mutex>
#include <string>
#include <vector>

#include "ecrep/gateway.hpp"

namespace ecrep {

/// Deterministic offline backend: replies with canned texts in queue order,
/// regardless of the request. The cursor is mutex-guarded so concurrent
/// callers observe a consistent consumption order.
class ScriptedBackend : public ChatBackend {
public:
    ScriptedBackend() = default;
    explicit ScriptedBackend(std::vector<std::string> queue) : queue_(std::move(queue)) {}

    ChatResponse attempt(const ChatRequest& request) override;

    std::size_t cursor() const;
    std::size_t size() const;

private:
    std::vector<std::string> queue_;
    std::size_t cursor_ = 0;
    mutable std::mutex mutex_;
};

/// One recorded exchange of a live session.
struct SessionEntry {
    ChatRequest request;
    ChatResponse response;

    bool operator==(const SessionEntry&) const = default;
};

/// Decorator that captures every (request, response) pair flowing through
/// the wrapped backend, for later replay.
class RecordingBackend : public ChatBackend {
public:
    explicit RecordingBackend(ChatBackend& inner) : inner_(inner) {}

    ChatResponse attempt(const ChatRequest& request) override;

    std::vector<SessionEntry> session() const;

private:
    ChatBackend& inner_;
    std::vector<SessionEntry> session_;
    mutable std::mutex mutex_;
};

/// Builds a scripted backend that replays a recorded session's responses in
/// order. Throws Error on an empty session.
ScriptedBackend record_replay(const std::vector<SessionEntry>& session);

} // namespace ecrep
