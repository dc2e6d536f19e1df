#include "ecrep/scripted.hpp"

namespace ecrep {

ChatResponse ScriptedBackend::attempt(const ChatRequest& request) {
    (void)request;
    std::lock_guard<std::mutex> lock(mutex_);
    if (cursor_ >= queue_.size()) {
        throw ScriptExhausted("scripted backend exhausted after " +
                              std::to_string(queue_.size()) + " responses");
    }
    ChatResponse response;
    response.text = queue_[cursor_++];
    response.token_counts.prompt = 0;
    response.token_counts.completion = estimate_token_count(response.text);
    response.token_counts.estimated = true;
    return response;
}

std::size_t ScriptedBackend::cursor() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return cursor_;
}

std::size_t ScriptedBackend::size() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return queue_.size();
}

ChatResponse RecordingBackend::attempt(const ChatRequest& request) {
    ChatResponse response = inner_.attempt(request);
    std::lock_guard<std::mutex> lock(mutex_);
    session_.push_back({request, response});
    return response;
}

std::vector<SessionEntry> RecordingBackend::session() const {
    std::lock_guard<std::mutex> lock(mutex_);
    return session_;
}

ScriptedBackend record_replay(const std::vector<SessionEntry>& session) {
    if (session.empty()) {
        throw Error("cannot build a replay backend from an empty session");
    }
    std::vector<std::string> queue;
    queue.reserve(session.size());
    for (const SessionEntry& entry : session) {
        queue.push_back(entry.response.text);
    }
    return ScriptedBackend(std::move(queue));
}

} // namespace ecrep
