#pragma once

#include <chrono>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ecrep/errors.hpp"

namespace ecrep {

enum class AgentRole { Writer, Client, Analyst, Psychologist, Editor };

enum class MessageKind { TaskBrief, Draft, Feedback, Termination };

enum class Termination { ClientTerminate, RoundCap };

struct Message {
    int turn = 0; // 0-based, contiguous within a trace
    AgentRole sender = AgentRole::Client;
    MessageKind kind = MessageKind::Feedback;
    std::string text;

    bool operator==(const Message&) const = default;
};

/// The ordered message log of one generation run, including every draft
/// revision. Carries no timestamps, so equality is stable across replays.
struct ConversationTrace {
    std::string transcript_id;
    std::vector<Message> messages;
    int rounds_used = 0;
    std::optional<Termination> terminated_by; // unset while a run is in flight

    bool operator==(const ConversationTrace&) const = default;
};

struct Report {
    std::string text;
    std::string source_transcript_id;
    std::set<AgentRole> agent_config; // always contains Writer and Client
    std::chrono::system_clock::time_point generated_at{};
};

class NoDraft : public Error {
public:
    using Error::Error;
};

class InvalidTrace : public Error {
public:
    using Error::Error;
};

/// Text of the last Draft message; the run's current report. Throws NoDraft.
const std::string& latest_report(const ConversationTrace& trace);

/// Structural invariants of a completed or in-flight trace: contiguous turns,
/// TaskBrief from the Client first, Draft only from the Writer, Termination
/// only from the Client. Throws InvalidTrace.
void validate_trace(const ConversationTrace& trace);

std::string agent_role_name(AgentRole role);
AgentRole parse_agent_role(const std::string& name);
std::string message_kind_name(MessageKind kind);
MessageKind parse_message_kind(const std::string& name);
std::string termination_name(Termination t);
Termination parse_termination(const std::string& name);

} // namespace ecrep
