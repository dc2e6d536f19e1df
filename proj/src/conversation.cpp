#include "ecrep/conversation.hpp"

namespace ecrep {

const std::string& latest_report(const ConversationTrace& trace) {
    for (auto it = trace.messages.rbegin(); it != trace.messages.rend(); ++it) {
        if (it->kind == MessageKind::Draft) return it->text;
    }
    throw NoDraft("trace '" + trace.transcript_id + "' contains no Draft message");
}

void validate_trace(const ConversationTrace& trace) {
    if (trace.rounds_used < 0) {
        throw InvalidTrace("rounds_used is negative");
    }
    for (std::size_t i = 0; i < trace.messages.size(); ++i) {
        const Message& m = trace.messages[i];
        if (m.turn != static_cast<int>(i)) {
            throw InvalidTrace("message at position " + std::to_string(i) +
                               " has turn " + std::to_string(m.turn));
        }
        if (m.kind == MessageKind::Draft && m.sender != AgentRole::Writer) {
            throw InvalidTrace("Draft at turn " + std::to_string(m.turn) +
                               " not sent by the Writer");
        }
        if (m.kind == MessageKind::Termination && m.sender != AgentRole::Client) {
            throw InvalidTrace("Termination at turn " + std::to_string(m.turn) +
                               " not sent by the Client");
        }
    }
    if (!trace.messages.empty()) {
        const Message& first = trace.messages.front();
        if (first.kind != MessageKind::TaskBrief || first.sender != AgentRole::Client) {
            throw InvalidTrace("first message must be the Client's TaskBrief");
        }
    }
}

std::string agent_role_name(AgentRole role) {
    switch (role) {
        case AgentRole::Writer: return "Writer";
        case AgentRole::Client: return "Client";
        case AgentRole::Analyst: return "Analyst";
        case AgentRole::Psychologist: return "Psychologist";
        case AgentRole::Editor: return "Editor";
    }
    return "Client";
}

AgentRole parse_agent_role(const std::string& name) {
    if (name == "Writer") return AgentRole::Writer;
    if (name == "Client") return AgentRole::Client;
    if (name == "Analyst") return AgentRole::Analyst;
    if (name == "Psychologist") return AgentRole::Psychologist;
    if (name == "Editor") return AgentRole::Editor;
    throw MalformedPayload("unknown agent role '" + name + "'");
}

std::string message_kind_name(MessageKind kind) {
    switch (kind) {
        case MessageKind::TaskBrief: return "TaskBrief";
        case MessageKind::Draft: return "Draft";
        case MessageKind::Feedback: return "Feedback";
        case MessageKind::Termination: return "Termination";
    }
    return "Feedback";
}

MessageKind parse_message_kind(const std::string& name) {
    if (name == "TaskBrief") return MessageKind::TaskBrief;
    if (name == "Draft") return MessageKind::Draft;
    if (name == "Feedback") return MessageKind::Feedback;
    if (name == "Termination") return MessageKind::Termination;
    throw MalformedPayload("unknown message kind '" + name + "'");
}

std::string termination_name(Termination t) {
    return t == Termination::ClientTerminate ? "ClientTerminate" : "RoundCap";
}

Termination parse_termination(const std::string& name) {
    if (name == "ClientTerminate") return Termination::ClientTerminate;
    if (name == "RoundCap") return Termination::RoundCap;
    throw MalformedPayload("unknown termination '" + name + "'");
}

} // namespace ecrep
