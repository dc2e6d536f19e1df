#include "ecrep/transcript.hpp"

namespace ecrep {

const Transcript& validate_transcript(const Transcript& raw) {
    if (raw.utterances.empty()) {
        throw EmptyTranscript("transcript has no utterances");
    }
    if (raw.fiscal.quarter < 1 || raw.fiscal.quarter > 4) {
        throw BadQuarter("quarter must be in 1..4, got " + std::to_string(raw.fiscal.quarter));
    }
    if (raw.company_symbol.empty()) {
        throw InvalidTranscript("company_symbol is empty");
    }
    for (std::size_t i = 0; i < raw.utterances.size(); ++i) {
        const Utterance& u = raw.utterances[i];
        if (u.index != static_cast<int>(i)) {
            throw NonContiguousIndices("utterance at position " + std::to_string(i) +
                                       " has index " + std::to_string(u.index));
        }
        if (u.text.empty()) {
            throw InvalidTranscript("utterance " + std::to_string(i) + " has empty text");
        }
        if (u.speaker.name.empty()) {
            throw InvalidTranscript("utterance " + std::to_string(i) + " has an unnamed speaker");
        }
    }
    return raw;
}

std::vector<Utterance> management_utterances(const Transcript& t, bool include_prepared) {
    std::vector<Utterance> out;
    for (const Utterance& u : t.utterances) {
        if (u.speaker.role != SpeakerRole::Management) continue;
        if (!include_prepared && u.section != Section::QA) continue;
        out.push_back(u);
    }
    return out;
}

std::string speaker_role_name(SpeakerRole role) {
    switch (role) {
        case SpeakerRole::Management: return "Management";
        case SpeakerRole::Analyst: return "Analyst";
        case SpeakerRole::Operator: return "Operator";
        case SpeakerRole::Other: return "Other";
    }
    return "Other";
}

SpeakerRole parse_speaker_role(const std::string& name) {
    if (name == "Management") return SpeakerRole::Management;
    if (name == "Analyst") return SpeakerRole::Analyst;
    if (name == "Operator") return SpeakerRole::Operator;
    if (name == "Other") return SpeakerRole::Other;
    throw MalformedPayload("unknown speaker role '" + name + "'");
}

std::string section_name(Section section) {
    return section == Section::Prepared ? "Prepared" : "QA";
}

Section parse_section(const std::string& name) {
    if (name == "Prepared") return Section::Prepared;
    if (name == "QA") return Section::QA;
    throw MalformedPayload("unknown section '" + name + "'");
}

} // namespace ecrep
