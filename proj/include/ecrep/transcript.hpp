#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ecrep/calendar.hpp"
#include "ecrep/errors.hpp"

namespace ecrep {

enum class SpeakerRole { Management, Analyst, Operator, Other };

/// Transcript section: prepared remarks vs. the Q&A session that follows.
enum class Section { Prepared, QA };

struct Speaker {
    std::string name;
    SpeakerRole role = SpeakerRole::Other;
    std::optional<std::string> title; // e.g. "CEO"

    bool operator==(const Speaker&) const = default;
};

struct Utterance {
    int index = 0; // 0-based, contiguous within a transcript
    Speaker speaker;
    Section section = Section::Prepared;
    std::string text;

    bool operator==(const Utterance&) const = default;
};

/// One earnings call, speaker-tagged. Roles come tagged in the input file;
/// nothing here tries to infer who is management.
struct Transcript {
    std::string company_symbol;
    FiscalQuarter fiscal;
    CalendarDate call_date;
    std::vector<Utterance> utterances;

    /// Canonical identifier used for trace/report file names: "ACME-2021Q3".
    std::string id() const { return company_symbol + "-" + fiscal.to_string(); }

    bool operator==(const Transcript&) const = default;
};

class EmptyTranscript : public Error {
public:
    using Error::Error;
};

class BadQuarter : public Error {
public:
    using Error::Error;
};

class NonContiguousIndices : public Error {
public:
    using Error::Error;
};

/// Any remaining structural invariant violation (empty symbol, empty
/// utterance text, unnamed speaker).
class InvalidTranscript : public Error {
public:
    using Error::Error;
};

/// Checks every Transcript invariant and returns the input unchanged on
/// success. Throws EmptyTranscript, BadQuarter, NonContiguousIndices or
/// InvalidTranscript.
const Transcript& validate_transcript(const Transcript& raw);

/// Utterances spoken by management, in transcript order. By default limited
/// to the Q&A session, which is the scope of the acoustic feature data;
/// pass include_prepared to widen to the whole call.
std::vector<Utterance> management_utterances(const Transcript& t,
                                             bool include_prepared = false);

std::string speaker_role_name(SpeakerRole role);
SpeakerRole parse_speaker_role(const std::string& name);
std::string section_name(Section section);
Section parse_section(const std::string& name);

} // namespace ecrep
