#pragma once

#include <array>
#include <string>

#include "ecrep/errors.hpp"

namespace ecrep {

/// The five report characteristics scored by human and LLM judges.
enum class Characteristic {
    FinancialTakeaways,
    FinancialContext,
    ManagementAttitudes,
    ManagementExpectation,
    FutureEvents,
};

constexpr std::array<Characteristic, 5> kAllCharacteristics = {
    Characteristic::FinancialTakeaways,   Characteristic::FinancialContext,
    Characteristic::ManagementAttitudes,  Characteristic::ManagementExpectation,
    Characteristic::FutureEvents,
};

/// Stable identifier used in JSON records.
std::string characteristic_key(Characteristic c);
Characteristic parse_characteristic(const std::string& key);

/// Name used as {criterion} in the judge prompt.
std::string characteristic_prompt_name(Characteristic c);

/// Name used in correlation table rows.
std::string characteristic_table_name(Characteristic c);

/// Rubric description substituted as {description} in the judge prompt.
std::string characteristic_description(Characteristic c);

/// Judgment labels. Enum values double as the 1-4 numeric scores, 4 being
/// the most positive. The judge prompt numbers the labels in the opposite
/// direction (1 = insightful), so conversions from prompt numbers must go
/// through label_from_prompt_number.
enum class CharacteristicLabel {
    NotReported = 1,
    ReportedNotUseful = 2,
    ReportedReasonable = 3,
    ReportedInsightful = 4,
};

constexpr std::array<CharacteristicLabel, 4> kAllLabels = {
    CharacteristicLabel::NotReported,
    CharacteristicLabel::ReportedNotUseful,
    CharacteristicLabel::ReportedReasonable,
    CharacteristicLabel::ReportedInsightful,
};

constexpr int label_score(CharacteristicLabel label) { return static_cast<int>(label); }

CharacteristicLabel label_from_score(int score); // 1..4

/// Maps the judge prompt's label numbering (1 = Reported and insightful ...
/// 4 = Not reported) onto the score scale.
CharacteristicLabel label_from_prompt_number(int number); // 1..4
int label_prompt_number(CharacteristicLabel label);

std::string label_key(CharacteristicLabel label);
CharacteristicLabel parse_label(const std::string& key);

/// One (characteristic, label) judgment from a judge, human or model.
struct CharacteristicJudgment {
    std::string report_id;
    Characteristic characteristic = Characteristic::FinancialTakeaways;
    CharacteristicLabel label = CharacteristicLabel::NotReported;
    std::string judge; // human id or model id

    bool operator==(const CharacteristicJudgment&) const = default;
};

/// Which of the two candidate reports a slot refers to in a preference pair.
enum class PairSide { Generated, Reference };

std::string pair_side_name(PairSide side);
PairSide parse_pair_side(const std::string& name);

/// One pairwise preference judgment under a specific ordering.
struct PreferenceOutcome {
    std::string pair_id;
    std::string judge;
    PairSide first_shown = PairSide::Generated; // what REPORT 1 was
    PairSide choice = PairSide::Generated;
    std::string rationale;

    bool operator==(const PreferenceOutcome&) const = default;
};

} // namespace ecrep
