#include "ecrep/rubric.hpp"

namespace ecrep {

std::string characteristic_key(Characteristic c) {
    switch (c) {
        case Characteristic::FinancialTakeaways: return "FinancialTakeaways";
        case Characteristic::FinancialContext: return "FinancialContext";
        case Characteristic::ManagementAttitudes: return "ManagementAttitudes";
        case Characteristic::ManagementExpectation: return "ManagementExpectation";
        case Characteristic::FutureEvents: return "FutureEvents";
    }
    return "FinancialTakeaways";
}

Characteristic parse_characteristic(const std::string& key) {
    for (Characteristic c : kAllCharacteristics) {
        if (characteristic_key(c) == key) return c;
    }
    throw MalformedPayload("unknown characteristic '" + key + "'");
}

std::string characteristic_prompt_name(Characteristic c) {
    switch (c) {
        case Characteristic::FinancialTakeaways: return "Financial takeaways";
        case Characteristic::FinancialContext: return "Financial context";
        case Characteristic::ManagementAttitudes: return "Management attitudes";
        case Characteristic::ManagementExpectation: return "Management expectation";
        case Characteristic::FutureEvents: return "Possible future events";
    }
    return "";
}

std::string characteristic_table_name(Characteristic c) {
    switch (c) {
        case Characteristic::FinancialTakeaways: return "Financial Takeaways";
        case Characteristic::FinancialContext: return "Financial Context";
        case Characteristic::ManagementAttitudes: return "Management Attitudes";
        case Characteristic::ManagementExpectation: return "Management Expectation";
        case Characteristic::FutureEvents: return "Future Events";
    }
    return "";
}

std::string characteristic_description(Characteristic c) {
    switch (c) {
        case Characteristic::FinancialTakeaways:
            return "The key financial details from the meeting (i.e., numerical statistics "
                   "relating to company performance for the quarter).";
        case Characteristic::FinancialContext:
            return "Any additional information (e.g., financial details from previous quarters) "
                   "that helps to contextualize the current financial performance.";
        case Characteristic::ManagementAttitudes:
            return "Information on how management (e.g., CEO, CFO, etc..) feels about the "
                   "company’s financial performance.";
        case Characteristic::ManagementExpectation:
            return "Details about how the company is expected to perform in the future/next "
                   "quarter.";
        case Characteristic::FutureEvents:
            return "Details surrounding any noteworthy events/scenarios that are likely to "
                   "occur in the future.";
    }
    return "";
}

CharacteristicLabel label_from_score(int score) {
    if (score < 1 || score > 4) {
        throw MalformedPayload("label score must be in 1..4, got " + std::to_string(score));
    }
    return static_cast<CharacteristicLabel>(score);
}

CharacteristicLabel label_from_prompt_number(int number) {
    if (number < 1 || number > 4) {
        throw MalformedPayload("prompt label number must be in 1..4, got " +
                               std::to_string(number));
    }
    return static_cast<CharacteristicLabel>(5 - number);
}

int label_prompt_number(CharacteristicLabel label) { return 5 - label_score(label); }

std::string label_key(CharacteristicLabel label) {
    switch (label) {
        case CharacteristicLabel::ReportedInsightful: return "ReportedInsightful";
        case CharacteristicLabel::ReportedReasonable: return "ReportedReasonable";
        case CharacteristicLabel::ReportedNotUseful: return "ReportedNotUseful";
        case CharacteristicLabel::NotReported: return "NotReported";
    }
    return "NotReported";
}

CharacteristicLabel parse_label(const std::string& key) {
    for (CharacteristicLabel label : kAllLabels) {
        if (label_key(label) == key) return label;
    }
    throw MalformedPayload("unknown characteristic label '" + key + "'");
}

std::string pair_side_name(PairSide side) {
    return side == PairSide::Generated ? "Generated" : "Reference";
}

PairSide parse_pair_side(const std::string& name) {
    if (name == "Generated") return PairSide::Generated;
    if (name == "Reference") return PairSide::Reference;
    throw MalformedPayload("unknown pair side '" + name + "'");
}

} // namespace ecrep
