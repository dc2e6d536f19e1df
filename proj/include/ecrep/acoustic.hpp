#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ecrep/errors.hpp"

namespace ecrep {

/// Per-utterance phonetic statistics derived from call audio (PRAAT-style).
/// Field names and order follow the provider schema; consumed as precomputed
/// records, never extracted here.
struct AcousticFeatureRecord {
    int utterance_index = 0;

    double minimum_intensity = 0;
    double maximum_intensity = 0;
    double mean_intensity = 0;
    double minimum_pitch = 0;
    double maximum_pitch = 0;
    double mean_pitch = 0;
    std::int64_t num_pulses = 0;
    std::int64_t num_periods = 0;
    double mean_periods = 0;
    double stddev_periods = 0;
    double fraction_unvoiced = 0;
    double degree_of_voice_breaks = 0;
    double jitter_local = 0;
    double jitter_local_absolute = 0;
    double jitter_rap = 0;
    double jitter_ppq5 = 0;
    double jitter_ddp = 0;
    double shimmer_local = 0;
    double shimmer_localdb = 0;
    double shimmer_apq3 = 0;
    double shimmer_aqpq5 = 0;
    double shimmer_dda = 0;
    double hnr = 0;

    bool operator==(const AcousticFeatureRecord&) const = default;
};

struct AcousticLoadResult {
    std::vector<AcousticFeatureRecord> records; // sorted by utterance_index
    std::vector<std::string> warnings;          // soft checks, e.g. pulse/period count drift
};

/// Range and ordering checks; throws InvariantViolation naming the field.
/// num_periods == num_pulses - 1 is a warning, not an error.
void validate_feature_record(const AcousticFeatureRecord& record,
                             std::vector<std::string>* warnings = nullptr);

AcousticFeatureRecord feature_record_from_json(const nlohmann::json& entry);

/// Serializes the 23 schema fields (without utterance_index) as an indented
/// JSON block in schema order, floats printed at full precision.
std::string feature_block_json(const AcousticFeatureRecord& record);

/// Loads a JSON array of feature records, validating every invariant.
AcousticLoadResult load_acoustic_features(const std::filesystem::path& path);

} // namespace ecrep
