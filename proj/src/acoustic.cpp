#include "ecrep/acoustic.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "ecrep/fsutil.hpp"
#include "ecrep/strings.hpp"

namespace ecrep {

using nlohmann::json;

namespace {

double number_field(const json& entry, const char* name) {
    if (!entry.contains(name)) {
        throw MalformedPayload(std::string("feature record missing field '") + name + "'");
    }
    const json& value = entry.at(name);
    if (!value.is_number()) {
        throw MalformedPayload(std::string("feature field '") + name + "' is not numeric");
    }
    return value.get<double>();
}

std::int64_t integer_field(const json& entry, const char* name) {
    if (!entry.contains(name)) {
        throw MalformedPayload(std::string("feature record missing field '") + name + "'");
    }
    const json& value = entry.at(name);
    if (!value.is_number_integer()) {
        throw MalformedPayload(std::string("feature field '") + name + "' is not an integer");
    }
    return value.get<std::int64_t>();
}

void check_unit_interval(const char* field, double value) {
    if (value < 0.0 || value > 1.0) {
        throw InvariantViolation(field, format_double(value) + " is outside [0, 1]");
    }
}

} // namespace

void validate_feature_record(const AcousticFeatureRecord& r, std::vector<std::string>* warnings) {
    if (r.utterance_index < 0) {
        throw InvariantViolation("utterance_index", "must be >= 0");
    }
    if (r.minimum_pitch > r.mean_pitch) {
        throw InvariantViolation("mean_pitch", "mean_pitch " + format_double(r.mean_pitch) +
                                                   " below minimum_pitch " +
                                                   format_double(r.minimum_pitch));
    }
    if (r.mean_pitch > r.maximum_pitch) {
        throw InvariantViolation("mean_pitch", "mean_pitch " + format_double(r.mean_pitch) +
                                                   " above maximum_pitch " +
                                                   format_double(r.maximum_pitch));
    }
    if (r.minimum_intensity > r.mean_intensity) {
        throw InvariantViolation("mean_intensity",
                                 "mean_intensity " + format_double(r.mean_intensity) +
                                     " below minimum_intensity " +
                                     format_double(r.minimum_intensity));
    }
    if (r.mean_intensity > r.maximum_intensity) {
        throw InvariantViolation("mean_intensity",
                                 "mean_intensity " + format_double(r.mean_intensity) +
                                     " above maximum_intensity " +
                                     format_double(r.maximum_intensity));
    }
    check_unit_interval("fraction_unvoiced", r.fraction_unvoiced);
    check_unit_interval("degree_of_voice_breaks", r.degree_of_voice_breaks);
    if (warnings != nullptr && r.num_periods != r.num_pulses - 1) {
        warnings->push_back("utterance " + std::to_string(r.utterance_index) + ": num_periods " +
                            std::to_string(r.num_periods) + " != num_pulses - 1 (" +
                            std::to_string(r.num_pulses - 1) + ")");
    }
}

AcousticFeatureRecord feature_record_from_json(const json& entry) {
    if (!entry.is_object()) {
        throw MalformedPayload("feature record is not an object");
    }
    AcousticFeatureRecord r;
    r.utterance_index = static_cast<int>(integer_field(entry, "utterance_index"));
    r.minimum_intensity = number_field(entry, "minimum_intensity");
    r.maximum_intensity = number_field(entry, "maximum_intensity");
    r.mean_intensity = number_field(entry, "mean_intensity");
    r.minimum_pitch = number_field(entry, "minimum_pitch");
    r.maximum_pitch = number_field(entry, "maximum_pitch");
    r.mean_pitch = number_field(entry, "mean_pitch");
    r.num_pulses = integer_field(entry, "num_pulses");
    r.num_periods = integer_field(entry, "num_periods");
    r.mean_periods = number_field(entry, "mean_periods");
    r.stddev_periods = number_field(entry, "stddev_periods");
    r.fraction_unvoiced = number_field(entry, "fraction_unvoiced");
    r.degree_of_voice_breaks = number_field(entry, "degree_of_voice_breaks");
    r.jitter_local = number_field(entry, "jitter_local");
    r.jitter_local_absolute = number_field(entry, "jitter_local_absolute");
    r.jitter_rap = number_field(entry, "jitter_rap");
    r.jitter_ppq5 = number_field(entry, "jitter_ppq5");
    r.jitter_ddp = number_field(entry, "jitter_ddp");
    r.shimmer_local = number_field(entry, "shimmer_local");
    r.shimmer_localdb = number_field(entry, "shimmer_localdb");
    r.shimmer_apq3 = number_field(entry, "shimmer_apq3");
    r.shimmer_aqpq5 = number_field(entry, "shimmer_aqpq5");
    r.shimmer_dda = number_field(entry, "shimmer_dda");
    r.hnr = number_field(entry, "hnr");
    return r;
}

std::string feature_block_json(const AcousticFeatureRecord& r) {
    std::string out = "{\n";
    auto number = [&out](const char* name, double value, bool last = false) {
        out += "    \"";
        out += name;
        out += "\": ";
        out += format_double(value);
        out += last ? "\n" : ",\n";
    };
    auto integer = [&out](const char* name, std::int64_t value) {
        out += "    \"";
        out += name;
        out += "\": ";
        out += std::to_string(value);
        out += ",\n";
    };
    number("minimum_intensity", r.minimum_intensity);
    number("maximum_intensity", r.maximum_intensity);
    number("mean_intensity", r.mean_intensity);
    number("minimum_pitch", r.minimum_pitch);
    number("maximum_pitch", r.maximum_pitch);
    number("mean_pitch", r.mean_pitch);
    integer("num_pulses", r.num_pulses);
    integer("num_periods", r.num_periods);
    number("mean_periods", r.mean_periods);
    number("stddev_periods", r.stddev_periods);
    number("fraction_unvoiced", r.fraction_unvoiced);
    number("degree_of_voice_breaks", r.degree_of_voice_breaks);
    number("jitter_local", r.jitter_local);
    number("jitter_local_absolute", r.jitter_local_absolute);
    number("jitter_rap", r.jitter_rap);
    number("jitter_ppq5", r.jitter_ppq5);
    number("jitter_ddp", r.jitter_ddp);
    number("shimmer_local", r.shimmer_local);
    number("shimmer_localdb", r.shimmer_localdb);
    number("shimmer_apq3", r.shimmer_apq3);
    number("shimmer_aqpq5", r.shimmer_aqpq5);
    number("shimmer_dda", r.shimmer_dda);
    number("hnr", r.hnr, /*last=*/true);
    out += "}";
    return out;
}

AcousticLoadResult load_acoustic_features(const std::filesystem::path& path) {
    json payload;
    try {
        payload = json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw MalformedPayload("cannot parse feature file " + path.string() + ": " + e.what());
    }
    if (!payload.is_array()) {
        throw MalformedPayload("feature file " + path.string() + " is not a JSON array");
    }
    AcousticLoadResult result;
    result.records.reserve(payload.size());
    for (const json& entry : payload) {
        AcousticFeatureRecord record = feature_record_from_json(entry);
        validate_feature_record(record, &result.warnings);
        result.records.push_back(record);
    }
    std::stable_sort(result.records.begin(), result.records.end(),
                     [](const AcousticFeatureRecord& a, const AcousticFeatureRecord& b) {
                         return a.utterance_index < b.utterance_index;
                     });
    return result;
}

} // namespace ecrep
