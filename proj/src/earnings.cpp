#include "ecrep/earnings.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdlib>

#include <nlohmann/json.hpp>

#include "ecrep/fsutil.hpp"
#include "ecrep/http.hpp"

namespace ecrep {

using nlohmann::json;

Decimal Decimal::parse(const std::string& text) {
    const std::string_view sv = text;
    std::size_t pos = 0;
    bool negative = false;
    if (pos < sv.size() && (sv[pos] == '+' || sv[pos] == '-')) {
        negative = sv[pos] == '-';
        ++pos;
    }
    std::int64_t units = 0;
    int scale = 0;
    int digits = 0;
    bool seen_point = false;
    for (; pos < sv.size(); ++pos) {
        const char c = sv[pos];
        if (c == '.') {
            if (seen_point) throw MalformedPayload("invalid decimal '" + text + "'");
            seen_point = true;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw MalformedPayload("invalid decimal '" + text + "'");
        }
        if (++digits > 18) {
            throw MalformedPayload("decimal '" + text + "' exceeds 18 digits");
        }
        units = units * 10 + (c - '0');
        if (seen_point) ++scale;
    }
    if (digits == 0) {
        throw MalformedPayload("invalid decimal '" + text + "'");
    }
    Decimal d;
    d.units = negative ? -units : units;
    d.scale = scale;
    d.raw = text;
    return d;
}

double Decimal::to_double() const {
    double value = static_cast<double>(units);
    for (int i = 0; i < scale; ++i) value /= 10.0;
    return value;
}

namespace {

__int128 scaled_units(const Decimal& d, int target_scale) {
    __int128 v = d.units;
    for (int i = d.scale; i < target_scale; ++i) v *= 10;
    return v;
}

} // namespace

bool decimal_abs_diff_leq(const Decimal& a, const Decimal& b, const Decimal& tol) {
    const int scale = std::max({a.scale, b.scale, tol.scale});
    __int128 diff = scaled_units(a, scale) - scaled_units(b, scale);
    if (diff < 0) diff = -diff;
    __int128 limit = scaled_units(tol, scale);
    if (limit < 0) limit = -limit;
    return diff <= limit;
}

void validate_earnings_record(const EarningsRecord& record) {
    if (record.reported_date < record.fiscal_date_ending) {
        throw InvariantViolation("reportedDate",
                                 record.reported_date.to_string() + " precedes fiscalDateEnding " +
                                     record.fiscal_date_ending.to_string());
    }
    // surprise must equal reportedEPS - estimatedEPS within 0.005
    const int scale = std::max(record.reported_eps.scale, record.estimated_eps.scale);
    Decimal diff;
    diff.scale = scale;
    diff.units = static_cast<std::int64_t>(scaled_units(record.reported_eps, scale) -
                                           scaled_units(record.estimated_eps, scale));
    const Decimal tol = Decimal::parse("0.005");
    if (!decimal_abs_diff_leq(record.surprise, diff, tol)) {
        throw InvariantViolation("surprise",
                                 "surprise " + record.surprise.raw + " != reportedEPS " +
                                     record.reported_eps.raw + " - estimatedEPS " +
                                     record.estimated_eps.raw);
    }
}

namespace {

std::string field_as_string(const json& record, const char* name) {
    if (!record.contains(name)) {
        throw MalformedPayload(std::string("earnings record missing field '") + name + "'");
    }
    const json& value = record.at(name);
    if (value.is_string()) return value.get<std::string>();
    if (value.is_number()) return value.dump();
    throw MalformedPayload(std::string("earnings field '") + name + "' is not a string");
}

EarningsRecord record_from_json(const json& entry) {
    EarningsRecord record;
    try {
        record.fiscal_date_ending = CalendarDate::parse(field_as_string(entry, "fiscalDateEnding"));
        record.reported_date = CalendarDate::parse(field_as_string(entry, "reportedDate"));
    } catch (const BadDate& e) {
        throw MalformedPayload(e.what());
    }
    record.reported_eps = Decimal::parse(field_as_string(entry, "reportedEPS"));
    record.estimated_eps = Decimal::parse(field_as_string(entry, "estimatedEPS"));
    record.surprise = Decimal::parse(field_as_string(entry, "surprise"));
    record.surprise_percentage = Decimal::parse(field_as_string(entry, "surprisePercentage"));
    validate_earnings_record(record);
    return record;
}

} // namespace

std::vector<EarningsRecord> parse_quarterly_earnings(const json& payload) {
    const json* entries = nullptr;
    if (payload.is_array()) {
        entries = &payload;
    } else if (payload.is_object() && payload.contains("quarterlyEarnings")) {
        entries = &payload.at("quarterlyEarnings");
        if (!entries->is_array()) {
            throw MalformedPayload("'quarterlyEarnings' is not an array");
        }
    } else {
        throw MalformedPayload("expected a quarterly earnings array");
    }

    std::vector<EarningsRecord> records;
    records.reserve(entries->size());
    for (const json& entry : *entries) {
        records.push_back(record_from_json(entry));
    }
    std::stable_sort(records.begin(), records.end(),
                     [](const EarningsRecord& a, const EarningsRecord& b) {
                         return a.fiscal_date_ending < b.fiscal_date_ending;
                     });
    return records;
}

std::vector<EarningsRecord> load_earnings_fixture(const std::filesystem::path& path) {
    json payload;
    try {
        payload = json::parse(read_file(path));
    } catch (const json::parse_error& e) {
        throw MalformedPayload("cannot parse earnings fixture " + path.string() + ": " + e.what());
    }
    return parse_quarterly_earnings(payload);
}

std::vector<EarningsRecord> EarningsClient::fetch(const std::string& symbol) {
    if (symbol.empty()) {
        throw Error("earnings fetch requires a non-empty symbol");
    }

    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm utc{};
    gmtime_r(&t, &utc);
    char day[16];
    std::snprintf(day, sizeof day, "%04d-%02d-%02d", utc.tm_year + 1900, utc.tm_mon + 1,
                  utc.tm_mday);

    const std::filesystem::path cache_file = config_.cache_dir / (symbol + "-" + day + ".json");
    std::string body;
    if (std::filesystem::exists(cache_file)) {
        body = read_file(cache_file);
    } else {
        const char* key = std::getenv(config_.api_key_env.c_str());
        if (key == nullptr || *key == '\0') {
            throw Error("environment variable " + config_.api_key_env +
                        " is not set; required for remote earnings fetches");
        }
        body = http_get(config_.base_url,
                        "/query?function=EARNINGS&symbol=" + symbol + "&apikey=" + key,
                        config_.timeout_seconds);
        write_file_atomic(cache_file, body);
    }

    json payload;
    try {
        payload = json::parse(body);
    } catch (const json::parse_error& e) {
        throw MalformedPayload("cannot parse earnings payload for " + symbol + ": " + e.what());
    }
    if (payload.is_object()) {
        if (payload.contains("Error Message")) {
            throw SymbolNotFound("provider reported an error for symbol '" + symbol +
                                 "': " + payload.at("Error Message").dump());
        }
        // The provider signals quota exhaustion with a "Note"/"Information"
        // body instead of an HTTP error.
        if (!payload.contains("quarterlyEarnings") &&
            (payload.contains("Note") || payload.contains("Information"))) {
            throw QuotaExceeded("provider quota exceeded for symbol '" + symbol + "'");
        }
    }
    return parse_quarterly_earnings(payload);
}

const EarningsRecord& previous_quarter_record(const std::vector<EarningsRecord>& records,
                                              FiscalQuarter call_quarter) {
    const FiscalQuarter want = call_quarter.previous();
    const EarningsRecord* found = nullptr;
    for (const EarningsRecord& record : records) {
        if (FiscalQuarter::of(record.fiscal_date_ending) == want) {
            found = &record; // records are sorted ascending, so the latest match wins
        }
    }
    if (found == nullptr) {
        throw NoPriorQuarter("no earnings record ends in " + want.to_string() +
                             ", the quarter before " + call_quarter.to_string());
    }
    return *found;
}

} // namespace ecrep
