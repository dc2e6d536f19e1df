#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "ecrep/calendar.hpp"
#include "ecrep/errors.hpp"

namespace ecrep {

/// Exact decimal as shipped by the earnings provider: EPS figures are quoted
/// strings with two decimal places, and the surprise-consistency check must
/// hold exactly, so they are never parsed into binary floats. Keeps the
/// original lexical form for byte-faithful re-serialization.
struct Decimal {
    std::int64_t units = 0; // value = units / 10^scale
    int scale = 0;
    std::string raw;

    static Decimal parse(const std::string& text); // throws MalformedPayload
    double to_double() const;
    const std::string& str() const { return raw; }

    bool operator==(const Decimal&) const = default;
};

/// |a - b| <= tol, computed exactly over aligned scales.
bool decimal_abs_diff_leq(const Decimal& a, const Decimal& b, const Decimal& tol);

/// One quarter's reported/estimated EPS and surprise, field-for-field the
/// provider's quarterly-earnings schema.
struct EarningsRecord {
    CalendarDate fiscal_date_ending;
    CalendarDate reported_date;
    Decimal reported_eps;
    Decimal estimated_eps;
    Decimal surprise;
    Decimal surprise_percentage;

    bool operator==(const EarningsRecord&) const = default;
};

class SymbolNotFound : public Error {
public:
    using Error::Error;
};

class QuotaExceeded : public Error {
public:
    using Error::Error;
};

class NoPriorQuarter : public Error {
public:
    using Error::Error;
};

/// Validates record invariants: reportedDate >= fiscalDateEnding and
/// surprise = reportedEPS - estimatedEPS within 0.005 (source data is quoted
/// to 2 decimals). Throws InvariantViolation naming the offending field.
void validate_earnings_record(const EarningsRecord& record);

/// Parses a provider payload: either {"quarterlyEarnings": [...]} or a bare
/// array of records. Returns records sorted by fiscalDateEnding ascending.
std::vector<EarningsRecord> parse_quarterly_earnings(const nlohmann::json& payload);

/// Offline fixture with the identical payload shape as the remote endpoint.
std::vector<EarningsRecord> load_earnings_fixture(const std::filesystem::path& path);

/// Remote quarterly-earnings client with a per-(symbol, day) disk cache so
/// repeated runs are offline-stable.
class EarningsClient {
public:
    struct Config {
        std::string base_url = "https://www.alphavantage.co";
        std::string api_key_env = "ALPHAVANTAGE_API_KEY";
        std::filesystem::path cache_dir = ".ecrep-cache";
        int timeout_seconds = 30;
    };

    explicit EarningsClient(Config config) : config_(std::move(config)) {}

    std::vector<EarningsRecord> fetch(const std::string& symbol);

private:
    Config config_;
};

/// The record whose fiscalDateEnding falls in the calendar quarter
/// immediately before call_quarter (Q1 rolls over to the prior year's Q4).
/// Expects records sorted ascending; with several candidates the latest wins.
const EarningsRecord& previous_quarter_record(const std::vector<EarningsRecord>& records,
                                              FiscalQuarter call_quarter);

} // namespace ecrep
