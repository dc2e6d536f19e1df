#pragma once

#include <compare>
#include <string>

#include "ecrep/errors.hpp"

namespace ecrep {

class BadDate : public Error {
public:
    using Error::Error;
};

/// A plain calendar date. No time zone, no time of day; earnings data and
/// call dates are day-granular.
struct CalendarDate {
    int year = 0;
    int month = 1;
    int day = 1;

    auto operator<=>(const CalendarDate&) const = default;

    /// Parses strict ISO-8601 "YYYY-MM-DD". Throws BadDate otherwise.
    static CalendarDate parse(const std::string& iso);

    std::string to_string() const; // "YYYY-MM-DD"
};

/// A company fiscal quarter identified by calendar year and quarter number.
struct FiscalQuarter {
    int year = 0;
    int quarter = 1; // 1..4

    auto operator<=>(const FiscalQuarter&) const = default;

    /// The immediately preceding quarter; Q1 rolls over to the prior year's Q4.
    FiscalQuarter previous() const;

    /// The calendar quarter a date falls in (month 1-3 -> Q1, ... 10-12 -> Q4).
    static FiscalQuarter of(const CalendarDate& date);

    std::string to_string() const; // "2021Q4"
};

} // namespace ecrep
