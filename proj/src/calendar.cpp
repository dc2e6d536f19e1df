#include "ecrep/calendar.hpp"

#include <cctype>
#include <cstdio>

namespace ecrep {

namespace {

bool all_digits(const std::string& s, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

} // namespace

CalendarDate CalendarDate::parse(const std::string& iso) {
    if (iso.size() != 10 || iso[4] != '-' || iso[7] != '-' ||
        !all_digits(iso, 0, 4) || !all_digits(iso, 5, 7) || !all_digits(iso, 8, 10)) {
        throw BadDate("expected ISO-8601 date YYYY-MM-DD, got '" + iso + "'");
    }
    CalendarDate d;
    d.year = std::stoi(iso.substr(0, 4));
    d.month = std::stoi(iso.substr(5, 2));
    d.day = std::stoi(iso.substr(8, 2));
    if (d.month < 1 || d.month > 12 || d.day < 1 || d.day > 31) {
        throw BadDate("out-of-range month or day in '" + iso + "'");
    }
    return d;
}

std::string CalendarDate::to_string() const {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", year, month, day);
    return buf;
}

FiscalQuarter FiscalQuarter::previous() const {
    if (quarter == 1) return {year - 1, 4};
    return {year, quarter - 1};
}

FiscalQuarter FiscalQuarter::of(const CalendarDate& date) {
    return {date.year, (date.month - 1) / 3 + 1};
}

std::string FiscalQuarter::to_string() const {
    return std::to_string(year) + "Q" + std::to_string(quarter);
}

} // namespace ecrep
