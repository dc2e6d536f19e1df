#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ecrep {

/// Shortest decimal form that round-trips the exact double value.
std::string format_double(double value);

std::string trim(std::string_view text);
std::string to_lower(std::string_view text);
std::vector<std::string> split(std::string_view text, char sep);

/// Replaces every occurrence of `from` in `text` with `to`.
std::string replace_all(std::string text, std::string_view from, std::string_view to);

} // namespace ecrep
