#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace anaphora::text {

std::string_view trim(std::string_view s);
std::vector<std::string_view> split(std::string_view s, char sep);
// Splits on any run of spaces, tabs or commas.
std::vector<std::string> split_names(std::string_view s);
bool starts_with_word(std::string_view line, std::string_view word);

}  // namespace anaphora::text
