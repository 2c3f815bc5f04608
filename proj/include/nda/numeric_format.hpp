#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace nda {

// Shortest round-trip decimal form ('.' separator, locale independent).
// Identical inputs format identically, which is what keeps emitted CSV
// byte-reproducible.
std::string format_double(double value);

// Strict full-string parse; nullopt on any trailing garbage.
std::optional<double> parse_double(std::string_view text);

}  // namespace nda
