#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Small parsing and formatting helpers shared by the text formats.

namespace genus_forge {

std::string_view trim(std::string_view s);
std::vector<std::string> split(std::string_view s, char sep);
std::int64_t parse_int(std::string_view s);

/// Splits "2*x-3+y" into {"2*x", "-3", "+y"} at top-level signs; signs
/// directly after '^', '(' or '*' belong to the following factor.
std::vector<std::string> split_signed_terms(std::string_view s);

/// Parses a sum of monomials c*var^k ("2*t^2-t^-1+3") into (c, k) pairs.
/// Exponents may be negative. Repeated exponents are returned as given.
std::vector<std::pair<std::int64_t, int>> parse_terms(std::string_view s, std::string_view var);

/// Joins (signed coefficient, monomial) pairs: {(-2,"x^2"),(-1,"")} -> "-2*x^2-1".
std::string format_terms(const std::vector<std::pair<std::int64_t, std::string>>& terms);

}  // namespace genus_forge
