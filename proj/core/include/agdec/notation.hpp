#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "agdec/field.hpp"

namespace agdec {

/// One element: `a^k` (also `α^k`, `-a^k`), a digit vector `[d0,d1,...]`,
/// or an integer taken mod p.
Elem parse_element(std::string_view text, const Field& F);

/// Comma-separated elements; commas inside brackets do not split.
std::vector<Elem> parse_vector(std::string_view text, const Field& F);

/// Digit vectors joined by commas.
std::string format_vector(const std::vector<Elem>& v, const Field& F);

}  // namespace agdec
