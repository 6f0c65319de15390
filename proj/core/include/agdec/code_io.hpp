#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "agdec/code.hpp"

namespace agdec {

/// Curve-data document: field{p,m,modulus,generator}, n, genus, gamma, degG,
/// a[], b[], ev_x[], ev_y[][], ev_ybar[][], table[i][m][j]. Field elements are
/// digit vectors; polynomials are arrays of elements, low degree first.
/// Parsing validates the result (see validate()).
CodeData parse_code(std::string_view json_text);
CodeData load_code_file(const std::filesystem::path& path);
std::string serialize_code(const CodeData& code);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace agdec
