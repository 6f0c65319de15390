#include "agdec/code_io.hpp"

#include <fstream>
#include <sstream>

#include "json_detail.hpp"

namespace agdec {

using detail::json;

namespace {

const json& field_of(const json& doc, const char* key) {
  if (!doc.contains(key)) throw ParseError(std::string("curve data is missing '") + key + "'");
  return doc.at(key);
}

}  // namespace

CodeData parse_code(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("curve data is not valid JSON: ") + e.what());
  }
  try {
    const auto& fj = field_of(doc, "field");
    Field F(fj.at("p").get<std::uint32_t>(), fj.at("modulus").get<std::vector<std::uint32_t>>(),
            fj.at("generator").get<std::vector<std::uint32_t>>());
    if (fj.contains("m") && fj.at("m").get<std::uint32_t>() != F.degree()) {
      throw MalformedCode("field.m disagrees with the modulus degree");
    }
    CodeData code(std::move(F));
    const Field& Fr = code.field;
    code.n = field_of(doc, "n").get<int>();
    code.genus = field_of(doc, "genus").get<int>();
    code.gamma = field_of(doc, "gamma").get<int>();
    code.degG = field_of(doc, "degG").get<int>();
    code.a = field_of(doc, "a").get<std::vector<int>>();
    code.b = field_of(doc, "b").get<std::vector<int>>();
    code.ev_x = detail::vec_from_json(Fr, field_of(doc, "ev_x"));
    for (const auto& row : field_of(doc, "ev_y")) code.ev_y.push_back(detail::vec_from_json(Fr, row));
    for (const auto& row : field_of(doc, "ev_ybar")) code.ev_ybar.push_back(detail::vec_from_json(Fr, row));
    for (const auto& row : field_of(doc, "table")) {
      std::vector<RBarElement> entries;
      for (const auto& entry : row) entries.push_back(detail::rbar_from_json(Fr, entry));
      code.table.push_back(std::move(entries));
    }
    validate(code);
    return code;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed curve data: ") + e.what());
  } catch (const MalformedElement& e) {
    throw MalformedCode(std::string("malformed curve data: ") + e.what());
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CodeData load_code_file(const std::filesystem::path& path) { return parse_code(read_text_file(path)); }

std::string serialize_code(const CodeData& code) {
  const Field& F = code.field;
  json doc;
  doc["field"] = {{"p", F.characteristic()},
                  {"m", F.degree()},
                  {"modulus", F.modulus()},
                  {"generator", F.digits(F.generator())}};
  doc["n"] = code.n;
  doc["genus"] = code.genus;
  doc["gamma"] = code.gamma;
  doc["degG"] = code.degG;
  doc["a"] = code.a;
  doc["b"] = code.b;
  doc["ev_x"] = detail::vec_to_json(F, code.ev_x);
  doc["ev_y"] = json::array();
  for (const auto& row : code.ev_y) doc["ev_y"].push_back(detail::vec_to_json(F, row));
  doc["ev_ybar"] = json::array();
  for (const auto& row : code.ev_ybar) doc["ev_ybar"].push_back(detail::vec_to_json(F, row));
  doc["table"] = json::array();
  for (const auto& row : code.table) {
    json jr = json::array();
    for (const auto& entry : row) jr.push_back(detail::rbar_to_json(F, entry));
    doc["table"].push_back(std::move(jr));
  }
  return doc.dump();
}

}  // namespace agdec
