#include "agdec/notation.hpp"

#include <charconv>

#include "agdec/errors.hpp"

namespace agdec {

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

long long parse_int(std::string_view s, std::string_view whole) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  long long v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError("cannot parse element '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

Elem parse_element(std::string_view text, const Field& F) {
  const std::string_view whole = trim(text);
  std::string_view s = whole;
  if (s.empty()) throw ParseError("empty element");

  if (s.front() == '[') {
    if (s.back() != ']') throw ParseError("unterminated digit vector '" + std::string(whole) + "'");
    s = s.substr(1, s.size() - 2);
    std::vector<std::uint32_t> digits;
    while (true) {
      const auto comma = s.find(',');
      const long long d = parse_int(s.substr(0, comma), whole);
      if (d < 0) throw MalformedElement("negative digit in '" + std::string(whole) + "'");
      digits.push_back(static_cast<std::uint32_t>(d));
      if (comma == std::string_view::npos) break;
      s.remove_prefix(comma + 1);
    }
    return F.from_digits(digits);
  }

  bool negate = false;
  if (s.front() == '-') {
    negate = true;
    s = trim(s.substr(1));
  }
  std::string_view base;
  if (s.starts_with("a")) {
    base = "a";
  } else if (s.starts_with("\xce\xb1")) {
    base = "\xce\xb1";
  }
  if (!base.empty()) {
    s.remove_prefix(base.size());
    long long k = 1;
    if (!s.empty()) {
      if (s.front() != '^') throw ParseError("cannot parse element '" + std::string(whole) + "'");
      k = parse_int(s.substr(1), whole);
    }
    const Elem e = F.from_power(k);
    return negate ? F.neg(e) : e;
  }
  const long long v = parse_int(s, whole);
  return F.from_int(negate ? -v : v);
}

std::vector<Elem> parse_vector(std::string_view text, const Field& F) {
  std::vector<Elem> out;
  if (trim(text).empty()) return out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      out.push_back(parse_element(text.substr(start, i - start), F));
      start = i + 1;
    } else if (text[i] == '[') {
      ++depth;
    } else if (text[i] == ']') {
      if (--depth < 0) throw ParseError("unbalanced ']' in vector");
    }
  }
  if (depth != 0) throw ParseError("unbalanced '[' in vector");
  return out;
}

std::string format_vector(const std::vector<Elem>& v, const Field& F) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += F.format(v[i]);
  }
  return out;
}

}  // namespace agdec
