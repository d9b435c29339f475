#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>

#include "apnforge/catalog.hpp"
#include "apnforge/errors.hpp"

namespace apnforge {
namespace {

std::uint64_t parse_hex(const std::string& token) {
  std::string digits = token;
  if (digits.size() > 2 && digits[0] == '0' && (digits[1] == 'x' || digits[1] == 'X')) digits = digits.substr(2);
  if (digits.empty() || digits.size() > 8) throw ParseError("bad hexadecimal value '" + token + "'");
  for (char c : digits)
    if (!std::isxdigit(static_cast<unsigned char>(c))) throw ParseError("bad hexadecimal value '" + token + "'");
  return std::stoull(digits, nullptr, 16);
}

int parse_header(const std::string& text, std::size_t& pos) {
  static const std::regex header(R"(^\s*n\s*=\s*(\d+))");
  std::smatch m;
  if (!std::regex_search(text, m, header)) throw ParseError("missing 'n=<int>' header");
  const int n = std::stoi(m[1].str());
  if (n < 1 || n > kMaxFieldDim) throw ParseError("header dimension n=" + m[1].str() + " outside 1..16");
  pos = static_cast<std::size_t>(m.position(0) + m.length(0));
  return n;
}

}  // namespace

VectorialFunc parse_truth_table(const std::string& text) {
  std::size_t pos = 0;
  const int n = parse_header(text, pos);
  std::istringstream in(text.substr(pos));
  std::vector<Element> table;
  std::string token;
  const std::size_t expected = std::size_t{1} << n;
  while (in >> token) {
    const std::uint64_t v = parse_hex(token);
    if (v >> n) throw ParseError("entry '" + token + "' does not fit in n bits");
    table.push_back(static_cast<Element>(v));
  }
  if (table.size() != expected)
    throw ParseError("expected " + std::to_string(expected) + " entries, found " + std::to_string(table.size()));
  return VectorialFunc(n, std::move(table));
}

VectorialFunc parse_polynomial(const std::string& text, std::uint32_t modulus) {
  std::size_t pos = 0;
  const int n = parse_header(text, pos);
  const auto colon = text.find("poly:", pos);
  if (colon == std::string::npos) throw ParseError("missing 'poly:' section");
  std::string body = text.substr(colon + 5);
  body.erase(std::remove_if(body.begin(), body.end(), [](unsigned char c) { return std::isspace(c); }), body.end());
  if (body.empty()) throw ParseError("empty polynomial");
  if (n < kMinFieldDim) throw ParseError("polynomial format needs n >= 2");
  const FieldPtr field = make_field(n, modulus);

  // Terms: [coeff*]x[^exp] or a bare hexadecimal constant.
  static const std::regex term(R"(^(?:((?:0[xX])?[0-9a-fA-F]+)\*)?x(?:\^(\d+))?$|^((?:0[xX])?[0-9a-fA-F]+)$)");
  std::vector<std::pair<Element, std::uint64_t>> terms;
  std::size_t start = 0;
  while (start <= body.size()) {
    const auto plus = body.find('+', start);
    const std::string piece = body.substr(start, plus == std::string::npos ? std::string::npos : plus - start);
    std::smatch m;
    if (!std::regex_match(piece, m, term)) throw ParseError("malformed polynomial term '" + piece + "'");
    Element coeff = 1;
    std::uint64_t exp = 1;
    if (m[3].matched) {
      coeff = static_cast<Element>(parse_hex(m[3].str()));
      exp = 0;
    } else {
      if (m[1].matched) coeff = static_cast<Element>(parse_hex(m[1].str()));
      if (m[2].matched) exp = std::stoull(m[2].str());
    }
    if (coeff >> n) throw ParseError("coefficient '" + piece + "' does not fit in n bits");
    terms.emplace_back(coeff, exp);
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  std::vector<Element> table(field->size(), 0);
  for (Element x = 0; x < field->size(); ++x)
    for (const auto& [c, e] : terms) table[x] ^= field->mul(c, field->pow(x, e));
  return VectorialFunc(n, std::move(table), field);
}

VectorialFunc parse_function(const std::string& text, std::uint32_t modulus) {
  if (text.find("poly:") != std::string::npos) return parse_polynomial(text, modulus);
  return parse_truth_table(text);
}

std::string serialize_truth_table(const VectorialFunc& f) {
  std::ostringstream out;
  out << "n=" << f.n() << '\n';
  const int width = (f.n() + 3) / 4;
  char buf[16];
  for (Element x = 0; x < f.size(); ++x) {
    std::snprintf(buf, sizeof buf, "%0*x", width, f(x));
    out << buf << ((x % 16 == 15 || x + 1 == f.size()) ? '\n' : ' ');
  }
  return out.str();
}

VectorialFunc load_function(const std::string& path, std::uint32_t modulus) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_function(buf.str(), modulus);
}

void save_truth_table(const VectorialFunc& f, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << serialize_truth_table(f);
}

}  // namespace apnforge
