// Copyright 2026 The matwaring Authors
// SPDX-License-Identifier: Apache-2.0

#include "waring/text_format.hpp"

#include <cctype>
#include <map>
#include <vector>

#include "waring/errors.hpp"

namespace waring {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Integer parse_integer(std::string_view s) {
  s = trim(s);
  std::string str(s);
  if (!str.empty() && str[0] == '+') str.erase(0, 1);
  bool ok = !str.empty();
  for (std::size_t i = 0; i < str.size() && ok; ++i) {
    const char c = str[i];
    ok = std::isdigit(static_cast<unsigned char>(c)) || (i == 0 && c == '-' && str.size() > 1);
  }
  if (!ok) fail(ErrorCode::kParse, "not an integer: '" + std::string(s) + "'");
  return Integer(str);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

std::map<std::string, Integer> parse_keyvals(std::string_view body, std::string_view kind) {
  std::map<std::string, Integer> out;
  for (auto part : split(body, ',')) {
    part = trim(part);
    const auto eq = part.find('=');
    if (eq == std::string_view::npos)
      fail(ErrorCode::kParse, std::string(kind) + ": expected key=value, got '" + std::string(part) + "'");
    std::string key(trim(part.substr(0, eq)));
    if (out.count(key)) fail(ErrorCode::kParse, std::string(kind) + ": duplicate key '" + key + "'");
    out[key] = parse_integer(part.substr(eq + 1));
  }
  return out;
}

}  // namespace

OrderDescriptor parse_order(std::string_view text) {
  text = trim(text);
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    fail(ErrorCode::kParse, "order description needs a 'minpoly:', 'quad:' or 'external:' prefix");
  const std::string_view kind = trim(text.substr(0, colon));
  const std::string_view body = trim(text.substr(colon + 1));

  if (kind == "minpoly") {
    std::vector<Integer> coeffs;
    for (auto part : split(body, ',')) coeffs.push_back(parse_integer(part));
    return MonogenicOrder::from_min_poly(std::move(coeffs), std::string(text));
  }
  if (kind == "quad") {
    auto kv = parse_keyvals(body, "quad");
    for (const auto& [key, value] : kv)
      if (key != "d" && key != "f") fail(ErrorCode::kParse, "quad: unknown key '" + key + "'");
    if (!kv.count("d")) fail(ErrorCode::kParse, "quad: missing d");
    QuadraticSpec spec{kv["d"], kv.count("f") ? kv["f"] : Integer(1)};
    return MonogenicOrder::quadratic(spec);
  }
  if (kind == "external") {
    auto kv = parse_keyvals(body, "external");
    for (const auto& [key, value] : kv)
      if (key != "deg" && key != "disc") fail(ErrorCode::kParse, "external: unknown key '" + key + "'");
    if (!kv.count("deg") || !kv.count("disc")) fail(ErrorCode::kParse, "external: needs deg and disc");
    if (kv["deg"] < 1 || !kv["deg"].fits_sint_p()) fail(ErrorCode::kInvalidSpec, "external: deg must be >= 1");
    if (kv["disc"] == 0) fail(ErrorCode::kZeroDiscriminant, "external: disc must be nonzero");
    return ExternalDiscOrder{static_cast<int>(kv["deg"].get_si()), kv["disc"], std::string(text)};
  }
  fail(ErrorCode::kParse, "unknown order kind '" + std::string(kind) + "'");
}

MatrixOverOrder parse_matrix(std::string_view text, const MonogenicOrder& order) {
  const std::size_t degree = static_cast<std::size_t>(order.degree());
  std::vector<std::vector<OrderElement>> rows;
  for (auto row_text : split(text, ';')) {
    std::vector<OrderElement> row;
    std::size_t i = 0;
    auto skip_separators = [&] {
      while (i < row_text.size() &&
             (row_text[i] == ',' || std::isspace(static_cast<unsigned char>(row_text[i]))))
        ++i;
    };
    skip_separators();
    while (i < row_text.size()) {
      std::vector<Integer> coords;
      if (row_text[i] == '(') {
        const auto close = row_text.find(')', i);
        if (close == std::string_view::npos) fail(ErrorCode::kParse, "unterminated '(' in matrix");
        for (auto part : split(row_text.substr(i + 1, close - i - 1), ',')) coords.push_back(parse_integer(part));
        i = close + 1;
      } else {
        std::size_t j = i;
        while (j < row_text.size() && row_text[j] != ',' &&
               !std::isspace(static_cast<unsigned char>(row_text[j])))
          ++j;
        coords.push_back(parse_integer(row_text.substr(i, j - i)));
        i = j;
      }
      if (coords.size() > degree)
        fail(ErrorCode::kDimensionMismatch, "matrix entry has " + std::to_string(coords.size()) +
                                                " coordinates, order has degree " + std::to_string(degree));
      coords.resize(degree, 0);
      row.emplace_back(std::move(coords));
      if (i < row_text.size() && row_text[i] != ',' && !std::isspace(static_cast<unsigned char>(row_text[i])))
        fail(ErrorCode::kParse, "expected a separator after matrix entry");
      skip_separators();
    }
    rows.push_back(std::move(row));
  }
  const std::size_t n = rows.size();
  if (n == 0 || rows[0].empty()) fail(ErrorCode::kParse, "empty matrix");
  std::vector<OrderElement> entries;
  for (auto& row : rows) {
    if (row.size() != n)
      fail(ErrorCode::kDimensionMismatch, "matrix must be square: got a row of length " +
                                              std::to_string(row.size()) + " in " + std::to_string(n) + " rows");
    for (auto& e : row) entries.push_back(std::move(e));
  }
  return MatrixOverOrder(n, std::move(entries));
}

std::string format_matrix(const MatrixOverOrder& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i > 0) out += ';';
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j > 0) out += ',';
      const auto& c = m(i, j).coords();
      bool constant = true;
      for (std::size_t t = 1; t < c.size(); ++t) constant = constant && c[t] == 0;
      if (constant) {
        out += c.empty() ? "0" : c[0].get_str();
      } else {
        out += '(';
        for (std::size_t t = 0; t < c.size(); ++t) {
          if (t > 0) out += ',';
          out += c[t].get_str();
        }
        out += ')';
      }
    }
  }
  return out;
}

}  // namespace waring
