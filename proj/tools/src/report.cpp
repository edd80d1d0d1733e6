/*
 * Copyright 2026 The rbessel Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <type_traits>

#include <json.hpp>

namespace rbessel::cli {

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  if (name == "plain") return Format::plain;
  throw std::invalid_argument("unknown format '" + name + "'");
}

std::string format_number(double v, Format f) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, f == Format::plain ? "%.12g" : "%.17g", v);
  return buf;
}

std::string format_cell(const Cell& c, Format f) {
  return std::visit(
      [f](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) return format_number(v, f);
        else if constexpr (std::is_same_v<T, long>) return std::to_string(v);
        else if constexpr (std::is_same_v<T, bool>) return v ? "true" : "false";
        else return v;
      },
      c);
}

namespace {

bool needs_quotes(const std::string& s) { return s.find_first_of(",\"\r\n") != std::string::npos; }

std::string quote(const std::string& s) {
  if (!needs_quotes(s)) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + '"';
}

// NaN and infinities have no JSON literal; they become null.
nlohmann::ordered_json to_json(const Cell& c) {
  return std::visit(
      [](const auto& v) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v)) return nullptr;
          return v;
        } else {
          return v;
        }
      },
      c);
}

nlohmann::ordered_json to_json(const Fields& fields) {
  nlohmann::ordered_json obj = nlohmann::ordered_json::object();
  for (const auto& [k, v] : fields) obj[k] = to_json(v);
  return obj;
}

}  // namespace

std::string write_csv(const std::vector<std::vector<std::string>>& records) {
  std::string out;
  for (const auto& rec : records) {
    for (std::size_t i = 0; i < rec.size(); ++i) {
      if (i) out += ',';
      out += quote(rec[i]);
    }
    out += '\n';
  }
  return out;
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> rec;
  std::string field;
  bool in_quotes = false;
  bool any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (in_quotes) {
      if (ch != '"') {
        field += ch;
      } else if (i + 1 < text.size() && text[i + 1] == '"') {
        field += '"';
        ++i;
      } else {
        in_quotes = false;
      }
      continue;
    }
    switch (ch) {
      case '"':
        in_quotes = true;
        any = true;
        break;
      case ',':
        rec.push_back(std::move(field));
        field.clear();
        any = true;
        break;
      case '\r':
        break;
      case '\n':
        rec.push_back(std::move(field));
        field.clear();
        records.push_back(std::move(rec));
        rec.clear();
        any = false;
        break;
      default:
        field += ch;
        any = true;
    }
  }
  if (in_quotes) throw std::invalid_argument("parse_csv: unterminated quoted field");
  if (any) {
    rec.push_back(std::move(field));
    records.push_back(std::move(rec));
  }
  return records;
}

void emit(const Report& r, Format f, std::ostream& out, std::ostream& err) {
  switch (f) {
    case Format::csv: {
      std::vector<std::vector<std::string>> records;
      records.push_back(r.table.columns);
      for (const auto& row : r.table.rows) {
        std::vector<std::string> rec;
        for (const auto& c : row) rec.push_back(format_cell(c, f));
        records.push_back(std::move(rec));
      }
      out << write_csv(records);
      for (const auto& [k, v] : r.summary) err << k << '=' << format_cell(v, f) << '\n';
      break;
    }
    case Format::json: {
      nlohmann::ordered_json doc;
      doc["meta"] = to_json(r.meta);
      doc["rows"] = nlohmann::ordered_json::array();
      for (const auto& row : r.table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) obj[r.table.columns[i]] = to_json(row[i]);
        doc["rows"].push_back(std::move(obj));
      }
      doc["summary"] = to_json(r.summary);
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::plain: {
      std::vector<std::vector<std::string>> cells;
      cells.push_back(r.table.columns);
      for (const auto& row : r.table.rows) {
        std::vector<std::string> rec;
        for (const auto& c : row) rec.push_back(format_cell(c, f));
        cells.push_back(std::move(rec));
      }
      std::vector<std::size_t> width(r.table.columns.size(), 0);
      for (const auto& rec : cells)
        for (std::size_t i = 0; i < rec.size(); ++i) width[i] = std::max(width[i], rec[i].size());
      for (const auto& rec : cells) {
        std::string line;
        for (std::size_t i = 0; i < rec.size(); ++i) {
          if (i) line += "  ";
          line += rec[i];
          if (i + 1 < rec.size()) line.append(width[i] - rec[i].size(), ' ');
        }
        out << line << '\n';
      }
      if (!r.summary.empty()) {
        out << '\n';
        for (const auto& [k, v] : r.summary) out << k << ": " << format_cell(v, f) << '\n';
      }
      break;
    }
  }
}

}  // namespace rbessel::cli
