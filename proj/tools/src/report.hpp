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

#ifndef RBESSEL_TOOLS_REPORT_HPP
#define RBESSEL_TOOLS_REPORT_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace rbessel::cli {

using Cell = std::variant<double, long, bool, std::string>;

enum class Format { csv, json, plain };

Format parse_format(const std::string& name);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Key/value pairs in insertion order.
using Fields = std::vector<std::pair<std::string, Cell>>;

struct Report {
  Fields meta;
  Table table;
  Fields summary;
};

/// %.17g for csv/json, %.12g for plain.
std::string format_number(double v, Format f);
std::string format_cell(const Cell& c, Format f);

/// RFC-4180 style: fields quoted when they hold a comma, quote, CR or LF; "\n" line ends.
std::string write_csv(const std::vector<std::vector<std::string>>& records);
std::vector<std::vector<std::string>> parse_csv(const std::string& text);

/// csv: header + rows to `out`, summary as "key=value" lines to `err`.
/// json: a single object {meta, rows, summary} to `out`.
/// plain: aligned table then summary to `out`.
void emit(const Report& r, Format f, std::ostream& out, std::ostream& err);

}  // namespace rbessel::cli

#endif  // RBESSEL_TOOLS_REPORT_HPP
