// Copyright 2026 The synccert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "report.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <string>

namespace synccert::cli {

namespace {

bool is_scalar(const Report& v) { return !v.is_object() && !v.is_array(); }

bool is_flat_array(const Report& v) {
  return v.is_array() && std::all_of(v.begin(), v.end(), is_scalar);
}

std::string scalar(const Report& v) {
  if (v.is_null()) return "none";
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    return s.empty() ? "\"\"" : s;
  }
  return v.dump();
}

void render_object(const Report& obj, std::ostream& out, std::size_t indent,
                   bool first_is_item);

// Renders `key: value` at `indent`; `lead` replaces the indentation of the
// first line for list items.
void render_field(const std::string& key, const Report& v, std::ostream& out,
                  std::size_t indent, const std::string& lead) {
  out << lead << key << ':';
  if (v.is_string() && v.get_ref<const std::string&>().find('\n') !=
                           std::string::npos) {
    out << " |\n";
    std::istringstream lines(v.get<std::string>());
    for (std::string line; std::getline(lines, line);) {
      out << std::string(indent + 2, ' ') << line << '\n';
    }
  } else if (is_scalar(v)) {
    out << ' ' << scalar(v) << '\n';
  } else if (is_flat_array(v)) {
    for (const auto& x : v) out << ' ' << scalar(x);
    out << '\n';
  } else if (v.is_object()) {
    out << '\n';
    render_object(v, out, indent + 2, false);
  } else {
    out << '\n';
    for (const auto& item : v) {
      if (item.is_object()) {
        render_object(item, out, indent + 2, true);
      } else {
        out << std::string(indent + 2, ' ') << "- " << scalar(item) << '\n';
      }
    }
  }
}

void render_object(const Report& obj, std::ostream& out, std::size_t indent,
                   bool first_is_item) {
  bool first = true;
  for (const auto& [key, v] : obj.items()) {
    std::string lead = std::string(indent, ' ');
    if (first_is_item) lead += first ? "- " : "  ";
    render_field(key, v, out, indent + (first_is_item ? 2 : 0), lead);
    first = false;
  }
  if (first_is_item && obj.empty()) out << std::string(indent, ' ') << "-\n";
}

}  // namespace

void render_text(const Report& report, std::ostream& out) {
  render_object(report, out, 0, false);
}

void render_json(const Report& report, std::ostream& out) {
  out << report.dump(2) << '\n';
}

}  // namespace synccert::cli
