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

#pragma once

#include <iosfwd>

#include <json.hpp>

namespace synccert::cli {

/// Every command builds one of these; both output formats are rendered from
/// it, so text and JSON always carry the same facts.
using Report = nlohmann::ordered_json;

/// Indented "key: value" layout.
///
///   - scalars print bare; the empty string prints as "" and null as none
///   - arrays of scalars print space-separated on one line
///   - objects nest by two spaces; arrays of objects use "- " items
///   - strings with newlines print as a "|" block, one line per row
void render_text(const Report& report, std::ostream& out);

void render_json(const Report& report, std::ostream& out);

}  // namespace synccert::cli
