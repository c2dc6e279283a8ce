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

#include "synccert/automaton.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

namespace synccert {

const char* to_string(ParseErrorKind kind) {
  switch (kind) {
    case ParseErrorKind::kMalformedHeader: return "malformed header";
    case ParseErrorKind::kMalformedAlphabet: return "malformed alphabet";
    case ParseErrorKind::kDuplicateLetter: return "duplicate letter";
    case ParseErrorKind::kBadLetter: return "letter is not a single character";
    case ParseErrorKind::kUnknownLetter: return "row for unknown letter";
    case ParseErrorKind::kDuplicateRow: return "duplicate row";
    case ParseErrorKind::kMissingRow: return "missing row";
    case ParseErrorKind::kRowLength: return "wrong number of targets";
    case ParseErrorKind::kBadTarget: return "target is not a number";
    case ParseErrorKind::kTargetOutOfRange: return "target state out of range";
    case ParseErrorKind::kTrailingContent: return "unexpected content";
  }
  return "parse error";
}

// ---------------------------------------------------------------------------
// StateSet

std::vector<State> StateSet::members() const {
  std::vector<State> out;
  out.reserve(size());
  for_each([&](State q) { out.push_back(q); });
  return out;
}

std::string StateSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for_each([&](State q) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(q + 1);
  });
  out += '}';
  return out;
}

std::ostream& operator<<(std::ostream& os, StateSet s) {
  return os << s.to_string();
}

StateSet StateSet::parse(std::string_view text, std::size_t n) {
  check_width(n);
  std::string cleaned;
  for (char c : text) {
    if (c == '{' || c == '}') continue;
    cleaned += (c == ',') ? ' ' : c;
  }
  std::istringstream in(cleaned);
  StateSet out;
  std::string token;
  while (in >> token) {
    std::size_t label = 0;
    auto [ptr, ec] =
        std::from_chars(token.data(), token.data() + token.size(), label);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
      throw PreconditionError("bad state label '" + token + "'");
    }
    if (label < 1 || label > n) {
      throw PreconditionError("state " + token + " is outside 1.." +
                              std::to_string(n));
    }
    out.insert(static_cast<State>(label - 1));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Automaton

Automaton::Automaton(std::size_t n, std::string alphabet,
                     std::vector<State> table)
    : n_(n), alphabet_(std::move(alphabet)), table_(std::move(table)) {
  if (n_ == 0) throw PreconditionError("automaton needs at least one state");
  if (alphabet_.empty()) {
    throw PreconditionError("automaton needs at least one letter");
  }
  std::string sorted = alphabet_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw PreconditionError("alphabet letters must be distinct");
  }
  if (table_.size() != n_ * alphabet_.size()) {
    throw PreconditionError("transition table has the wrong size");
  }
  for (State t : table_) {
    if (t >= n_) throw PreconditionError("transition target out of range");
  }
}

std::optional<std::size_t> Automaton::letter_index(char c) const {
  auto pos = alphabet_.find(c);
  if (pos == std::string::npos) return std::nullopt;
  return pos;
}

std::vector<std::size_t> Automaton::encode(std::string_view word) const {
  std::vector<std::size_t> out;
  out.reserve(word.size());
  for (char c : word) {
    auto idx = letter_index(c);
    if (!idx) throw UnknownLetterError(c);
    out.push_back(*idx);
  }
  return out;
}

State Automaton::run(State q, std::string_view word) const {
  for (std::size_t l : encode(word)) q = next(q, l);
  return q;
}

// ---------------------------------------------------------------------------
// Transformation

Transformation::Transformation(std::vector<State> image)
    : image_(std::move(image)), indegree_(image_.size(), 0) {
  for (State t : image_) {
    if (t >= image_.size()) {
      throw PreconditionError("transformation image out of range");
    }
    if (indegree_[t]++ == 0) ++rank_;
  }
}

Transformation Transformation::identity(std::size_t n) {
  std::vector<State> id(n);
  for (std::size_t q = 0; q < n; ++q) id[q] = static_cast<State>(q);
  return Transformation(std::move(id));
}

StateSet Transformation::image() const {
  StateSet::check_width(image_.size());
  StateSet out;
  for (State t : image_) out.insert(t);
  return out;
}

Transformation Transformation::then(const Transformation& next) const {
  std::vector<State> out(image_.size());
  for (std::size_t q = 0; q < image_.size(); ++q) out[q] = next.image_[image_[q]];
  return Transformation(std::move(out));
}

Transformation transformation_of(const Automaton& a, std::string_view word) {
  auto letters = a.encode(word);
  std::vector<State> image(a.size());
  for (std::size_t q = 0; q < a.size(); ++q) {
    State s = static_cast<State>(q);
    for (std::size_t l : letters) s = a.next(s, l);
    image[q] = s;
  }
  return Transformation(std::move(image));
}

Transformation transformation_of_letter(const Automaton& a,
                                        std::size_t letter) {
  auto row = a.row(letter);
  return Transformation(std::vector<State>(row.begin(), row.end()));
}

// ---------------------------------------------------------------------------
// Subset dynamics

StateSet apply_word(const Automaton& a, StateSet s, std::string_view word) {
  StateSet::check_width(a.size());
  auto letters = a.encode(word);
  for (std::size_t l : letters) {
    StateSet next;
    s.for_each([&](State q) { next.insert(a.next(q, l)); });
    s = next;
  }
  return s;
}

StateSet preimage(const Automaton& a, StateSet s, std::string_view word) {
  StateSet::check_width(a.size());
  auto letters = a.encode(word);
  StateSet out;
  for (std::size_t q = 0; q < a.size(); ++q) {
    State t = static_cast<State>(q);
    for (std::size_t l : letters) t = a.next(t, l);
    if (s.contains(t)) out.insert(static_cast<State>(q));
  }
  return out;
}

SubsetImage::SubsetImage(const Automaton& a) {
  StateSet::check_width(a.size());
  const std::size_t chunks = (a.size() + 7) / 8;
  tables_.resize(a.alphabet_size());
  for (std::size_t l = 0; l < a.alphabet_size(); ++l) {
    auto& t = tables_[l];
    t.assign(chunks * 256, 0);
    for (std::size_t c = 0; c < chunks; ++c) {
      for (std::size_t byte = 1; byte < 256; ++byte) {
        // Build from the lowest set bit and the already-filled remainder.
        std::size_t low = static_cast<std::size_t>(std::countr_zero(byte));
        std::size_t q = c * 8 + low;
        std::uint64_t bit =
            q < a.size()
                ? std::uint64_t{1} << a.next(static_cast<State>(q), l)
                : 0;
        t[c * 256 + byte] = t[c * 256 + (byte & (byte - 1))] | bit;
      }
    }
  }
}

// ---------------------------------------------------------------------------
// File format

namespace {

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) {
    if (tok[0] == '#') break;  // trailing comment
    out.push_back(tok);
  }
  return out;
}

std::size_t parse_count(const std::string& tok, std::size_t line,
                        ParseErrorKind kind) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(kind, line, "'" + tok + "' is not a non-negative integer");
  }
  return value;
}

}  // namespace

Automaton parse_automaton(std::string_view text) {
  std::size_t n = 0;
  std::string alphabet;
  bool have_states = false;
  bool have_alphabet = false;
  std::vector<State> table;
  std::vector<bool> seen;
  std::size_t line_no = 0;
  std::size_t last_line = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    auto tokens = tokenize(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    last_line = line_no;

    if (!have_states) {
      if (tokens.size() != 2 || tokens[0] != "states") {
        throw ParseError(ParseErrorKind::kMalformedHeader, line_no,
                         "expected 'states <n>'");
      }
      n = parse_count(tokens[1], line_no, ParseErrorKind::kMalformedHeader);
      if (n == 0) {
        throw ParseError(ParseErrorKind::kMalformedHeader, line_no,
                         "state count must be at least 1");
      }
      have_states = true;
    } else if (!have_alphabet) {
      if (tokens[0] != "alphabet") {
        throw ParseError(ParseErrorKind::kMalformedAlphabet, line_no,
                         "expected 'alphabet <letters...>'");
      }
      if (tokens.size() < 2) {
        throw ParseError(ParseErrorKind::kMalformedAlphabet, line_no,
                         "alphabet is empty");
      }
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        const auto& tok = tokens[i];
        if (tok.size() != 1) {
          throw ParseError(ParseErrorKind::kBadLetter, line_no,
                           "'" + tok + "'");
        }
        if (alphabet.find(tok[0]) != std::string::npos) {
          throw ParseError(ParseErrorKind::kDuplicateLetter, line_no,
                           "'" + tok + "'");
        }
        alphabet += tok[0];
      }
      have_alphabet = true;
      table.assign(n * alphabet.size(), 0);
      seen.assign(alphabet.size(), false);
    } else {
      const auto& head = tokens[0];
      if (head.size() != 1) {
        throw ParseError(ParseErrorKind::kBadLetter, line_no, "'" + head + "'");
      }
      auto l = alphabet.find(head[0]);
      if (l == std::string::npos) {
        throw ParseError(ParseErrorKind::kUnknownLetter, line_no,
                         "'" + head + "'");
      }
      if (seen[l]) {
        throw ParseError(ParseErrorKind::kDuplicateRow, line_no,
                         "letter '" + head + "' already has a row");
      }
      if (tokens.size() != n + 1) {
        throw ParseError(ParseErrorKind::kRowLength, line_no,
                         "expected " + std::to_string(n) + " targets, got " +
                             std::to_string(tokens.size() - 1));
      }
      for (std::size_t q = 0; q < n; ++q) {
        std::size_t t =
            parse_count(tokens[q + 1], line_no, ParseErrorKind::kBadTarget);
        if (t < 1 || t > n) {
          throw ParseError(ParseErrorKind::kTargetOutOfRange, line_no,
                           tokens[q + 1] + " is outside 1.." +
                               std::to_string(n));
        }
        table[l * n + q] = static_cast<State>(t - 1);
      }
      seen[l] = true;
    }
    if (end == text.size()) break;
  }

  if (!have_states) {
    throw ParseError(ParseErrorKind::kMalformedHeader, line_no,
                     "missing 'states' line");
  }
  if (!have_alphabet) {
    throw ParseError(ParseErrorKind::kMalformedAlphabet, line_no,
                     "missing 'alphabet' line");
  }
  for (std::size_t l = 0; l < alphabet.size(); ++l) {
    if (!seen[l]) {
      throw ParseError(ParseErrorKind::kMissingRow, last_line + 1,
                       std::string("no row for letter '") + alphabet[l] + "'");
    }
  }
  return Automaton(n, std::move(alphabet), std::move(table));
}

Automaton parse_automaton(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_automaton(buf.str());
}

Automaton load_automaton(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return parse_automaton(in);
}

std::string serialize_automaton(const Automaton& a) {
  std::string out = "states " + std::to_string(a.size()) + "\nalphabet";
  for (char c : a.alphabet()) {
    out += ' ';
    out += c;
  }
  out += '\n';
  for (std::size_t l = 0; l < a.alphabet_size(); ++l) {
    out += a.letter(l);
    for (State t : a.row(l)) out += ' ' + std::to_string(t + 1);
    out += '\n';
  }
  return out;
}

std::string to_dot(const Automaton& a) {
  std::ostringstream out;
  out << "digraph automaton {\n  rankdir=LR;\n  node [shape=circle];\n";
  for (std::size_t q = 0; q < a.size(); ++q) {
    // Merge parallel edges into one label.
    std::vector<std::string> labels(a.size());
    for (std::size_t l = 0; l < a.alphabet_size(); ++l) {
      auto& lab = labels[a.next(static_cast<State>(q), l)];
      if (!lab.empty()) lab += ',';
      lab += a.letter(l);
    }
    for (std::size_t t = 0; t < a.size(); ++t) {
      if (labels[t].empty()) continue;
      out << "  " << q + 1 << " -> " << t + 1 << " [label=\"" << labels[t]
          << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace synccert
