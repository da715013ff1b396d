// Copyright 2026 The qimg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qimg/qsim/circuit_io.hpp"

#include <charconv>
#include <cstdio>
#include <optional>
#include <sstream>
#include <vector>

namespace qimg::qsim {
namespace {

std::string format_angle(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> words;
  std::size_t pos = 0;
  while (pos < s.size()) {
    const auto start = s.find_first_not_of(" \t\r", pos);
    if (start == std::string_view::npos) break;
    auto end = s.find_first_of(" \t\r", start);
    if (end == std::string_view::npos) end = s.size();
    words.push_back(s.substr(start, end - start));
    pos = end;
  }
  return words;
}

int parse_int(std::string_view word, std::size_t line_no) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc{} || ptr != word.data() + word.size()) {
    throw CircuitFormatError("line " + std::to_string(line_no) + ": bad integer '" +
                             std::string(word) + "'");
  }
  return value;
}

std::vector<int> parse_ints(std::string_view field, std::size_t line_no) {
  std::vector<int> out;
  for (auto w : split_words(field)) out.push_back(parse_int(w, line_no));
  return out;
}

}  // namespace

std::string circuit_to_text(const Circuit& circuit) {
  std::ostringstream os;
  os << "qubits " << circuit.num_qubits() << " params " << circuit.num_params() << '\n';
  for (const Gate& g : circuit.gates()) {
    os << gate_name(g.kind);
    for (int t : g.targets) os << ' ' << t;
    os << " |";
    for (int c : g.controls) os << ' ' << c;
    os << " | ";
    if (g.param_id) {
      os << 'p' << *g.param_id;
    } else if (g.theta) {
      os << format_angle(*g.theta);
    } else {
      os << '-';
    }
    os << '\n';
  }
  return os.str();
}

Circuit circuit_from_text(std::string_view text) {
  std::optional<Circuit> circuit;
  int declared_params = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    if (!circuit) {
      const auto words = split_words(line);
      if (words.size() != 4 || words[0] != "qubits" || words[2] != "params") {
        throw CircuitFormatError("line " + std::to_string(line_no) +
                                 ": expected header 'qubits N params P'");
      }
      circuit.emplace(parse_int(words[1], line_no));
      declared_params = parse_int(words[3], line_no);
      continue;
    }

    const auto bar1 = line.find('|');
    const auto bar2 = bar1 == std::string_view::npos ? bar1 : line.find('|', bar1 + 1);
    if (bar2 == std::string_view::npos) {
      throw CircuitFormatError("line " + std::to_string(line_no) + ": expected two '|' separators");
    }
    const auto head = split_words(line.substr(0, bar1));
    if (head.empty()) throw CircuitFormatError("line " + std::to_string(line_no) + ": missing gate kind");
    const auto kind = gate_kind_from_name(head[0]);
    if (!kind) {
      throw CircuitFormatError("line " + std::to_string(line_no) + ": unknown gate '" +
                               std::string(head[0]) + "'");
    }
    Gate g;
    g.kind = *kind;
    for (std::size_t i = 1; i < head.size(); ++i) g.targets.push_back(parse_int(head[i], line_no));
    g.controls = parse_ints(line.substr(bar1 + 1, bar2 - bar1 - 1), line_no);
    const std::string_view angle = trim(line.substr(bar2 + 1));
    if (angle.empty()) {
      throw CircuitFormatError("line " + std::to_string(line_no) + ": missing angle field");
    }
    if (angle.front() == 'p') {
      g.param_id = parse_int(angle.substr(1), line_no);
    } else if (angle != "-") {
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(angle.data(), angle.data() + angle.size(), v);
      if (ec != std::errc{} || ptr != angle.data() + angle.size()) {
        throw CircuitFormatError("line " + std::to_string(line_no) + ": bad angle '" +
                                 std::string(angle) + "'");
      }
      g.theta = v;
    }
    try {
      circuit->append(std::move(g));
    } catch (const std::exception& e) {
      throw CircuitFormatError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  if (!circuit) throw CircuitFormatError("missing header");
  if (circuit->num_params() != declared_params) {
    throw CircuitFormatError("header declares " + std::to_string(declared_params) +
                             " params, gates use " + std::to_string(circuit->num_params()));
  }
  return *std::move(circuit);
}

}  // namespace qimg::qsim
