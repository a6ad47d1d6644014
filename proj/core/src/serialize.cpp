// Copyright 2026 The wdalg Authors
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

#include "wdalg/serialize.hpp"

#include <sstream>

#include "json.hpp"
#include "wdalg/equality.hpp"

namespace wdalg {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json types_json(const TypeList& types) {
  ordered_json out = ordered_json::array();
  for (const auto& t : types) {
    out.push_back(t.name());
  }
  return out;
}

TypeList types_from(const nlohmann::json& j, std::string_view field) {
  if (!j.is_array()) {
    throw Error(ErrorKind::SyntaxError,
                "'" + std::string(field) + "' must be an array of strings");
  }
  TypeList out;
  for (const auto& t : j) {
    if (!t.is_string()) {
      throw Error(ErrorKind::SyntaxError,
                  "'" + std::string(field) + "' must hold strings");
    }
    out.emplace_back(t.get<std::string>());
  }
  return out;
}

PortRef port_from(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() ||
      !j[1].is_number_integer()) {
    throw Error(ErrorKind::SyntaxError, "port refs are [box, port] pairs");
  }
  return {j[0].get<int>(), j[1].get<int>()};
}

WiringDiagram parse_diagram(std::string_view text, Mode mode) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::SyntaxError, e.what());
  }
  if (!j.is_object()) {
    throw Error(ErrorKind::SyntaxError, "diagram must be a JSON object");
  }
  auto field = [&](const char* name) -> const nlohmann::json& {
    if (!j.contains(name)) {
      throw Error(ErrorKind::SyntaxError,
                  std::string("missing field '") + name + "'");
    }
    return j.at(name);
  };
  WiringDiagram d(types_from(field("inputs"), "inputs"),
                  types_from(field("outputs"), "outputs"), mode);
  int expected = kFirstBoxId;
  for (const auto& b : field("boxes")) {
    if (!b.contains("id") || !b.at("id").is_number_integer() ||
        b.at("id").get<int>() != expected) {
      throw Error(ErrorKind::InvalidDiagram,
                  "box ids must run consecutively from 3; expected " +
                      std::to_string(expected));
    }
    if (!b.contains("value") || !b.at("value").is_string()) {
      throw Error(ErrorKind::SyntaxError, "box value must be a string");
    }
    d.add_box(Box{b.at("value").get<std::string>(),
                  types_from(b.value("inputs", nlohmann::json::array()),
                             "inputs"),
                  types_from(b.value("outputs", nlohmann::json::array()),
                             "outputs")});
    ++expected;
  }
  for (const auto& w : field("wires")) {
    if (!w.contains("src") || !w.contains("tgt")) {
      throw Error(ErrorKind::SyntaxError, "wires need 'src' and 'tgt'");
    }
    d.add_wire_unchecked({port_from(w.at("src")), port_from(w.at("tgt"))});
  }
  return d;
}

}  // namespace

std::string to_json(const WiringDiagram& d) {
  ordered_json j;
  j["inputs"] = types_json(d.input_types());
  j["outputs"] = types_json(d.output_types());
  j["boxes"] = ordered_json::array();
  for (int id : d.box_ids()) {
    const Box& b = d.box(id);
    ordered_json box;
    box["id"] = id;
    box["value"] = b.value;
    box["inputs"] = types_json(b.inputs);
    box["outputs"] = types_json(b.outputs);
    j["boxes"].push_back(std::move(box));
  }
  j["wires"] = ordered_json::array();
  for (const auto& w : d.wires()) {
    ordered_json wire;
    wire["src"] = {w.source.box, w.source.port};
    wire["tgt"] = {w.target.box, w.target.port};
    j["wires"].push_back(std::move(wire));
  }
  return j.dump();
}

WiringDiagram from_json_unchecked(std::string_view text, Mode mode) {
  return parse_diagram(text, mode);
}

WiringDiagram from_json(std::string_view text, Mode mode) {
  WiringDiagram d = parse_diagram(text, mode);
  const auto report = validate(d, mode);
  if (!report.ok()) {
    throw Error(ErrorKind::InvalidDiagram, report.violations.front().message);
  }
  return d;
}

std::string canonical_json(const WiringDiagram& d) {
  return to_json(canonicalize(d).diagram);
}

std::string report_to_json(const ValidationReport& report) {
  ordered_json j;
  j["valid"] = report.ok();
  j["mode"] = std::string(to_string(report.mode));
  j["violations"] = ordered_json::array();
  for (const auto& v : report.violations) {
    ordered_json item;
    item["kind"] = std::string(to_string(v.kind));
    item["message"] = v.message;
    j["violations"].push_back(std::move(item));
  }
  j["cycle"] = report.cycle;
  return j.dump();
}

namespace {

std::string escape_record(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '{' || c == '}' || c == '|' || c == '<' || c == '>' ||
        c == '"' || c == '\\' || c == ' ') {
      out += '\\';
    }
    out += c;
  }
  return out;
}

std::string port_fields(const TypeList& types, char role) {
  std::string out = "{";
  for (std::size_t i = 0; i < types.size(); ++i) {
    out += (i > 0 ? "|<" : "<");
    out += role + std::to_string(i + 1) + ">" + escape_record(types[i].name());
  }
  return out + "}";
}

}  // namespace

std::string export_dot(const WiringDiagram& d) {
  const WiringDiagram c = canonicalize(d).diagram;
  std::ostringstream out;
  out << "digraph wiring_diagram {\n"
      << "  rankdir=LR;\n"
      << "  node [shape=record];\n"
      << "  subgraph cluster_outer {\n"
      << "    label=\"outer\";\n"
      << "    n1 [label=\"inputs|" << port_fields(c.input_types(), 'o')
      << "\"];\n"
      << "    n2 [label=\"" << port_fields(c.output_types(), 'i')
      << "|outputs\"];\n"
      << "  }\n";
  for (int id : c.box_ids()) {
    const Box& b = c.box(id);
    out << "  n" << id << " [label=\"" << port_fields(b.inputs, 'i') << "|"
        << escape_record(b.value) << "|" << port_fields(b.outputs, 'o')
        << "\"];\n";
  }
  for (const auto& w : c.wires()) {
    const auto type = c.source_type(w.source);
    out << "  n" << w.source.box << ":o" << w.source.port << " -> n"
        << w.target.box << ":i" << w.target.port << " [label=\""
        << (type ? type->name() : std::string("?")) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace wdalg
