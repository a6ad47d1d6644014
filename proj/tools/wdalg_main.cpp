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

// Command-line front end. Exit codes: 0 success (or "equal", "valid",
// "engines agree"), 2 a negative answer, 1 any error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wdalg/diagram.hpp"
#include "wdalg/equality.hpp"
#include "wdalg/expr.hpp"
#include "wdalg/oracle.hpp"
#include "wdalg/serialize.hpp"
#include "wdalg/smc.hpp"

namespace {

using nlohmann::ordered_json;
using wdalg::Error;
using wdalg::ErrorKind;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kNegative = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::Io, "cannot open '" + path + "'");
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') {
      std::cout << '\n';
    }
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorKind::Io, "cannot write '" + path + "'");
  }
  out << text;
  if (!text.empty() && text.back() != '\n') {
    out << '\n';
  }
}

ordered_json types_json(const wdalg::TypeList& ts) {
  ordered_json out = ordered_json::array();
  for (const auto& t : ts) {
    out.push_back(t.name());
  }
  return out;
}

wdalg::smc::Morphism compile_term(const wdalg::expr::Program& p,
                                  const std::string& name) {
  return wdalg::expr::compile(*p.term(name).expr, p.signature);
}

struct Options {
  bool json = false;
  std::string file;
  std::string file2;
  std::vector<std::string> terms;
  std::string output;
  std::string mode = "strict";
  bool witness = false;
  int at = 1;
};

int cmd_parse(const Options& o) {
  const auto p = wdalg::expr::parse(read_file(o.file));
  if (o.json) {
    ordered_json j;
    j["objects"] = ordered_json::array();
    for (const auto& ob : p.signature.objects()) {
      j["objects"].push_back(ob.name());
    }
    j["generators"] = ordered_json::array();
    for (const auto& g : p.signature.generators()) {
      j["generators"].push_back({{"name", g.name},
                                 {"dom", types_json(g.type.dom)},
                                 {"cod", types_json(g.type.cod)}});
    }
    j["terms"] = ordered_json::array();
    for (const auto& t : p.terms) {
      j["terms"].push_back({{"name", t.name},
                            {"dom", types_json(t.type.dom)},
                            {"cod", types_json(t.type.cod)},
                            {"expr", wdalg::expr::print(*t.expr)}});
    }
    std::cout << j.dump() << '\n';
    return kOk;
  }
  std::cout << "objects: " << p.signature.objects().size() << '\n';
  for (const auto& g : p.signature.generators()) {
    std::cout << "hom " << g.name << " : " << wdalg::expr::print(g.type.dom)
              << " -> " << wdalg::expr::print(g.type.cod) << '\n';
  }
  for (const auto& t : p.terms) {
    std::cout << "term " << t.name << " : " << wdalg::expr::print(t.type.dom)
              << " -> " << wdalg::expr::print(t.type.cod) << '\n';
  }
  return kOk;
}

int cmd_compose(const Options& o) {
  if (o.terms.size() != 2) {
    throw Error(ErrorKind::SyntaxError, "compose needs exactly two --term");
  }
  const auto p = wdalg::expr::parse(read_file(o.file));
  const auto h = wdalg::smc::compose(compile_term(p, o.terms[0]),
                                     compile_term(p, o.terms[1]));
  write_output(o.output, wdalg::to_json(h.diagram()));
  return kOk;
}

int cmd_equal(const Options& o) {
  if (o.terms.size() != 2) {
    throw Error(ErrorKind::SyntaxError, "equal needs exactly two --term");
  }
  const auto p = wdalg::expr::parse(read_file(o.file));
  const auto a = compile_term(p, o.terms[0]);
  const auto b = compile_term(p, o.terms[1]);
  const auto iso = wdalg::find_isomorphism(a.diagram(), b.diagram());
  if (o.json) {
    ordered_json j;
    j["equal"] = iso.has_value();
    if (o.witness && iso) {
      j["witness"] = ordered_json::array();
      for (const auto& [from, to] : *iso) {
        j["witness"].push_back({from, to});
      }
    }
    std::cout << j.dump() << '\n';
  } else {
    std::cout << (iso ? "equal" : "not equal") << '\n';
    if (o.witness && iso) {
      for (const auto& [from, to] : *iso) {
        std::cout << from << " -> " << to << '\n';
      }
    }
  }
  return iso ? kOk : kNegative;
}

int cmd_normalize(const Options& o) {
  if (o.terms.size() != 1) {
    throw Error(ErrorKind::SyntaxError, "normalize needs exactly one --term");
  }
  const auto p = wdalg::expr::parse(read_file(o.file));
  write_output(o.output,
               wdalg::canonical_json(compile_term(p, o.terms[0]).diagram()));
  return kOk;
}

int cmd_render(const Options& o) {
  if (o.terms.size() != 1) {
    throw Error(ErrorKind::SyntaxError, "render needs exactly one --term");
  }
  const auto p = wdalg::expr::parse(read_file(o.file));
  write_output(o.output,
               wdalg::export_dot(compile_term(p, o.terms[0]).diagram()));
  return kOk;
}

wdalg::Mode parse_mode(const std::string& m) {
  return m == "general" ? wdalg::Mode::general : wdalg::Mode::strict;
}

int cmd_validate(const Options& o) {
  const auto mode = parse_mode(o.mode);
  const auto d = wdalg::from_json_unchecked(read_file(o.file), mode);
  const auto report = wdalg::validate(d, mode);
  if (o.json) {
    std::cout << wdalg::report_to_json(report) << '\n';
  } else if (report.ok()) {
    std::cout << "valid (" << wdalg::to_string(mode) << ")\n";
  } else {
    for (const auto& v : report.violations) {
      std::cout << wdalg::to_string(v.kind) << ": " << v.message << '\n';
    }
  }
  return report.ok() ? kOk : kNegative;
}

int cmd_oracle(const Options& o) {
  const auto host = wdalg::from_json(read_file(o.file));
  const auto sub = wdalg::from_json(read_file(o.file2));
  const auto report = wdalg::cross_check(host, o.at, sub);
  if (o.json) {
    ordered_json j;
    j["span_iso"] = report.span_iso;
    j["cases_agree"] = report.cases_agree;
    j["mismatches"] = report.mismatches;
    std::cout << j.dump() << '\n';
  } else {
    std::cout << (report.span_iso ? "span-isomorphic" : "NOT span-isomorphic")
              << '\n'
              << (report.cases_agree ? "cases agree" : "cases differ") << '\n';
    for (const auto& m : report.mismatches) {
      std::cout << "  " << m << '\n';
    }
    if (!report.span_iso) {
      std::cout << "substitution:\n"
                << report.via_substitution.matrix().dump() << "formula:\n"
                << report.via_formula.matrix().dump();
    }
  }
  return report.ok() ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wiring diagram algebra"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json, "machine-readable output");

  auto* parse = app.add_subcommand("parse", "typecheck a source file");
  parse->add_option("FILE", o.file)->required();

  auto* compose = app.add_subcommand("compose", "compose two terms A ; B");
  compose->add_option("FILE", o.file)->required();
  compose->add_option("--term", o.terms)->required();
  compose->add_option("-o,--output", o.output);

  auto* equal = app.add_subcommand("equal", "decide equality of two terms");
  equal->add_option("FILE", o.file)->required();
  equal->add_option("--term", o.terms)->required();
  equal->add_flag("--witness", o.witness, "print the box bijection");

  auto* normalize = app.add_subcommand("normalize", "canonical JSON");
  normalize->add_option("FILE", o.file)->required();
  normalize->add_option("--term", o.terms)->required();
  normalize->add_option("-o,--output", o.output);

  auto* render = app.add_subcommand("render", "Graphviz DOT");
  render->add_option("FILE", o.file)->required();
  render->add_option("--term", o.terms)->required();
  render->add_option("-o,--output", o.output);

  auto* validate = app.add_subcommand("validate", "check a JSON diagram");
  validate->add_option("IN", o.file)->required();
  validate->add_option("--mode", o.mode)
      ->check(CLI::IsMember({"strict", "general"}));

  auto* oracle =
      app.add_subcommand("oracle", "compare substitution with the formula");
  oracle->add_option("IN", o.file)->required();
  oracle->add_option("SUB", o.file2)->required();
  oracle->add_option("--at", o.at, "1-based inner box index")->required();

  for (auto* sub : app.get_subcommands({})) {
    sub->add_flag("--json", o.json, "machine-readable output");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kFailure;
  }

  try {
    if (parse->parsed()) return cmd_parse(o);
    if (compose->parsed()) return cmd_compose(o);
    if (equal->parsed()) return cmd_equal(o);
    if (normalize->parsed()) return cmd_normalize(o);
    if (render->parsed()) return cmd_render(o);
    if (validate->parsed()) return cmd_validate(o);
    if (oracle->parsed()) return cmd_oracle(o);
  } catch (const std::exception& e) {
    if (o.json) {
      std::cout << ordered_json{{"error", e.what()}}.dump() << '\n';
    } else {
      std::cerr << "error: " << e.what() << '\n';
    }
  }
  return kFailure;
}
