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

// A small text language for symmetric monoidal expressions.
//
//   # comment
//   ob x y z
//   hom f : x -> x*y
//   hom g : y*z -> z
//   term h = (f * id[z]) ; (id[x] * g)
//
// '*' is the tensor product and binds tighter than ';' (composition); both
// associate to the left. Atoms: generator or earlier term names, I (the unit),
// id[A], braid[A|B] and perm[A | s1 s2 .. sn], which sends input k to output
// sk. Object lists are '*'-separated object names, with I for the empty list.

#ifndef WDALG_EXPR_HPP_
#define WDALG_EXPR_HPP_

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wdalg/diagram.hpp"
#include "wdalg/error.hpp"
#include "wdalg/smc.hpp"

namespace wdalg::expr {

// SyntaxError, UnknownSymbol or TypeError at a source position (1-based).
class SourceError : public Error {
 public:
  SourceError(ErrorKind kind, int line, int column, const std::string& what)
      : Error(kind, std::to_string(line) + ":" + std::to_string(column) +
                        ": " + what),
        line_(line),
        column_(column) {}

  [[nodiscard]] int line() const noexcept { return line_; }
  [[nodiscard]] int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

struct Typing {
  TypeList dom;
  TypeList cod;

  friend bool operator==(const Typing&, const Typing&) = default;
};

struct GeneratorDecl {
  std::string name;
  Typing type;
};

class Signature {
 public:
  // Throws TypeError on redeclaration.
  void add_object(const PortType& object);
  // Throws UnknownSymbol for undeclared objects, TypeError on redeclaration.
  void add_generator(const std::string& name, Typing type);

  [[nodiscard]] bool has_object(const PortType& object) const;
  [[nodiscard]] const GeneratorDecl* find(std::string_view name) const;
  // Throws UnknownSymbol.
  [[nodiscard]] const GeneratorDecl& generator(std::string_view name) const;

  [[nodiscard]] const std::vector<PortType>& objects() const noexcept {
    return objects_;
  }
  [[nodiscard]] const std::vector<GeneratorDecl>& generators() const noexcept {
    return generators_;
  }

 private:
  std::vector<PortType> objects_;
  std::vector<GeneratorDecl> generators_;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Gen {
  std::string name;
};
struct Id {
  TypeList types;
};
struct Braid {
  TypeList left;
  TypeList right;
};
struct Perm {
  TypeList types;
  std::vector<int> sigma;
};
struct Seq {
  ExprPtr lhs;
  ExprPtr rhs;
};
struct Tensor {
  ExprPtr lhs;
  ExprPtr rhs;
};
struct Unit {};

struct Expr {
  std::variant<Gen, Id, Braid, Perm, Seq, Tensor, Unit> node;
};

// Deep structural comparison.
bool operator==(const Expr& a, const Expr& b);

ExprPtr gen(std::string name);
ExprPtr identity(TypeList types);
ExprPtr braid(TypeList left, TypeList right);
ExprPtr perm(TypeList types, std::vector<int> sigma);
ExprPtr seq(ExprPtr lhs, ExprPtr rhs);
ExprPtr tensor(ExprPtr lhs, ExprPtr rhs);
ExprPtr unit();

// Throws UnknownSymbol, TypeError or BadPermutation.
Typing typecheck(const Expr& e, const Signature& sig);

// Source text with minimal parentheses; parse() reads it back to an equal
// tree.
std::string print(const Expr& e);
std::string print(const TypeList& objects);

smc::Morphism compile(const Expr& e, const Signature& sig);

struct Term {
  std::string name;
  ExprPtr expr;
  Typing type;
};

struct Program {
  Signature signature;
  std::vector<Term> terms;

  // Throws UnknownSymbol.
  [[nodiscard]] const Term& term(std::string_view name) const;
};

// Throws SourceError. Term names used inside later terms are expanded in
// place, so every stored expression mentions generators only.
Program parse(std::string_view source);

// Declarations and terms as parseable source.
std::string print(const Program& program);

}  // namespace wdalg::expr

#endif  // WDALG_EXPR_HPP_
