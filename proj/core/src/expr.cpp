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

#include "wdalg/expr.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <utility>

namespace wdalg::expr {

// Signature ----------------------------------------------------------------

void Signature::add_object(const PortType& object) {
  if (has_object(object)) {
    throw Error(ErrorKind::TypeError,
                "object '" + object.name() + "' declared twice");
  }
  objects_.push_back(object);
}

void Signature::add_generator(const std::string& name, Typing type) {
  if (find(name) != nullptr) {
    throw Error(ErrorKind::TypeError, "generator '" + name + "' declared twice");
  }
  for (const auto* list : {&type.dom, &type.cod}) {
    for (const auto& t : *list) {
      if (!has_object(t)) {
        throw Error(ErrorKind::UnknownSymbol,
                    "unknown object '" + t.name() + "'");
      }
    }
  }
  generators_.push_back({name, std::move(type)});
}

bool Signature::has_object(const PortType& object) const {
  return std::find(objects_.begin(), objects_.end(), object) != objects_.end();
}

const GeneratorDecl* Signature::find(std::string_view name) const {
  for (const auto& g : generators_) {
    if (g.name == name) {
      return &g;
    }
  }
  return nullptr;
}

const GeneratorDecl& Signature::generator(std::string_view name) const {
  const auto* g = find(name);
  if (g == nullptr) {
    throw Error(ErrorKind::UnknownSymbol,
                "unknown generator '" + std::string(name) + "'");
  }
  return *g;
}

// Trees --------------------------------------------------------------------

namespace {

template <class... Fs>
struct Overload : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overload(Fs...) -> Overload<Fs...>;

ExprPtr make(decltype(Expr::node) node) {
  return std::make_shared<const Expr>(Expr{std::move(node)});
}

TypeList concat(TypeList a, const TypeList& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

void check_permutation(const std::vector<int>& sigma, std::size_t n) {
  if (sigma.size() != n) {
    throw Error(ErrorKind::BadPermutation,
                "permutation has " + std::to_string(sigma.size()) +
                    " entries for " + std::to_string(n) + " objects");
  }
  std::vector<int> sorted = sigma;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 0; k < n; ++k) {
    if (sorted[k] != static_cast<int>(k) + 1) {
      throw Error(ErrorKind::BadPermutation,
                  "images must be a permutation of 1.." + std::to_string(n));
    }
  }
}

}  // namespace

bool operator==(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) {
    return false;
  }
  return std::visit(
      Overload{
          [&](const Gen& x) { return x.name == std::get<Gen>(b.node).name; },
          [&](const Id& x) { return x.types == std::get<Id>(b.node).types; },
          [&](const Braid& x) {
            const auto& y = std::get<Braid>(b.node);
            return x.left == y.left && x.right == y.right;
          },
          [&](const Perm& x) {
            const auto& y = std::get<Perm>(b.node);
            return x.types == y.types && x.sigma == y.sigma;
          },
          [&](const Seq& x) {
            const auto& y = std::get<Seq>(b.node);
            return *x.lhs == *y.lhs && *x.rhs == *y.rhs;
          },
          [&](const Tensor& x) {
            const auto& y = std::get<Tensor>(b.node);
            return *x.lhs == *y.lhs && *x.rhs == *y.rhs;
          },
          [](const Unit&) { return true; },
      },
      a.node);
}

ExprPtr gen(std::string name) { return make(Gen{std::move(name)}); }
ExprPtr identity(TypeList types) { return make(Id{std::move(types)}); }
ExprPtr braid(TypeList left, TypeList right) {
  return make(Braid{std::move(left), std::move(right)});
}
ExprPtr perm(TypeList types, std::vector<int> sigma) {
  return make(Perm{std::move(types), std::move(sigma)});
}
ExprPtr seq(ExprPtr lhs, ExprPtr rhs) {
  return make(Seq{std::move(lhs), std::move(rhs)});
}
ExprPtr tensor(ExprPtr lhs, ExprPtr rhs) {
  return make(Tensor{std::move(lhs), std::move(rhs)});
}
ExprPtr unit() { return make(Unit{}); }

namespace {

std::string mismatch_message(const TypeList& expected,
                             const TypeList& actual) {
  return "codomain " + to_string(actual) + " does not match domain " +
         to_string(expected) + " (expected " + to_string(expected) +
         ", actual " + to_string(actual) + ")";
}

void check_objects(const TypeList& types, const Signature& sig) {
  for (const auto& t : types) {
    if (!sig.has_object(t)) {
      throw Error(ErrorKind::UnknownSymbol,
                  "unknown object '" + t.name() + "'");
    }
  }
}

}  // namespace

Typing typecheck(const Expr& e, const Signature& sig) {
  return std::visit(
      Overload{
          [&](const Gen& x) { return sig.generator(x.name).type; },
          [&](const Id& x) {
            check_objects(x.types, sig);
            return Typing{x.types, x.types};
          },
          [&](const Braid& x) {
            check_objects(x.left, sig);
            check_objects(x.right, sig);
            return Typing{concat(x.left, x.right), concat(x.right, x.left)};
          },
          [&](const Perm& x) {
            check_objects(x.types, sig);
            check_permutation(x.sigma, x.types.size());
            TypeList cod = x.types;
            for (std::size_t k = 0; k < x.sigma.size(); ++k) {
              cod[static_cast<std::size_t>(x.sigma[k]) - 1] = x.types[k];
            }
            return Typing{x.types, cod};
          },
          [&](const Seq& x) {
            const Typing l = typecheck(*x.lhs, sig);
            const Typing r = typecheck(*x.rhs, sig);
            if (l.cod != r.dom) {
              throw Error(ErrorKind::TypeError,
                          mismatch_message(r.dom, l.cod));
            }
            return Typing{l.dom, r.cod};
          },
          [&](const Tensor& x) {
            const Typing l = typecheck(*x.lhs, sig);
            const Typing r = typecheck(*x.rhs, sig);
            return Typing{concat(l.dom, r.dom), concat(l.cod, r.cod)};
          },
          [](const Unit&) { return Typing{}; },
      },
      e.node);
}

// Printing -----------------------------------------------------------------

std::string print(const TypeList& objects) {
  if (objects.empty()) {
    return "I";
  }
  std::string out;
  for (std::size_t k = 0; k < objects.size(); ++k) {
    out += (k > 0 ? "*" : "") + objects[k].name();
  }
  return out;
}

namespace {

enum class Level { seq, tensor, atom };

std::string print_at(const Expr& e, Level level) {
  const bool is_seq = std::holds_alternative<Seq>(e.node);
  const bool is_tensor = std::holds_alternative<Tensor>(e.node);
  if ((is_seq && level != Level::seq) || (is_tensor && level == Level::atom)) {
    return "(" + print_at(e, Level::seq) + ")";
  }
  return std::visit(
      Overload{
          [](const Gen& x) { return x.name; },
          [](const Id& x) { return "id[" + print(x.types) + "]"; },
          [](const Braid& x) {
            return "braid[" + print(x.left) + "|" + print(x.right) + "]";
          },
          [](const Perm& x) {
            std::string out = "perm[" + print(x.types) + " |";
            for (int s : x.sigma) {
              out += " " + std::to_string(s);
            }
            return out + "]";
          },
          [](const Seq& x) {
            return print_at(*x.lhs, Level::seq) + " ; " +
                   print_at(*x.rhs, Level::tensor);
          },
          [](const Tensor& x) {
            return print_at(*x.lhs, Level::tensor) + " * " +
                   print_at(*x.rhs, Level::atom);
          },
          [](const Unit&) { return std::string("I"); },
      },
      e.node);
}

}  // namespace

std::string print(const Expr& e) { return print_at(e, Level::seq); }

std::string print(const Program& program) {
  std::ostringstream out;
  const auto& sig = program.signature;
  if (!sig.objects().empty()) {
    out << "ob";
    for (const auto& o : sig.objects()) {
      out << ' ' << o.name();
    }
    out << '\n';
  }
  for (const auto& g : sig.generators()) {
    out << "hom " << g.name << " : " << print(g.type.dom) << " -> "
        << print(g.type.cod) << '\n';
  }
  for (const auto& t : program.terms) {
    out << "term " << t.name << " = " << print(*t.expr) << '\n';
  }
  return out.str();
}

// Compilation --------------------------------------------------------------

smc::Morphism compile(const Expr& e, const Signature& sig) {
  return std::visit(
      Overload{
          [&](const Gen& x) {
            const auto& g = sig.generator(x.name);
            return smc::generator(g.name, g.type.dom, g.type.cod);
          },
          [](const Id& x) { return smc::id(x.types); },
          [](const Braid& x) { return smc::braid(x.left, x.right); },
          [](const Perm& x) { return smc::permute(x.types, x.sigma); },
          [&](const Seq& x) {
            return smc::compose(compile(*x.lhs, sig), compile(*x.rhs, sig));
          },
          [&](const Tensor& x) {
            return smc::otimes(compile(*x.lhs, sig), compile(*x.rhs, sig));
          },
          [](const Unit&) { return smc::unit(); },
      },
      e.node);
}

const Term& Program::term(std::string_view name) const {
  for (const auto& t : terms) {
    if (t.name == name) {
      return t;
    }
  }
  throw Error(ErrorKind::UnknownSymbol,
              "unknown term '" + std::string(name) + "'");
}

// Parsing ------------------------------------------------------------------

namespace {

enum class Tok { ident, number, symbol, end };

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
}
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' ||
         c == '\'';
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c)) != 0) {
      advance(1);
    } else if (c == '#') {
      while (i < src.size() && src[i] != '\n') {
        advance(1);
      }
    } else if (ident_start(c)) {
      std::size_t j = i;
      while (j < src.size() && ident_char(src[j])) {
        ++j;
      }
      out.push_back({Tok::ident, std::string(src.substr(i, j - i)), line, col});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c)) != 0) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) {
        ++j;
      }
      out.push_back(
          {Tok::number, std::string(src.substr(i, j - i)), line, col});
      advance(j - i);
    } else if (src.substr(i, 2) == "->") {
      out.push_back({Tok::symbol, "->", line, col});
      advance(2);
    } else if (std::string_view(":*;()=[]|").find(c) !=
               std::string_view::npos) {
      out.push_back({Tok::symbol, std::string(1, c), line, col});
      advance(1);
    } else {
      throw SourceError(ErrorKind::SyntaxError, line, col,
                        std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::end, "", line, col});
  return out;
}

const std::set<std::string, std::less<>> kReserved = {
    "ob", "hom", "term", "id", "braid", "perm", "I"};

struct Typed {
  ExprPtr expr;
  Typing type;
};

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(lex(src)) {}

  Program run() {
    while (peek().kind != Tok::end) {
      statement();
    }
    return std::move(program_);
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  bool at_symbol(std::string_view s) const {
    return peek().kind == Tok::symbol && peek().text == s;
  }
  bool at_word(std::string_view s) const {
    return peek().kind == Tok::ident && peek().text == s;
  }

  [[noreturn]] void fail(ErrorKind kind, const Token& at,
                         const std::string& what) const {
    throw SourceError(kind, at.line, at.column, what);
  }

  std::string describe(const Token& t) const {
    return t.kind == Tok::end ? std::string("end of input")
                              : "'" + t.text + "'";
  }

  void expect(std::string_view s) {
    if (!at_symbol(s)) {
      fail(ErrorKind::SyntaxError, peek(),
           "expected '" + std::string(s) + "' but found " + describe(peek()));
    }
    ++pos_;
  }

  const Token& fresh_name(std::string_view what) {
    const Token& t = peek();
    if (t.kind != Tok::ident) {
      fail(ErrorKind::SyntaxError, t,
           "expected " + std::string(what) + " name but found " + describe(t));
    }
    if (kReserved.count(t.text) != 0) {
      fail(ErrorKind::SyntaxError, t, "'" + t.text + "' is a reserved word");
    }
    return next();
  }

  // Every statement kind rejects names already bound to anything.
  void check_unbound(const Token& t) const {
    const PortType probe(t.text);
    if (program_.signature.has_object(probe) ||
        program_.signature.find(t.text) != nullptr || find_term(t.text)) {
      fail(ErrorKind::TypeError, t, "'" + t.text + "' is already declared");
    }
  }

  const Term* find_term(std::string_view name) const {
    for (const auto& t : program_.terms) {
      if (t.name == name) {
        return &t;
      }
    }
    return nullptr;
  }

  void statement() {
    const Token& t = peek();
    if (at_word("ob")) {
      ++pos_;
      if (peek().kind != Tok::ident || kReserved.count(peek().text) != 0) {
        fail(ErrorKind::SyntaxError, peek(),
             "expected object names after 'ob'");
      }
      while (peek().kind == Tok::ident && kReserved.count(peek().text) == 0) {
        const Token& name = next();
        check_unbound(name);
        program_.signature.add_object(PortType(name.text));
      }
    } else if (at_word("hom")) {
      ++pos_;
      const Token& name = fresh_name("generator");
      check_unbound(name);
      expect(":");
      TypeList dom = objects();
      expect("->");
      TypeList cod = objects();
      program_.signature.add_generator(name.text, {dom, cod});
    } else if (at_word("term")) {
      ++pos_;
      const Token& name = fresh_name("term");
      check_unbound(name);
      expect("=");
      Typed e = expression();
      program_.terms.push_back({name.text, e.expr, e.type});
    } else {
      fail(ErrorKind::SyntaxError, t,
           "expected 'ob', 'hom' or 'term' but found " + describe(t));
    }
  }

  TypeList objects() {
    TypeList out;
    object_factor(out);
    while (at_symbol("*")) {
      ++pos_;
      object_factor(out);
    }
    return out;
  }

  void object_factor(TypeList& out) {
    const Token& t = peek();
    if (t.kind != Tok::ident) {
      fail(ErrorKind::SyntaxError, t,
           "expected an object but found " + describe(t));
    }
    ++pos_;
    if (t.text == "I") {
      return;
    }
    const PortType type(t.text);
    if (!program_.signature.has_object(type)) {
      fail(ErrorKind::UnknownSymbol, t, "unknown object '" + t.text + "'");
    }
    out.push_back(type);
  }

  Typed expression() {
    Typed lhs = tensor_term();
    while (at_symbol(";")) {
      const Token& op = next();
      Typed rhs = tensor_term();
      if (lhs.type.cod != rhs.type.dom) {
        fail(ErrorKind::TypeError, op,
             "cannot compose: " +
                 mismatch_message(rhs.type.dom, lhs.type.cod));
      }
      lhs = {seq(lhs.expr, rhs.expr), {lhs.type.dom, rhs.type.cod}};
    }
    return lhs;
  }

  Typed tensor_term() {
    Typed lhs = atom();
    while (at_symbol("*")) {
      ++pos_;
      Typed rhs = atom();
      lhs = {tensor(lhs.expr, rhs.expr),
             {concat(lhs.type.dom, rhs.type.dom),
              concat(lhs.type.cod, rhs.type.cod)}};
    }
    return lhs;
  }

  Typed atom() {
    const Token& t = peek();
    if (at_symbol("(")) {
      ++pos_;
      Typed e = expression();
      expect(")");
      return e;
    }
    if (t.kind != Tok::ident) {
      fail(ErrorKind::SyntaxError, t,
           "expected an expression but found " + describe(t));
    }
    ++pos_;
    if (t.text == "I") {
      return {unit(), {}};
    }
    if (t.text == "id") {
      expect("[");
      TypeList ts = objects();
      expect("]");
      return {identity(ts), {ts, ts}};
    }
    if (t.text == "braid") {
      expect("[");
      TypeList a = objects();
      expect("|");
      TypeList b = objects();
      expect("]");
      return {braid(a, b), {concat(a, b), concat(b, a)}};
    }
    if (t.text == "perm") {
      expect("[");
      TypeList ts = objects();
      expect("|");
      std::vector<int> sigma;
      while (peek().kind == Tok::number) {
        const Token& n = next();
        if (n.text.size() > 6) {
          fail(ErrorKind::BadPermutation, n, "image out of range");
        }
        sigma.push_back(std::stoi(n.text));
      }
      expect("]");
      ExprPtr e = perm(ts, sigma);
      try {
        return {e, typecheck(*e, program_.signature)};
      } catch (const Error& err) {
        fail(err.kind(), t, err.what());
      }
    }
    if (kReserved.count(t.text) != 0) {
      fail(ErrorKind::SyntaxError, t,
           "'" + t.text + "' cannot start an expression");
    }
    if (const auto* g = program_.signature.find(t.text)) {
      return {gen(t.text), g->type};
    }
    if (const Term* term = find_term(t.text)) {
      return {term->expr, term->type};
    }
    fail(ErrorKind::UnknownSymbol, t, "unknown symbol '" + t.text + "'");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Program program_;
};

}  // namespace

Program parse(std::string_view source) { return Parser(source).run(); }

}  // namespace wdalg::expr
