// Copyright 2026 The Ontosem Authors.
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

#include "ontosem/logic_form.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "ontosem/error.hpp"

namespace ontosem {

std::string_view format(Quantifier q) {
  switch (q) {
    case Quantifier::Exists: return "exists";
    case Quantifier::ExistsUnique: return "exists1";
    case Quantifier::Forall: return "forall";
  }
  return "";
}

std::string_view format(Tag t) {
  switch (t) {
    case Tag::None: return "";
    case Tag::Does: return "does";
    case Tag::Did: return "did";
    case Tag::Can: return "can";
  }
  return "";
}

bool isVariableName(std::string_view name) {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
  return std::all_of(name.begin() + 1, name.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) != 0;
  });
}

Term Term::var(std::string id, std::optional<AnnotatedType> t) {
  Term out;
  out.kind = Kind::Var;
  out.name = std::move(id);
  out.type = std::move(t);
  return out;
}

Term Term::constant(std::string label, std::optional<AnnotatedType> t) {
  Term out;
  out.kind = Kind::Const;
  out.name = std::move(label);
  out.type = std::move(t);
  return out;
}

Term Term::number(std::int64_t v) {
  Term out;
  out.kind = Kind::Num;
  out.value = v;
  return out;
}

Term Term::named(std::string name, std::optional<AnnotatedType> t) {
  return isVariableName(name) ? var(std::move(name), std::move(t))
                              : constant(std::move(name), std::move(t));
}

struct Formula::Node {
  Kind kind = Kind::Bottom;
  Quantifier quantifier = Quantifier::Exists;
  Tag tag = Tag::None;
  std::string name;
  std::vector<Term> terms;
  std::vector<Formula> children;
};

Formula::Formula() {
  static const auto bottomNode = std::make_shared<const Node>();
  node_ = bottomNode;
}
Formula::Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

Formula Formula::quant(Quantifier q, Term binder, Formula body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Quant;
  n->quantifier = q;
  n->terms.push_back(std::move(binder));
  n->children.push_back(std::move(body));
  return Formula(std::move(n));
}

Formula Formula::pred(std::string name, std::vector<Term> args, Tag tag) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Pred;
  n->name = std::move(name);
  n->terms = std::move(args);
  n->tag = tag;
  return Formula(std::move(n));
}

Formula Formula::conj(std::vector<Formula> children) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::And;
  n->children = std::move(children);
  return Formula(std::move(n));
}

Formula Formula::disj(std::vector<Formula> children) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Or;
  n->children = std::move(children);
  return Formula(std::move(n));
}

Formula Formula::implies(Formula antecedent, Formula consequent) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Implies;
  n->children = {std::move(antecedent), std::move(consequent)};
  return Formula(std::move(n));
}

Formula Formula::equal(Term lhs, Term rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Equal;
  n->terms = {std::move(lhs), std::move(rhs)};
  return Formula(std::move(n));
}

Formula Formula::bottom() { return Formula(); }

Formula::Kind Formula::kind() const { return node_->kind; }
Quantifier Formula::quantifier() const { return node_->quantifier; }
const Term& Formula::binder() const { return node_->terms.at(0); }
const Formula& Formula::body() const { return node_->children.at(0); }
const std::string& Formula::name() const { return node_->name; }
Tag Formula::tag() const { return node_->tag; }
std::span<const Term> Formula::args() const { return node_->terms; }
std::span<const Formula> Formula::children() const { return node_->children; }
const Formula& Formula::antecedent() const { return node_->children.at(0); }
const Formula& Formula::consequent() const { return node_->children.at(1); }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.kind == y.kind && x.quantifier == y.quantifier && x.tag == y.tag &&
         x.name == y.name && x.terms == y.terms && x.children == y.children;
}

// --- simplify -------------------------------------------------------------

Formula simplify(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Quant: {
      Formula body = simplify(f.body());
      if (body.isBottom()) return Formula::bottom();
      return Formula::quant(f.quantifier(), f.binder(), std::move(body));
    }
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      const bool isAnd = f.kind() == Formula::Kind::And;
      std::vector<Formula> kids;
      for (const auto& c : f.children()) {
        Formula s = simplify(c);
        if (s.isBottom()) {
          if (isAnd) return Formula::bottom();
          continue;
        }
        if (s.kind() == f.kind()) {
          kids.insert(kids.end(), s.children().begin(), s.children().end());
        } else {
          kids.push_back(std::move(s));
        }
      }
      if (!isAnd && kids.empty()) return Formula::bottom();
      if (kids.size() == 1) return kids.front();
      return isAnd ? Formula::conj(std::move(kids))
                   : Formula::disj(std::move(kids));
    }
    case Formula::Kind::Implies:
      return Formula::implies(simplify(f.antecedent()),
                              simplify(f.consequent()));
    default:
      return f;
  }
}

// --- expandExistence ---------------------------------------------------------

namespace {

bool universalClass(Quantifier q) { return q == Quantifier::Forall; }

ExistenceMark markOf(const Formula& f) {
  if (f.kind() != Formula::Kind::Quant || !f.binder().type) {
    return ExistenceMark::Plain;
  }
  return f.binder().type->existence;
}

Formula expand(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Quant: {
      const ExistenceMark mark = markOf(f);
      if (mark == ExistenceMark::Plain) {
        return Formula::quant(f.quantifier(), f.binder(), expand(f.body()));
      }
      // Gather the run of directly nested binders sharing this mark.
      std::vector<std::pair<Quantifier, Term>> chain;
      const Formula* cur = &f;
      const bool universal = universalClass(f.quantifier());
      while (markOf(*cur) == mark &&
             (mark == ExistenceMark::NeedNotExist ||
              universalClass(cur->quantifier()) == universal)) {
        chain.emplace_back(cur->quantifier(), cur->binder());
        cur = &cur->body();
      }
      Formula inner = expand(*cur);
      std::vector<Formula> exists;
      for (auto& [q, term] : chain) {
        term.type->existence = ExistenceMark::Plain;
        exists.push_back(
            Formula::pred("Exist", {Term::named(term.name)}));
      }
      const bool conditional =
          mark == ExistenceMark::NeedNotExist || universal;
      Formula body;
      if (conditional) {
        if (inner.kind() == Formula::Kind::Implies) {
          exists.push_back(inner.antecedent());
          body = Formula::implies(Formula::conj(std::move(exists)),
                                  inner.consequent());
        } else {
          body = Formula::implies(Formula::conj(std::move(exists)),
                                  std::move(inner));
        }
      } else {
        exists.push_back(std::move(inner));
        body = Formula::conj(std::move(exists));
      }
      for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        const Quantifier q = mark == ExistenceMark::NeedNotExist
                                 ? Quantifier::Forall
                                 : it->first;
        body = Formula::quant(q, it->second, std::move(body));
      }
      return body;
    }
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      std::vector<Formula> kids;
      for (const auto& c : f.children()) kids.push_back(expand(c));
      return f.kind() == Formula::Kind::And ? Formula::conj(std::move(kids))
                                            : Formula::disj(std::move(kids));
    }
    case Formula::Kind::Implies:
      return Formula::implies(expand(f.antecedent()), expand(f.consequent()));
    default:
      return f;
  }
}

}  // namespace

Formula expandExistence(const Formula& f) { return simplify(expand(f)); }

// --- alphaEq ---------------------------------------------------------------

namespace {

struct Scope {
  std::vector<std::string> left;
  std::vector<std::string> right;
};

// Innermost binding index, or -1 when free.
long bindingIndex(const std::vector<std::string>& stack,
                  const std::string& name) {
  for (long i = static_cast<long>(stack.size()) - 1; i >= 0; --i) {
    if (stack[static_cast<std::size_t>(i)] == name) return i;
  }
  return -1;
}

bool termEq(const Term& a, const Term& b, const Scope& scope) {
  if (a.kind != b.kind || a.type != b.type) return false;
  switch (a.kind) {
    case Term::Kind::Num:
      return a.value == b.value;
    case Term::Kind::Const:
      return a.name == b.name;
    case Term::Kind::Var: {
      long i = bindingIndex(scope.left, a.name);
      long j = bindingIndex(scope.right, b.name);
      if (i < 0 && j < 0) return a.name == b.name;
      return i == j;
    }
  }
  return false;
}

bool eq(const Formula& f, const Formula& g, Scope& scope);

bool multisetEq(std::span<const Formula> xs, std::span<const Formula> ys,
                Scope& scope) {
  if (xs.size() != ys.size()) return false;
  std::vector<bool> used(ys.size(), false);
  for (const auto& x : xs) {
    bool matched = false;
    for (std::size_t j = 0; j < ys.size(); ++j) {
      if (!used[j] && eq(x, ys[j], scope)) {
        used[j] = true;
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

bool eq(const Formula& f, const Formula& g, Scope& scope) {
  if (f.kind() != g.kind()) return false;
  switch (f.kind()) {
    case Formula::Kind::Bottom:
      return true;
    case Formula::Kind::Quant: {
      const Term& a = f.binder();
      const Term& b = g.binder();
      if (f.quantifier() != g.quantifier() || a.kind != b.kind ||
          a.type != b.type) {
        return false;
      }
      if (a.kind != Term::Kind::Var && a.name != b.name) return false;
      const bool pushed = a.kind == Term::Kind::Var;
      if (pushed) {
        scope.left.push_back(a.name);
        scope.right.push_back(b.name);
      }
      bool same = eq(f.body(), g.body(), scope);
      if (pushed) {
        scope.left.pop_back();
        scope.right.pop_back();
      }
      return same;
    }
    case Formula::Kind::Pred:
    case Formula::Kind::Equal: {
      if (f.name() != g.name() || f.tag() != g.tag() ||
          f.args().size() != g.args().size()) {
        return false;
      }
      for (std::size_t i = 0; i < f.args().size(); ++i) {
        if (!termEq(f.args()[i], g.args()[i], scope)) return false;
      }
      return true;
    }
    case Formula::Kind::And:
    case Formula::Kind::Or:
      return multisetEq(f.children(), g.children(), scope);
    case Formula::Kind::Implies:
      return eq(f.antecedent(), g.antecedent(), scope) &&
             eq(f.consequent(), g.consequent(), scope);
  }
  return false;
}

}  // namespace

bool alphaEq(const Formula& f, const Formula& g) {
  Scope scope;
  return eq(f, g, scope);
}

// --- render -----------------------------------------------------------------

namespace {

void renderTerm(std::ostream& os, const Term& t) {
  if (t.kind == Term::Kind::Num) {
    os << t.value;
  } else if (t.type) {
    os << '(' << t.name << " :: " << format(*t.type) << ')';
  } else {
    os << t.name;
  }
}

void renderTo(std::ostream& os, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Bottom:
      os << "#bottom";
      return;
    case Formula::Kind::Quant: {
      const Term& b = f.binder();
      os << '(' << format(f.quantifier()) << " (" << b.name << " :: "
         << (b.type ? format(*b.type) : std::string("Thing")) << ") ";
      renderTo(os, f.body());
      os << ')';
      return;
    }
    case Formula::Kind::Pred:
      os << '(' << f.name();
      if (f.tag() != Tag::None) os << '[' << format(f.tag()) << ']';
      for (const auto& a : f.args()) {
        os << ' ';
        renderTerm(os, a);
      }
      os << ')';
      return;
    case Formula::Kind::Equal:
      os << "(= ";
      renderTerm(os, f.args()[0]);
      os << ' ';
      renderTerm(os, f.args()[1]);
      os << ')';
      return;
    case Formula::Kind::And:
    case Formula::Kind::Or:
      os << '(' << (f.kind() == Formula::Kind::And ? "and" : "or");
      for (const auto& c : f.children()) {
        os << ' ';
        renderTo(os, c);
      }
      os << ')';
      return;
    case Formula::Kind::Implies:
      os << "(implies ";
      renderTo(os, f.antecedent());
      os << ' ';
      renderTo(os, f.consequent());
      os << ')';
      return;
  }
}

}  // namespace

std::string render(const Formula& f) {
  std::ostringstream os;
  renderTo(os, f);
  return os.str();
}

std::string render(const Term& t) {
  std::ostringstream os;
  renderTerm(os, t);
  return os.str();
}

// --- parse ----------------------------------------------------------------

namespace {

class FormulaParser {
 public:
  explicit FormulaParser(std::string_view text) { lex(text); }

  Formula parseAll() {
    Formula f = formula();
    if (pos_ != tokens_.size()) fail("trailing input after formula");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::Syntax, "formula: " + why);
  }

  void lex(std::string_view text) {
    std::size_t i = 0;
    while (i < text.size()) {
      const char c = text[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
      } else if (c == '(' || c == ')') {
        tokens_.emplace_back(1, c);
        ++i;
      } else {
        std::size_t j = i;
        while (j < text.size() && text[j] != '(' && text[j] != ')' &&
               !std::isspace(static_cast<unsigned char>(text[j]))) {
          ++j;
        }
        tokens_.emplace_back(text.substr(i, j - i));
        i = j;
      }
    }
  }

  const std::string& peek() const {
    if (pos_ >= tokens_.size()) fail("unexpected end of input");
    return tokens_[pos_];
  }
  std::string next() {
    const std::string& t = peek();
    ++pos_;
    return t;
  }
  void expect(std::string_view tok) {
    if (next() != tok) fail("expected '" + std::string(tok) + "'");
  }

  static bool isNumber(const std::string& s) {
    std::size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
    return i < s.size() &&
           std::all_of(s.begin() + static_cast<long>(i), s.end(), [](char c) {
             return std::isdigit(static_cast<unsigned char>(c)) != 0;
           });
  }

  // "(name :: Type)" after the opening parenthesis was seen.
  Term typedTerm() {
    std::string name = next();
    if (name == "(" || name == ")" || isNumber(name)) fail("bad binder name");
    expect("::");
    AnnotatedType type = parseAnnotatedType(next());
    expect(")");
    return Term::named(std::move(name), std::move(type));
  }

  Term term() {
    std::string tok = next();
    if (tok == "(") return typedTerm();
    if (tok == ")") fail("unexpected ')'");
    if (isNumber(tok)) return Term::number(std::stoll(tok));
    return Term::named(std::move(tok));
  }

  Formula formula() {
    std::string tok = next();
    if (tok == "#bottom") return Formula::bottom();
    if (tok != "(") fail("expected '(' or #bottom, got '" + tok + "'");
    std::string head = next();
    Formula out;
    if (head == "exists" || head == "exists1" || head == "forall") {
      const Quantifier q = head == "exists"    ? Quantifier::Exists
                           : head == "exists1" ? Quantifier::ExistsUnique
                                               : Quantifier::Forall;
      expect("(");
      Term binder = typedTerm();
      Formula body = formula();
      out = Formula::quant(q, std::move(binder), std::move(body));
    } else if (head == "and" || head == "or") {
      std::vector<Formula> kids;
      while (peek() != ")") kids.push_back(formula());
      out = head == "and" ? Formula::conj(std::move(kids))
                          : Formula::disj(std::move(kids));
    } else if (head == "implies") {
      Formula a = formula();
      Formula c = formula();
      out = Formula::implies(std::move(a), std::move(c));
    } else if (head == "=") {
      Term l = term();
      Term r = term();
      out = Formula::equal(std::move(l), std::move(r));
    } else if (head == "(" || head == ")" || head == "#bottom") {
      fail("expected a predicate name");
    } else {
      Tag tag = Tag::None;
      std::string name = head;
      auto open = head.find('[');
      if (open != std::string::npos) {
        if (head.back() != ']') fail("bad tag in '" + head + "'");
        const std::string t = head.substr(open + 1, head.size() - open - 2);
        name = head.substr(0, open);
        if (t == "does") tag = Tag::Does;
        else if (t == "did") tag = Tag::Did;
        else if (t == "can") tag = Tag::Can;
        else fail("unknown tag '" + t + "'");
      }
      std::vector<Term> args;
      while (peek() != ")") args.push_back(term());
      out = Formula::pred(std::move(name), std::move(args), tag);
    }
    expect(")");
    return out;
  }

  std::vector<std::string> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parseFormula(std::string_view text) {
  return FormulaParser(text).parseAll();
}

// --- traversal helpers ------------------------------------------------------

namespace {

void collect(const Formula& f, std::vector<Formula>& out) {
  out.push_back(f);
  if (f.kind() == Formula::Kind::Quant) {
    collect(f.body(), out);
  } else {
    for (const auto& c : f.children()) collect(c, out);
  }
}

void freeIn(const Formula& f, std::vector<std::string>& bound,
            std::vector<std::string>& out) {
  auto note = [&](const Term& t) {
    if (t.kind == Term::Kind::Num) return;
    if (std::find(bound.begin(), bound.end(), t.name) != bound.end()) return;
    if (std::find(out.begin(), out.end(), t.name) == out.end()) {
      out.push_back(t.name);
    }
  };
  switch (f.kind()) {
    case Formula::Kind::Quant:
      bound.push_back(f.binder().name);
      freeIn(f.body(), bound, out);
      bound.pop_back();
      return;
    case Formula::Kind::Pred:
    case Formula::Kind::Equal:
      for (const auto& a : f.args()) note(a);
      return;
    default:
      for (const auto& c : f.children()) freeIn(c, bound, out);
  }
}

}  // namespace

std::vector<Formula> subformulas(const Formula& f) {
  std::vector<Formula> out;
  collect(f, out);
  return out;
}

std::vector<std::string> freeNames(const Formula& f) {
  std::vector<std::string> bound;
  std::vector<std::string> out;
  freeIn(f, bound, out);
  return out;
}

}  // namespace ontosem
