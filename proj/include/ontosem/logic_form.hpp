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

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ontosem/types.hpp"

namespace ontosem {

enum class Quantifier { Exists, ExistsUnique, Forall };

// Tense/modal superscript carried by a predicate occurrence.
enum class Tag { None, Does, Did, Can };

std::string_view format(Quantifier q);
std::string_view format(Tag t);

// Variables use the reserved name space [a-z][0-9]*; everything else that
// starts with a lowercase letter is a named constant (a proper-noun label).
bool isVariableName(std::string_view name);

struct Term {
  enum class Kind { Var, Const, Num };

  Kind kind = Kind::Var;
  std::string name;       // variable id or constant label; empty for Num
  std::int64_t value = 0;  // Num only
  // Required on quantifier binders. On predicate arguments it records an
  // occurrence-level type demand that has not been unified yet.
  std::optional<AnnotatedType> type;

  static Term var(std::string id, std::optional<AnnotatedType> t = {});
  static Term constant(std::string label, std::optional<AnnotatedType> t = {});
  static Term number(std::int64_t v);
  // Var or Const depending on the name space the identifier belongs to.
  static Term named(std::string name, std::optional<AnnotatedType> t = {});

  friend bool operator==(const Term&, const Term&) = default;
};

// Immutable logical-form tree with value semantics; copies share structure.
class Formula {
 public:
  enum class Kind { Quant, Pred, And, Or, Implies, Equal, Bottom };

  Formula();  // Bottom

  static Formula quant(Quantifier q, Term binder, Formula body);
  static Formula pred(std::string name, std::vector<Term> args,
                      Tag tag = Tag::None);
  static Formula conj(std::vector<Formula> children);
  static Formula disj(std::vector<Formula> children);
  static Formula implies(Formula antecedent, Formula consequent);
  static Formula equal(Term lhs, Term rhs);
  static Formula bottom();

  Kind kind() const;
  bool isBottom() const { return kind() == Kind::Bottom; }

  // Quant
  Quantifier quantifier() const;
  const Term& binder() const;
  const Formula& body() const;
  // Pred
  const std::string& name() const;
  Tag tag() const;
  // Pred arguments, or the two sides of Equal.
  std::span<const Term> args() const;
  // And / Or children; Implies as {antecedent, consequent}.
  std::span<const Formula> children() const;
  const Formula& antecedent() const;
  const Formula& consequent() const;

  // Structural equality (names matter, And/Or order matters).
  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

// Removes Bottom from And/Or (And with Bottom becomes Bottom, Or drops it),
// flattens nested And/Or, collapses singleton And/Or and lets Bottom absorb
// a quantifier over it.
Formula simplify(const Formula& f);

// Rewrites existence-marked binders into explicit Exist conjuncts:
//   (exists (x :: T!E) F)  ->  (exists (x :: T) (and (Exist x) F))
//   (exists (x :: T?E) F)  ->  (forall (x :: T) (implies (Exist x) F))
// Directly nested binders with the same mark share one Exist block. Marks
// are cleared, so the rewrite is idempotent.
Formula expandExistence(const Formula& f);

// Equality up to renaming of bound variables, comparing And/Or children as
// multisets. Constants are never renamed.
bool alphaEq(const Formula& f, const Formula& g);

// Canonical prefix text, e.g. (exists1 (sheba :: Human) (TEACHER sheba)).
std::string render(const Formula& f);
std::string render(const Term& t);

// Inverse of render. Throws Error(Syntax).
Formula parseFormula(std::string_view text);

// All subformulas in pre-order, the formula itself first.
std::vector<Formula> subformulas(const Formula& f);

// Names of variables and constants occurring free.
std::vector<std::string> freeNames(const Formula& f);

}  // namespace ontosem
