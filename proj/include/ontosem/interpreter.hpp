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

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "ontosem/error.hpp"
#include "ontosem/lexicon.hpp"
#include "ontosem/logic_form.hpp"
#include "ontosem/ontology.hpp"
#include "ontosem/parser.hpp"
#include "ontosem/trace.hpp"
#include "ontosem/types.hpp"

namespace ontosem {

struct Interpretation {
  Formula formula;
  Trace trace;
};

// A required unification failed and no disjunction absorbed it.
class InterpretationFailure : public Error {
 public:
  InterpretationFailure(const std::string& message, Trace trace,
                        std::optional<std::pair<std::string, std::string>> pair)
      : Error(ErrorCode::InterpretationFailure, message),
        trace_(std::move(trace)),
        pair_(std::move(pair)) {}

  const Trace& trace() const { return trace_; }
  // The two types whose unification failed, when there was one.
  const std::optional<std::pair<std::string, std::string>>& pair() const {
    return pair_;
  }

 private:
  Trace trace_;
  std::optional<std::pair<std::string, std::string>> pair_;
};

class Interpreter {
 public:
  Interpreter(const Ontology& onto, const Lexicon& lex)
      : onto_(onto), lex_(lex) {}

  Interpretation interpret(const ParseTree& tree) const;
  Interpretation interpret(std::string_view sentence,
                           std::optional<std::string> anchor = {}) const;

  const Ontology& ontology() const { return onto_; }
  const Lexicon& lexicon() const { return lex_; }

 private:
  const Ontology& onto_;
  const Lexicon& lex_;
};

// One modus ponens step: a universal conditional applied to an
// existential fact. Empty when the antecedent does not match.
std::optional<Interpretation> infer(const Ontology& onto,
                                    const Interpretation& universal,
                                    const Interpretation& fact);

// True when every predicate argument's bound type lies below the matching
// position of some declared signature of that predicate. On failure the
// reason is written to `why`.
bool typeCheck(const Ontology& onto, const Formula& f,
               std::string* why = nullptr);

// Predicates the engine introduces itself rather than the ontology.
bool isBuiltinPredicate(std::string_view name);

}  // namespace ontosem
