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
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ontosem/lexicon.hpp"
#include "ontosem/logic_form.hpp"

namespace ontosem {

struct NounPhrase {
  enum class Kind {
    ProperName,   // jon
    Indef,        // a/an ...
    Def,          // the ...
    Universal,    // any/every ...
    Possessive,   // his/her/their ..., owned by the subject
    Coordinated,  // a young and beautiful dancer
    Number,       // 90
    Bare,         // a copular complement word used as a noun: exercising
    Anaphor,      // it
    Speaker,      // me
    Adjectival,   // predicative complement: old, young and beautiful
  };

  Kind kind = Kind::Indef;
  std::string label;  // ProperName, Bare, Anaphor, Speaker
  std::int64_t number = 0;
  std::vector<std::string> adjs;   // surface order
  std::vector<std::string> adjs2;  // second conjunct of Coordinated
  std::string head;
  std::optional<std::string> compound;
  // Determiner of a Coordinated phrase (Indef, Def, ...).
  Kind determiner = Kind::Indef;

  bool hasNoun() const { return !head.empty(); }

  static NounPhrase properName(std::string label);
  static NounPhrase noun(Kind determiner, std::vector<std::string> adjs,
                         std::string head,
                         std::optional<std::string> compound = {});

  friend bool operator==(const NounPhrase&, const NounPhrase&) = default;
};

struct Copular {
  NounPhrase subject;
  NounPhrase complement;
  friend bool operator==(const Copular&, const Copular&) = default;
};

struct VerbClause {
  std::string verb;  // base form
  Tag tag = Tag::Does;
  NounPhrase object;
  friend bool operator==(const VerbClause&, const VerbClause&) = default;
};

struct Transitive {
  NounPhrase subject;
  std::string verb;
  Tag tag = Tag::Does;
  NounPhrase object;
  // "... and then he burned it": same subject, second verb.
  std::optional<VerbClause> next;
  friend bool operator==(const Transitive&, const Transitive&) = default;
};

struct PronounClause {
  std::string pronoun;  // he or they
  std::string verb;
  Tag tag = Tag::Does;
  NounPhrase object;
  std::optional<std::string> anchor;
  friend bool operator==(const PronounClause&, const PronounClause&) = default;
};

using ParseTree = std::variant<Copular, Transitive, PronounClause>;

// Lowercases, drops punctuation, splits on whitespace.
std::vector<std::string> tokenizeSentence(std::string_view sentence);

ParseTree parse(const Lexicon& lex, std::string_view sentence,
                std::optional<std::string> anchor = std::nullopt);

// A sentence the grammar maps back to the same tree.
std::string toSentence(const Lexicon& lex, const ParseTree& tree);

// Inflects a base form for the given tag (does -> 3rd person, did -> past).
std::string inflect(std::string_view base, Tag tag);

// Bracketed tree for debugging and the CLI.
std::string describe(const ParseTree& tree);

}  // namespace ontosem
